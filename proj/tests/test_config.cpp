// Copyright 2026 The epi-flasher Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <httplib.h>

#include <algorithm>
#include <sstream>
#include <thread>

#include "epi/app.hpp"
#include "epi/config.hpp"
#include "epi/error.hpp"
#include "support.hpp"

using namespace epi;
using std::chrono::hours;

namespace {

const Timestamp kFixtureNow = test::at("2026-10-02T00:00:00Z");

EnvLookup env_of(std::map<std::string, std::string> vars) {
  return [vars = std::move(vars)](const char* k) -> std::optional<std::string> {
    auto it = vars.find(k);
    if (it == vars.end()) return std::nullopt;
    return it->second;
  };
}

const EnvLookup kNoEnv = [](const char*) -> std::optional<std::string> { return std::nullopt; };

// Serves the end-to-end fixture at /feed.xml on an ephemeral port.
class FeedServer {
 public:
  FeedServer() {
    body_ = test::read_file(test::test_data("e2e/feed.xml"));
    server_.Get("/feed.xml", [this](const httplib::Request&, httplib::Response& res) {
      res.set_content(body_, "application/rss+xml");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FeedServer() {
    server_.stop();
    thread_.join();
  }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/feed.xml"; }

 private:
  std::string body_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

// A port nothing listens on: bound once and released.
int dead_port() {
  httplib::Server s;
  return s.bind_to_any_port("127.0.0.1");
}

Config config_in(const test::TempDir& dir) {
  Config cfg;
  cfg.data_dir = dir / "data";
  cfg.lexicon_dir = test::repo_data("lexicon");
  cfg.fetch_timeout_seconds = 2;
  return cfg;
}

}  // namespace

TEST_CASE("config keys and sources parse") {
  const auto cfg = parse_config(
      "# settings\n"
      "DATA_DIR = store\n"
      "LISTEN_ADDR=0.0.0.0:9000\n"
      "DEDUP_WINDOW_DAYS=3\n"
      "DISEASE_FALLBACK=true\n"
      "dawn\tDawn Urdu\thttps://dawn.example/feed\t6\n"
      "bbc\tBBC Urdu\thttps://bbc.example/rss.xml\n",
      "/etc/epi");
  CHECK(cfg.data_dir == "/etc/epi/store");
  CHECK(cfg.listen_addr == "0.0.0.0:9000");
  CHECK(cfg.dedup_window_days == 3);
  CHECK(cfg.disease_fallback);
  CHECK(cfg.retention_days == 90);
  REQUIRE(cfg.sources.size() == 2);
  CHECK(cfg.sources[0].poll_interval == hours(6));
  CHECK(cfg.sources[1].poll_interval == hours(24));
  CHECK(cfg.events_db() == "/etc/epi/store/events.sqlite");
}

TEST_CASE("config errors carry the line") {
  CHECK_THROWS_WITH(parse_config("\nCOLOUR=blue\n", "", "c.conf"),
                    Catch::Matchers::ContainsSubstring("c.conf:2"));
  CHECK_THROWS_AS(parse_config("DEDUP_WINDOW_DAYS=-1\n", ""), ValidationError);
  CHECK_THROWS_AS(parse_config("RETENTION_DAYS=0\n", ""), ValidationError);
  CHECK_THROWS_AS(parse_config("DISEASE_FALLBACK=maybe\n", ""), ValidationError);
  CHECK_THROWS_AS(parse_config("just words\n", ""), ValidationError);
  CHECK_THROWS_AS(parse_config("a\tA\tftp://x/y\n", ""), ValidationError);
  CHECK_THROWS_AS(parse_config("a\tA\thttp://x/y\na\tB\thttp://x/z\n", ""), ValidationError);
  CHECK_THROWS_AS(load_config(std::filesystem::path("/nonexistent/epi.conf"), kNoEnv), LoadError);
}

TEST_CASE("environment overrides the file") {
  test::TempDir dir;
  test::write_file(dir / "epi.conf", "DATA_DIR=from-file\nLISTEN_ADDR=127.0.0.1:1\n");
  const auto cfg = load_config(dir / "epi.conf", env_of({{"LISTEN_ADDR", "127.0.0.1:8181"}}));
  CHECK(cfg.listen_addr == "127.0.0.1:8181");
  CHECK(cfg.data_dir == dir / "from-file");
  CHECK_THROWS_AS(load_config(std::nullopt, env_of({{"RETENTION_DAYS", "x"}})), ValidationError);
}

TEST_CASE("listen addresses") {
  CHECK(parse_listen_addr("127.0.0.1:8080") == std::pair<std::string, int>{"127.0.0.1", 8080});
  CHECK(parse_listen_addr("[::1]:80") == std::pair<std::string, int>{"::1", 80});
  CHECK_THROWS_AS(parse_listen_addr("localhost"), ValidationError);
  CHECK_THROWS_AS(parse_listen_addr("h:99999"), ValidationError);
}

TEST_CASE("sources are due once per interval") {
  FeedSource daily{"d", "D", "http://x/y"};
  CHECK(source_due(daily, std::nullopt, kFixtureNow));
  CHECK_FALSE(source_due(daily, kFixtureNow, kFixtureNow + hours(23)));
  CHECK(source_due(daily, kFixtureNow + hours(23), kFixtureNow + hours(25)));
}

TEST_CASE("store lock excludes a second holder") {
  test::TempDir dir;
  {
    StoreLock a(dir / ".lock");
    CHECK_THROWS_AS(StoreLock(dir / ".lock"), IoError);
  }
  CHECK_NOTHROW(StoreLock(dir / ".lock"));
}

TEST_CASE("fetch tolerates one unreachable source") {
  FeedServer server;
  test::TempDir dir;
  auto cfg = config_in(dir);
  const auto dead = "http://127.0.0.1:" + std::to_string(dead_port()) + "/feed.xml";
  cfg.sources = {{"a", "A", server.url()}, {"down", "Down", dead}, {"b", "B", server.url()}};
  std::ostringstream log;
  const auto s = cmd_fetch(cfg, log, false, kFixtureNow);
  REQUIRE(s.sources.size() == 3);
  CHECK_FALSE(s.all_failed());
  CHECK(s.sources[0].fetched == 12);
  CHECK(s.sources[0].stored == 11);
  CHECK(s.sources[1].error);
  CHECK(s.sources[2].stored == 0);
  CHECK(log.str().find("down: FAILED") != std::string::npos);

  // Successful sources are not polled again within the interval; the failed one is.
  const auto again = cmd_fetch(cfg, log, false, kFixtureNow + hours(1));
  CHECK(again.sources[0].skipped);
  CHECK_FALSE(again.sources[1].skipped);
  CHECK(again.all_failed());
}

TEST_CASE("fetch with every source unreachable fails") {
  test::TempDir dir;
  auto cfg = config_in(dir);
  const auto dead = "http://127.0.0.1:" + std::to_string(dead_port()) + "/";
  cfg.sources = {{"x", "X", dead}, {"y", "Y", dead}};
  std::ostringstream log;
  CHECK(cmd_fetch(cfg, log, true, kFixtureNow).all_failed());
}

TEST_CASE("fetch then process matches the fixture and reruns are empty") {
  FeedServer server;
  test::TempDir dir;
  auto cfg = config_in(dir);
  cfg.sources = {{"e2e", "Fixture", server.url()}};
  std::ostringstream log;
  cmd_fetch(cfg, log, true, kFixtureNow);
  const auto first = cmd_process(cfg, log, kFixtureNow);
  CHECK(first.items == 11);
  CHECK(first.stored == 5);
  CHECK(first.merged == 1);
  CHECK(first.disease_without_location == 2);
  CHECK(log.str().find("disease-without-location: ") != std::string::npos);
  CHECK(cmd_process(cfg, log, kFixtureNow) == ProcessSummary{});

  std::ostringstream dump;
  cmd_dump(cfg, dump);
  const auto lines = dump.str();
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 5);
  CHECK(cmd_purge(cfg, kFixtureNow) == 0);
  CHECK(cmd_purge(cfg, kFixtureNow + std::chrono::days(200)) == 5);
}

TEST_CASE("a bad lexicon leaves pending items untouched") {
  FeedServer server;
  test::TempDir dir;
  auto cfg = config_in(dir);
  cfg.sources = {{"e2e", "Fixture", server.url()}};
  std::ostringstream log;
  cmd_fetch(cfg, log, true, kFixtureNow);
  cfg.lexicon_dir = dir / "no-lexicon";
  CHECK_THROWS_AS(cmd_process(cfg, log, kFixtureNow), LoadError);
  ItemStore items(cfg.items_db());
  CHECK(items.pending().size() == 11);
  CHECK_FALSE(std::filesystem::exists(cfg.events_db()));
}

TEST_CASE("eval command renders the report") {
  test::TempDir dir;
  auto cfg = config_in(dir);
  EvalArgs args;
  args.gold = test::test_data("reference_tables/gold.tsv");
  args.items = test::test_data("reference_tables/items.xml");
  args.stages = "diacritics,punct,tokenize";
  args.csv = dir / "out.csv";
  const auto text = cmd_eval(cfg, args);
  CHECK(text.find("Removal of Diacritics") != std::string::npos);
  CHECK(text.find("93.5%") != std::string::npos);
  CHECK(test::read_file(dir / "out.csv").find("Overall,416,18,11,1,") != std::string::npos);
}
