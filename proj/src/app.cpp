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

#include "epi/app.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <atomic>
#include <csignal>
#include <fstream>
#include <future>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <thread>

#include "epi/api.hpp"
#include "epi/batch.hpp"
#include "epi/error.hpp"
#include "epi/eval.hpp"

namespace epi {
namespace fs = std::filesystem;

StoreLock::StoreLock(const fs::path& lock_file) {
  if (lock_file.has_parent_path()) fs::create_directories(lock_file.parent_path());
  fd_ = ::open(lock_file.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
  if (fd_ < 0) throw IoError("cannot open lock file " + lock_file.string());
  if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
    ::close(fd_);
    fd_ = -1;
    throw IoError("store is locked by another command (" + lock_file.string() + ")");
  }
}

StoreLock::~StoreLock() {
  if (fd_ >= 0) {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
}

namespace {

using State = std::map<std::string, Timestamp>;

State read_state(const fs::path& file) {
  State st;
  std::ifstream in(file);
  if (!in) return st;
  try {
    const auto j = nlohmann::json::parse(in);
    for (const auto& [id, v] : j.items()) {
      if (auto t = parse_iso8601(v.get<std::string>())) st.emplace(id, *t);
    }
  } catch (const nlohmann::json::exception&) {
    // A damaged state file only means every source is due.
    st.clear();
  }
  return st;
}

void write_state(const fs::path& file, const State& st) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [id, t] : st) j[id] = format_timestamp(t);
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << j.dump(2) << '\n';
    if (!out) throw IoError("cannot write " + tmp.string());
  }
  fs::rename(tmp, file);
}

}  // namespace

bool FetchSummary::all_failed() const {
  std::size_t attempted = 0, failed = 0;
  for (const auto& s : sources) {
    if (s.skipped) continue;
    ++attempted;
    if (s.error) ++failed;
  }
  return attempted > 0 && failed == attempted;
}

bool source_due(const FeedSource& src, std::optional<Timestamp> last, Timestamp now) {
  if (!last) return true;
  const auto interval = std::max<std::int64_t>(1, src.poll_interval.count());
  auto bucket = [interval](Timestamp t) {
    const auto s = t.time_since_epoch().count();
    return s >= 0 ? s / interval : (s - interval + 1) / interval;
  };
  return bucket(now) != bucket(*last);
}

FetchSummary cmd_fetch(const Config& cfg, std::ostream& log, bool force, Timestamp now) {
  StoreLock lock(cfg.lock_file());
  State state = read_state(cfg.fetch_state());
  const FetchOptions opts{std::chrono::seconds(cfg.fetch_timeout_seconds)};

  FetchSummary summary;
  std::vector<std::future<std::vector<FeedItem>>> jobs;
  for (const auto& src : cfg.sources) {
    SourceResult r;
    r.source_id = src.source_id;
    auto it = state.find(src.source_id);
    const std::optional<Timestamp> last =
        it == state.end() ? std::nullopt : std::optional<Timestamp>(it->second);
    r.skipped = !force && !source_due(src, last, now);
    summary.sources.push_back(r);
    jobs.push_back(r.skipped ? std::future<std::vector<FeedItem>>{}
                             : std::async(std::launch::async, [&src, opts, now] {
                                 return fetch_source(src, opts, now);
                               }));
  }

  ItemStore items(cfg.items_db());
  for (std::size_t i = 0; i < cfg.sources.size(); ++i) {
    auto& r = summary.sources[i];
    if (r.skipped) {
      log << r.source_id << ": skipped, already polled this interval\n";
      continue;
    }
    try {
      const auto got = jobs[i].get();
      r.fetched = got.size();
      r.stored = items.ingest(got);
      state[r.source_id] = now;
      log << r.source_id << ": fetched " << r.fetched << ", new " << r.stored << "\n";
    } catch (const FetchError& e) {
      r.error = e.what();
      log << r.source_id << ": FAILED " << e.what() << "\n";
    }
  }
  write_state(cfg.fetch_state(), state);
  return summary;
}

ProcessSummary process_pending(ItemStore& items, EventStore& events, const LexiconSet& lex,
                               const ProcessOptions& opts, std::ostream& log, Timestamp now) {
  ProcessSummary s;
  const auto pending = items.pending();
  s.items = pending.size();
  if (pending.empty()) return s;

  const auto results = opts.parallel ? extract_batch(pending, lex, opts.extract, now)
                                     : extract_batch_serial(pending, lex, opts.extract, now);
  std::vector<OutbreakEvent> drafts;
  std::vector<std::string> done;
  for (const auto& r : results) {
    done.push_back(r.access_no);
    switch (r.outcome) {
      case ExtractOutcome::Events:
        drafts.insert(drafts.end(), r.drafts.begin(), r.drafts.end());
        break;
      case ExtractOutcome::NoDisease:
        ++s.no_disease;
        break;
      case ExtractOutcome::DiseaseWithoutLocation:
        ++s.disease_without_location;
        log << "disease-without-location: " << r.access_no << "\n";
        break;
      case ExtractOutcome::Failed:
        ++s.failed;
        log << "skipped " << r.access_no << ": " << r.error << "\n";
        break;
    }
  }
  const DedupStats d = dedup_events(drafts, events, opts.window_days);
  s.stored = d.stored;
  s.merged = d.merged;
  items.mark_processed(done);
  return s;
}

ProcessSummary cmd_process(const Config& cfg, std::ostream& log, Timestamp now) {
  const LexiconSet lex = LexiconSet::load(cfg.lexicon_dir);
  StoreLock lock(cfg.lock_file());
  ItemStore items(cfg.items_db());
  EventStore events(cfg.events_db());
  ProcessOptions opts;
  opts.extract.disease_fallback = cfg.disease_fallback;
  opts.window_days = cfg.dedup_window_days;
  return process_pending(items, events, lex, opts, log, now);
}

std::size_t cmd_purge(const Config& cfg, Timestamp now) {
  StoreLock lock(cfg.lock_file());
  EventStore events(cfg.events_db());
  return events.purge_expired(now, cfg.retention_days);
}

void cmd_dump(const Config& cfg, std::ostream& out) {
  EventStore events(cfg.events_db());
  events.dump(out);
}

std::string cmd_eval(const Config& cfg, const EvalArgs& args) {
  const LexiconSet lex = LexiconSet::load(cfg.lexicon_dir);
  const auto stages = parse_stage_list(args.stages);
  const auto gold = load_gold(args.gold);
  std::ifstream in(args.items, std::ios::binary);
  if (!in) throw LoadError("cannot open " + args.items.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const auto items = parse_rss(ss.str(), args.items.stem().string(), now_utc());

  std::vector<StageReport> rows;
  for (Stage s : stages) rows.push_back(score_stage(s, items, gold, lex));
  const Report r = report(std::move(rows));
  if (args.csv) {
    std::ofstream out(*args.csv, std::ios::trunc);
    if (!out) throw IoError("cannot write " + args.csv->string());
    out << format_csv(r);
  }
  return format_text(r);
}

namespace {
std::atomic<bool> g_stop{false};
extern "C" void on_signal(int) { g_stop = true; }
}  // namespace

void cmd_serve(const Config& cfg, std::ostream& log) {
  const LexiconSet lex = LexiconSet::load(cfg.lexicon_dir);
  const auto [host, port] = parse_listen_addr(cfg.listen_addr);
  EventStore events(cfg.events_db());
  ApiService service(events, lex);
  ApiServer server(service);
  const int bound = server.bind(host, port);
  log << "listening on " << host << ":" << bound << std::endl;

  g_stop = false;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::thread watcher([&server] {
    while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
    server.stop();
  });
  server.listen();
  g_stop = true;
  watcher.join();
}

}  // namespace epi
