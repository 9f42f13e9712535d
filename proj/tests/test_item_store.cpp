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

#include <set>

#include "epi/item_store.hpp"
#include "support.hpp"

using namespace epi;

namespace {

std::vector<FeedItem> make_items(int n, int offset = 0) {
  std::vector<FeedItem> v;
  for (int i = 0; i < n; ++i) {
    FeedItem it;
    it.access_no = "acc-" + std::to_string(offset + i);
    it.source_id = "src";
    it.title = "عنوان " + std::to_string(i);
    it.link = "https://x.example/" + std::to_string(offset + i);
    it.published = test::at("2026-10-01T08:00:00Z");
    it.fetched_at = test::at("2026-10-01T09:00:00Z");
    v.push_back(it);
  }
  return v;
}

}  // namespace

TEST_CASE("ingest stores unknown items only") {
  test::TempDir dir;
  ItemStore store(dir / "items.sqlite");
  const auto ten = make_items(10);
  CHECK(store.ingest(ten) == 10);
  CHECK(store.ingest(ten) == 0);
  CHECK(store.size() == 10);

  auto mixed = make_items(4);
  auto more = make_items(6, 100);
  mixed.insert(mixed.end(), more.begin(), more.end());
  CHECK(store.ingest(mixed) == 6);
  CHECK(store.size() == 16);
}

TEST_CASE("duplicates inside one batch are stored once") {
  test::TempDir dir;
  ItemStore store(dir / "items.sqlite");
  auto v = make_items(3);
  v.push_back(v[0]);
  CHECK(store.ingest(v) == 3);
}

TEST_CASE("stored items round-trip with flag NEW") {
  test::TempDir dir;
  ItemStore store(dir / "items.sqlite");
  const auto v = make_items(3);
  store.ingest(v);
  const auto back = store.all();
  REQUIRE(back.size() == 3);
  CHECK(back == v);
  for (const auto& it : back) CHECK(it.flag == ItemFlag::New);
}

TEST_CASE("mark_processed moves items out of pending") {
  test::TempDir dir;
  ItemStore store(dir / "items.sqlite");
  store.ingest(make_items(5));
  const std::vector<std::string> done{"acc-1", "acc-3", "unknown"};
  store.mark_processed(done);
  const auto pending = store.pending();
  REQUIRE(pending.size() == 3);
  CHECK(pending[0].access_no == "acc-0");
  CHECK(pending[1].access_no == "acc-2");
  // Re-ingesting a processed item never resets its flag.
  store.ingest(make_items(5));
  CHECK(store.pending().size() == 3);
}

TEST_CASE("the store survives reopening") {
  test::TempDir dir;
  {
    ItemStore store(dir / "items.sqlite");
    store.ingest(make_items(2));
  }
  ItemStore again(dir / "items.sqlite");
  CHECK(again.size() == 2);
  CHECK(again.contains("acc-1"));
  CHECK_FALSE(again.contains("acc-9"));
}

TEST_CASE("double ingest leaves the file byte-identical") {
  test::TempDir dir;
  const auto items = make_items(8);
  {
    ItemStore once(dir / "once.sqlite");
    once.ingest(items);
  }
  {
    ItemStore twice(dir / "twice.sqlite");
    twice.ingest(items);
    twice.ingest(items);
  }
  const auto a = test::read_file(dir / "once.sqlite");
  CHECK_FALSE(a.empty());
  CHECK(a == test::read_file(dir / "twice.sqlite"));
}

TEST_CASE("no two stored items share an access_no") {
  test::TempDir dir;
  ItemStore store(dir / "items.sqlite");
  for (int round = 0; round < 5; ++round) store.ingest(make_items(7, round * 3));
  std::set<std::string> seen;
  for (const auto& it : store.all()) CHECK(seen.insert(it.access_no).second);
  CHECK(seen.size() == 19);
}
