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

#include "epi/error.hpp"
#include "epi/event_store.hpp"
#include "epi/extract.hpp"
#include "support.hpp"

using namespace epi;
using std::chrono::days;

namespace {

const Timestamp kNow = test::at("2026-10-14T12:00:00Z");

FeedItem item(const std::string& acc, const std::string& title, const std::string& desc = "",
              Timestamp published = kNow) {
  FeedItem it;
  it.access_no = acc;
  it.source_id = "test";
  it.title = title;
  it.description = desc;
  it.link = "https://news.example/" + acc;
  it.published = published;
  it.fetched_at = kNow;
  return it;
}

std::set<std::pair<std::string, std::string>> pairs(const ExtractResult& r) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : r.drafts) out.emplace(e.disease_id, e.city_id);
  return out;
}

}  // namespace

TEST_CASE("title with disease and city yields one draft") {
  const auto& lex = test::shipped_lexicon();
  const auto r = extract_events(item("a1", "لاہور میں ڈینگی"), lex, {}, kNow);
  REQUIRE(r.outcome == ExtractOutcome::Events);
  REQUIRE(r.drafts.size() == 1);
  const auto& e = r.drafts[0];
  CHECK(e.disease_id == "dengue");
  CHECK(e.city_id == "lahore");
  CHECK(e.lat == Catch::Approx(31.5204));
  CHECK(e.lon == Catch::Approx(74.3587));
  CHECK(e.links == std::vector<std::string>{"https://news.example/a1"});
  CHECK(e.item_refs == std::vector<std::string>{"a1"});
  CHECK(e.event_date == date_of(kNow));
  CHECK_FALSE(r.city_from_description);
}

TEST_CASE("city falls back to the description") {
  const auto& lex = test::shipped_lexicon();
  const auto r =
      extract_events(item("a2", "ڈینگی سے تین ہلاک", "کراچی کے ہسپتال میں مریض"), lex, {}, kNow);
  CHECK(pairs(r) == std::set<std::pair<std::string, std::string>>{{"dengue", "karachi"}});
  CHECK(r.city_from_description);
}

TEST_CASE("no disease in the title yields nothing") {
  const auto& lex = test::shipped_lexicon();
  const auto r = extract_events(item("a3", "لاہور میں بارش", "ڈینگی کے مریض"), lex, {}, kNow);
  CHECK(r.outcome == ExtractOutcome::NoDisease);
  CHECK(r.drafts.empty());
}

TEST_CASE("disease without any city is reported") {
  const auto& lex = test::shipped_lexicon();
  const auto r = extract_events(item("a4", "ڈینگی کے مریضوں میں اضافہ", "ملک بھر میں"), lex, {}, kNow);
  CHECK(r.outcome == ExtractOutcome::DiseaseWithoutLocation);
  CHECK(r.drafts.empty());
}

TEST_CASE("disease fallback option searches the description") {
  const auto& lex = test::shipped_lexicon();
  const auto it = item("a5", "لاہور میں ہسپتال بھر گئے", "ڈینگی کے مریض");
  CHECK(extract_events(it, lex, {}, kNow).outcome == ExtractOutcome::NoDisease);
  ExtractOptions opts;
  opts.disease_fallback = true;
  const auto r = extract_events(it, lex, opts, kNow);
  CHECK(pairs(r) == std::set<std::pair<std::string, std::string>>{{"dengue", "lahore"}});
}

TEST_CASE("two diseases and two cities give the cross product") {
  const auto& lex = test::shipped_lexicon();
  const auto r = extract_events(item("a6", "لاہور اور کراچی میں ڈینگی اور ملیریا"), lex, {}, kNow);
  CHECK(r.drafts.size() == 4);
  CHECK(pairs(r) == std::set<std::pair<std::string, std::string>>{{"dengue", "karachi"},
                                                                  {"dengue", "lahore"},
                                                                  {"malaria", "karachi"},
                                                                  {"malaria", "lahore"}});
}

TEST_CASE("repeated mentions count once") {
  const auto& lex = test::shipped_lexicon();
  const auto r = extract_events(item("a7", "لاہور میں ڈینگی، لاہور میں ڈینگو"), lex, {}, kNow);
  CHECK(r.drafts.size() == 1);
}

TEST_CASE("event date is the publication date capped at detection") {
  const auto& lex = test::shipped_lexicon();
  auto r = extract_events(item("a8", "لاہور میں ڈینگی", "", kNow - days(3)), lex, {}, kNow);
  CHECK(r.drafts.at(0).event_date == date_of(kNow) - days(3));
  r = extract_events(item("a9", "لاہور میں ڈینگی", "", kNow + days(4)), lex, {}, kNow);
  CHECK(r.drafts.at(0).event_date == date_of(kNow));
}

TEST_CASE("extraction leaves the item flag alone") {
  const auto& lex = test::shipped_lexicon();
  const auto it = item("a10", "لاہور میں ڈینگی");
  const auto copy = it;
  extract_events(it, lex, {}, kNow);
  CHECK(it == copy);
}

TEST_CASE("dedup merges two channels on the same day") {
  const auto& lex = test::shipped_lexicon();
  test::TempDir dir;
  EventStore store(dir / "events.sqlite");
  auto a = extract_events(item("ch1", "لاہور میں ڈینگی"), lex, {}, kNow).drafts;
  auto b = extract_events(item("ch2", "لاہور میں ڈینگی کے مریض"), lex, {}, kNow).drafts;
  a.insert(a.end(), b.begin(), b.end());
  CHECK(dedup_events(a, store) == DedupStats{1, 1});
  const auto all = store.all();
  REQUIRE(all.size() == 1);
  CHECK(all[0].links.size() == 2);
  CHECK(all[0].item_refs == std::vector<std::string>{"ch1", "ch2"});
}

TEST_CASE("dedup keeps events outside the window apart") {
  const auto& lex = test::shipped_lexicon();
  test::TempDir dir;
  EventStore store(dir / "events.sqlite");
  auto a = extract_events(item("d0", "لاہور میں ڈینگی", "", kNow - days(5)), lex, {}, kNow).drafts;
  auto b = extract_events(item("d5", "لاہور میں ڈینگی"), lex, {}, kNow).drafts;
  a.insert(a.end(), b.begin(), b.end());
  CHECK(dedup_events(a, store, 2) == DedupStats{2, 0});
}

TEST_CASE("dedup keeps the earliest date and picks the closest candidate") {
  test::TempDir dir;
  EventStore store(dir / "events.sqlite");
  const auto& lex = test::shipped_lexicon();
  auto first = extract_events(item("e1", "لاہور میں ڈینگی", "", kNow - days(4)), lex, {}, kNow);
  auto second = extract_events(item("e2", "لاہور میں ڈینگی"), lex, {}, kNow);
  dedup_events(first.drafts, store);
  dedup_events(second.drafts, store);
  REQUIRE(store.size() == 2);
  auto mid = extract_events(item("e3", "لاہور میں ڈینگی", "", kNow - days(1)), lex, {}, kNow);
  CHECK(dedup_events(mid.drafts, store) == DedupStats{0, 1});
  const auto all = store.all();
  CHECK(all[0].item_refs.size() == 1);
  CHECK(all[1].item_refs == std::vector<std::string>{"e2", "e3"});
  CHECK(all[1].event_date == date_of(kNow) - days(1));
}

TEST_CASE("dedup of an empty list does nothing") {
  test::TempDir dir;
  EventStore store(dir / "events.sqlite");
  CHECK(dedup_events({}, store) == DedupStats{0, 0});
  CHECK_THROWS_AS(dedup_events({}, store, -1), ValidationError);
}

TEST_CASE("reprocessing the same items yields merges only") {
  const auto& lex = test::shipped_lexicon();
  test::TempDir dir;
  EventStore store(dir / "events.sqlite");
  std::vector<OutbreakEvent> drafts;
  for (const char* t : {"لاہور میں ڈینگی", "کراچی میں ہیضہ", "ملتان اور پشاور میں پولیو"}) {
    auto r = extract_events(item(t, t), lex, {}, kNow);
    drafts.insert(drafts.end(), r.drafts.begin(), r.drafts.end());
  }
  const auto first = dedup_events(drafts, store);
  CHECK(first.stored == 4);
  const auto before = store.all();
  const auto again = dedup_events(drafts, store);
  CHECK(again == DedupStats{0, 4});
  CHECK(store.all() == before);
}

TEST_CASE("stored coordinates match the gazetteer") {
  const auto& lex = test::shipped_lexicon();
  test::TempDir dir;
  EventStore store(dir / "events.sqlite");
  auto r = extract_events(item("g1", "اسلام آباد اور ملتان میں خسرہ"), lex, {}, kNow);
  dedup_events(r.drafts, store);
  REQUIRE(store.size() == 2);
  for (const auto& e : store.all()) {
    const auto* c = lex.city(e.city_id);
    REQUIRE(c);
    CHECK(e.lat == c->lat);
    CHECK(e.lon == c->lon);
  }
}
