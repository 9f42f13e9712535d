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

#include "epi/batch.hpp"
#include "epi/error.hpp"
#include "support.hpp"

using namespace epi;

namespace {

const Timestamp kNow = test::at("2026-10-14T12:00:00Z");

std::vector<FeedItem> corpus(const char* rel, bool repo) {
  const auto path = repo ? test::repo_data(rel) : test::test_data(rel);
  return parse_rss(test::read_file(path), "corpus", kNow);
}

std::vector<FeedItem> all_corpora() {
  std::vector<FeedItem> out;
  for (auto v : {corpus("eval/items.xml", true), corpus("reference_tables/items.xml", false),
                 corpus("e2e/feed.xml", false)}) {
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace

TEST_CASE("parallel extraction equals the serial reference") {
  const auto& lex = test::shipped_lexicon();
  auto items = all_corpora();
  REQUIRE(items.size() > 100);
  FeedItem bad;
  bad.access_no = "broken";
  bad.title = std::string("ڈینگی \xC3\x28 لاہور");
  bad.link = "https://x.example/broken";
  bad.published = kNow;
  items.insert(items.begin() + 7, bad);

  ExtractOptions opts;
  const auto par = extract_batch(items, lex, opts, kNow);
  const auto ser = extract_batch_serial(items, lex, opts, kNow);
  REQUIRE(par.size() == items.size());
  CHECK(par == ser);
  CHECK(par[7].outcome == ExtractOutcome::Failed);
  CHECK_FALSE(par[7].error.empty());
  for (std::size_t i = 0; i < items.size(); ++i) CHECK(par[i].access_no == items[i].access_no);
}

TEST_CASE("parallel prepare equals the serial reference") {
  const auto& lex = test::shipped_lexicon();
  std::vector<std::string> texts;
  for (const auto& it : all_corpora()) {
    texts.push_back(it.title);
    texts.push_back(it.description);
  }
  CHECK(prepare_batch(texts, lex) == prepare_batch_serial(texts, lex));
}

TEST_CASE("prepare batch reports the first malformed text") {
  const auto& lex = test::shipped_lexicon();
  std::vector<std::string> texts(64, "لاہور میں ڈینگی");
  texts[40] = "\xFF";
  texts[50] = "\xC3";
  CHECK_THROWS_AS(prepare_batch(texts, lex), EncodingError);
  CHECK_THROWS_AS(prepare_batch_serial(texts, lex), EncodingError);
}

TEST_CASE("empty batches") {
  const auto& lex = test::shipped_lexicon();
  CHECK(extract_batch({}, lex, {}, kNow).empty());
  CHECK(prepare_batch({}, lex).empty());
  CHECK(batch_threads() >= 1);
}
