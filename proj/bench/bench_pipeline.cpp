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

// Serial reference vs OpenMP batch drivers over a replicated corpus.

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "epi/batch.hpp"
#include "epi/feed.hpp"
#include "epi/lexicon.hpp"

namespace {

const epi::Timestamp kNow = epi::now_utc();

const epi::LexiconSet& lexicon() {
  static const epi::LexiconSet lex =
      epi::LexiconSet::load(std::filesystem::path(EPI_REPO_DATA_DIR) / "lexicon");
  return lex;
}

const std::vector<epi::FeedItem>& base_items() {
  static const std::vector<epi::FeedItem> items = [] {
    std::ifstream in(std::filesystem::path(EPI_REPO_DATA_DIR) / "eval" / "items.xml");
    std::ostringstream ss;
    ss << in.rdbuf();
    return epi::parse_rss(ss.str(), "bench", kNow);
  }();
  return items;
}

std::vector<epi::FeedItem> replicated(std::size_t n) {
  const auto& base = base_items();
  std::vector<epi::FeedItem> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = base[i % base.size()];
    it.access_no += "-" + std::to_string(i);
    out.push_back(std::move(it));
  }
  return out;
}

std::vector<std::string> texts(std::size_t n) {
  std::vector<std::string> out;
  for (const auto& it : replicated(n)) out.push_back(it.title + " " + it.description);
  return out;
}

void BM_PrepareSerial(benchmark::State& state) {
  const auto t = texts(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(epi::prepare_batch_serial(t, lexicon()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PrepareParallel(benchmark::State& state) {
  const auto t = texts(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(epi::prepare_batch(t, lexicon()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = epi::batch_threads();
}

void BM_ExtractSerial(benchmark::State& state) {
  const auto items = replicated(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(epi::extract_batch_serial(items, lexicon(), {}, kNow));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ExtractParallel(benchmark::State& state) {
  const auto items = replicated(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(epi::extract_batch(items, lexicon(), {}, kNow));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = epi::batch_threads();
}

}  // namespace

BENCHMARK(BM_PrepareSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrepareParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtractSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtractParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
