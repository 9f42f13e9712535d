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

// Data-parallel drivers over many items. Each parallel routine has a serial
// twin with identical results, used as the reference in tests and benchmarks.
#ifndef EPI_BATCH_HPP_
#define EPI_BATCH_HPP_

#include <span>
#include <string>
#include <vector>

#include "epi/extract.hpp"

namespace epi {

// prepare() over every text. The first failing index (lowest position) is
// rethrown after the loop, matching the serial behavior.
std::vector<TokenList> prepare_batch(std::span<const std::string> texts, const LexiconSet& lex);
std::vector<TokenList> prepare_batch_serial(std::span<const std::string> texts,
                                            const LexiconSet& lex);

// extract_events() over every item. Encoding errors become Failed results.
std::vector<ExtractResult> extract_batch(std::span<const FeedItem> items, const LexiconSet& lex,
                                         const ExtractOptions& opts, Timestamp detected_at);
std::vector<ExtractResult> extract_batch_serial(std::span<const FeedItem> items,
                                                const LexiconSet& lex,
                                                const ExtractOptions& opts,
                                                Timestamp detected_at);

// Worker threads the parallel drivers will use.
int batch_threads();

}  // namespace epi

#endif  // EPI_BATCH_HPP_
