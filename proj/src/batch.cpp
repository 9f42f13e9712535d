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

#include "epi/batch.hpp"

#include <omp.h>

#include <exception>

#include "epi/error.hpp"

namespace epi {
namespace {

ExtractResult extract_one(const FeedItem& item, const LexiconSet& lex, const ExtractOptions& opts,
                          Timestamp detected_at) {
  try {
    return extract_events(item, lex, opts, detected_at);
  } catch (const EncodingError& e) {
    ExtractResult r;
    r.access_no = item.access_no;
    r.outcome = ExtractOutcome::Failed;
    r.error = e.what();
    return r;
  }
}

}  // namespace

int batch_threads() { return omp_get_max_threads(); }

std::vector<TokenList> prepare_batch(std::span<const std::string> texts, const LexiconSet& lex) {
  const auto n = static_cast<std::ptrdiff_t>(texts.size());
  std::vector<TokenList> out(texts.size());
  std::vector<std::exception_ptr> errors(texts.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = prepare(texts[i], lex);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<TokenList> prepare_batch_serial(std::span<const std::string> texts,
                                            const LexiconSet& lex) {
  std::vector<TokenList> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(prepare(t, lex));
  return out;
}

std::vector<ExtractResult> extract_batch(std::span<const FeedItem> items, const LexiconSet& lex,
                                         const ExtractOptions& opts, Timestamp detected_at) {
  const auto n = static_cast<std::ptrdiff_t>(items.size());
  std::vector<ExtractResult> out(items.size());
  std::vector<std::exception_ptr> errors(items.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = extract_one(items[i], lex, opts, detected_at);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<ExtractResult> extract_batch_serial(std::span<const FeedItem> items,
                                                const LexiconSet& lex,
                                                const ExtractOptions& opts,
                                                Timestamp detected_at) {
  std::vector<ExtractResult> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(extract_one(item, lex, opts, detected_at));
  return out;
}

}  // namespace epi
