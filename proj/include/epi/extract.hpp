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

#ifndef EPI_EXTRACT_HPP_
#define EPI_EXTRACT_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "epi/event.hpp"
#include "epi/feed.hpp"
#include "epi/lexicon.hpp"

namespace epi {

class EventStore;

inline constexpr int kDedupWindowDays = 2;

struct ExtractOptions {
  // Also look for diseases in the description when the title has none.
  bool disease_fallback = false;
};

enum class ExtractOutcome {
  Events,
  NoDisease,
  DiseaseWithoutLocation,
  Failed,  // malformed text; only produced by the batch drivers
};

const char* outcome_name(ExtractOutcome o);

struct ExtractResult {
  std::string access_no;
  ExtractOutcome outcome = ExtractOutcome::NoDisease;
  bool city_from_description = false;
  std::vector<OutbreakEvent> drafts;
  std::string error;  // set when outcome == Failed

  friend bool operator==(const ExtractResult&, const ExtractResult&) = default;
};

// Title diseases x (title cities, else description cities), one draft per
// distinct pair in order of first mention. event_date is the UTC publication
// date, capped at the detection date. Does not touch the item flag; the
// caller marks the item processed whatever the outcome. Throws EncodingError
// on malformed UTF-8.
ExtractResult extract_events(const FeedItem& item, const LexiconSet& lex,
                             const ExtractOptions& opts = {}, Timestamp detected_at = now_utc());

struct DedupStats {
  std::size_t stored = 0;
  std::size_t merged = 0;
  friend bool operator==(const DedupStats&, const DedupStats&) = default;
};

// Merges each draft into the closest stored event with the same disease and
// city within window_days, else stores it. Runs as one store transaction.
DedupStats dedup_events(std::span<const OutbreakEvent> drafts, EventStore& store,
                        int window_days = kDedupWindowDays);

}  // namespace epi

#endif  // EPI_EXTRACT_HPP_
