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

#include "epi/extract.hpp"

#include <algorithm>

#include "epi/error.hpp"
#include "epi/event_store.hpp"

namespace epi {
namespace {

template <class Entry>
std::vector<const Entry*> distinct(const std::vector<EntityMatch<Entry>>& matches) {
  std::vector<const Entry*> out;
  for (const auto& m : matches) {
    if (std::find(out.begin(), out.end(), m.entry) == out.end()) out.push_back(m.entry);
  }
  return out;
}

}  // namespace

const char* outcome_name(ExtractOutcome o) {
  switch (o) {
    case ExtractOutcome::Events: return "events";
    case ExtractOutcome::NoDisease: return "no-disease";
    case ExtractOutcome::DiseaseWithoutLocation: return "disease-without-location";
    case ExtractOutcome::Failed: return "failed";
  }
  return "?";
}

ExtractResult extract_events(const FeedItem& item, const LexiconSet& lex,
                             const ExtractOptions& opts, Timestamp detected_at) {
  ExtractResult r;
  r.access_no = item.access_no;

  const TokenList title = prepare(item.title, lex, item.access_no);
  auto diseases = distinct(lex.match_disease(title));

  TokenList description;
  bool description_ready = false;
  auto desc = [&]() -> const TokenList& {
    if (!description_ready) {
      description = prepare(item.description, lex, item.access_no);
      description_ready = true;
    }
    return description;
  };

  if (diseases.empty() && opts.disease_fallback) diseases = distinct(lex.match_disease(desc()));
  if (diseases.empty()) {
    r.outcome = ExtractOutcome::NoDisease;
    return r;
  }

  auto cities = distinct(lex.match_city(title));
  if (cities.empty()) {
    cities = distinct(lex.match_city(desc()));
    r.city_from_description = !cities.empty();
  }
  if (cities.empty()) {
    r.outcome = ExtractOutcome::DiseaseWithoutLocation;
    return r;
  }

  const Date date = std::min(date_of(item.published), date_of(detected_at));
  r.outcome = ExtractOutcome::Events;
  for (const DiseaseEntry* d : diseases) {
    for (const CityEntry* c : cities) {
      OutbreakEvent e;
      e.disease_id = d->id;
      e.city_id = c->id;
      e.lat = c->lat;
      e.lon = c->lon;
      e.event_date = date;
      e.links = {item.link};
      e.item_refs = {item.access_no};
      e.detected_at = detected_at;
      r.drafts.push_back(std::move(e));
    }
  }
  return r;
}

DedupStats dedup_events(std::span<const OutbreakEvent> drafts, EventStore& store,
                        int window_days) {
  if (window_days < 0) throw ValidationError("dedup window must not be negative");
  DedupStats stats;
  if (drafts.empty()) return stats;
  const std::chrono::days w(window_days);

  EventStore::Tx tx(store);
  for (const auto& draft : drafts) {
    auto cands = store.candidates(draft.disease_id, draft.city_id, draft.event_date - w,
                                  draft.event_date + w);
    if (cands.empty()) {
      store.put_event(draft);
      ++stats.stored;
      continue;
    }
    // Closest date wins; candidates arrive in ascending id, so ties keep the oldest.
    const auto distance = [&](const OutbreakEvent& e) {
      return std::chrono::abs(e.event_date - draft.event_date);
    };
    const auto best = std::min_element(cands.begin(), cands.end(),
                                       [&](const auto& a, const auto& b) {
                                         return distance(a) < distance(b);
                                       });
    for (std::size_t i = 0; i < draft.links.size(); ++i) {
      store.merge(best->event_id, draft.links[i], draft.item_refs[i], draft.event_date);
    }
    ++stats.merged;
  }
  tx.commit();
  return stats;
}

}  // namespace epi
