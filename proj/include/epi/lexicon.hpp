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

#ifndef EPI_LEXICON_HPP_
#define EPI_LEXICON_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "epi/tokenize.hpp"

namespace epi {

// Longest name, in tokens, that the entity indexes will match.
inline constexpr std::size_t kMaxNgram = 3;

struct GeoBox {
  double min_lat, max_lat, min_lon, max_lon;
  bool contains(double lat, double lon) const {
    return lat >= min_lat && lat <= max_lat && lon >= min_lon && lon <= max_lon;
  }
};

inline constexpr GeoBox kPakistanBox{23.5, 37.5, 60.5, 77.5};

struct GeoPoint {
  double lat = 0;
  double lon = 0;
  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

struct DiseaseEntry {
  std::string id;
  std::string urdu;
  std::string english;
  std::vector<std::string> aliases;
  friend bool operator==(const DiseaseEntry&, const DiseaseEntry&) = default;
};

struct CityEntry {
  std::string id;
  std::string urdu;
  std::string english;
  std::vector<std::string> aliases;
  double lat = 0;
  double lon = 0;
  friend bool operator==(const CityEntry&, const CityEntry&) = default;
};

inline GeoPoint geo_of(const CityEntry& city) { return {city.lat, city.lon}; }

// Half-open token range [begin, end).
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

template <class Entry>
struct EntityMatch {
  const Entry* entry = nullptr;
  TokenSpan span;
};

using DiseaseMatch = EntityMatch<DiseaseEntry>;
using CityMatch = EntityMatch<CityEntry>;

// Maps joined match keys ("w1 w2") to entry positions and runs the greedy
// longest-match scan.
class EntityIndex {
 public:
  // Returns the entry already holding key, or npos after inserting it.
  std::size_t insert(std::string key, std::size_t entry);
  std::size_t find(std::string_view key) const;
  std::size_t size() const { return keys_.size(); }

  struct Hit {
    std::size_t entry;
    TokenSpan span;
  };
  std::vector<Hit> scan(std::span<const std::string> tokens) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::unordered_map<std::string, std::size_t> keys_;
};

// The four reference dictionaries. Immutable once built.
class LexiconSet {
 public:
  // dir holds stopwords.txt, stems.tsv, variants.tsv, diseases.tsv, cities.tsv.
  static LexiconSet load(const std::filesystem::path& dir);
  // Validates and indexes in-memory content; same checks as load().
  static LexiconSet build(std::vector<std::string> stop_words, std::vector<StemRule> stems,
                          std::vector<VariantRule> variants, std::vector<DiseaseEntry> diseases,
                          std::vector<CityEntry> cities);

  // Writes the five files in the format load() reads.
  void save(const std::filesystem::path& dir) const;

  const TextRules& text_rules() const { return text_; }
  const StopWords& stops() const { return text_.stops; }
  const RuleSet& rules() const { return text_.rules; }
  const std::vector<DiseaseEntry>& diseases() const { return diseases_; }
  const std::vector<CityEntry>& cities() const { return cities_; }

  const DiseaseEntry* disease(std::string_view id) const;
  const CityEntry* city(std::string_view id) const;

  // Resolves a surface name (canonical or alias) through the match index.
  const DiseaseEntry* find_disease(std::string_view name) const;
  const CityEntry* find_city(std::string_view name) const;

  std::vector<DiseaseMatch> match_disease(const TokenList& tokens) const;
  std::vector<CityMatch> match_city(const TokenList& tokens) const;

  // Index keys a surface name is registered under (one or two forms).
  std::vector<std::string> keys_for(std::string_view name) const;

  friend bool operator==(const LexiconSet& a, const LexiconSet& b);

 private:
  struct Source;
  static LexiconSet assemble(std::vector<std::string> stop_words, std::vector<StemRule> stems,
                             std::vector<VariantRule> variants,
                             std::vector<DiseaseEntry> diseases, std::vector<CityEntry> cities,
                             const Source& where);

  TextRules text_;
  std::vector<DiseaseEntry> diseases_;
  std::vector<CityEntry> cities_;
  std::unordered_map<std::string, std::size_t> disease_ids_;
  std::unordered_map<std::string, std::size_t> city_ids_;
  EntityIndex disease_index_;
  EntityIndex city_index_;
};

inline std::vector<DiseaseMatch> match_disease(const TokenList& tokens, const LexiconSet& lex) {
  return lex.match_disease(tokens);
}
inline std::vector<CityMatch> match_city(const TokenList& tokens, const LexiconSet& lex) {
  return lex.match_city(tokens);
}
inline TokenList prepare(std::string_view raw, const LexiconSet& lex, std::string origin = {}) {
  return prepare(raw, lex.text_rules(), std::move(origin));
}

}  // namespace epi

#endif  // EPI_LEXICON_HPP_
