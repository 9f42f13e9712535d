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

#ifndef EPI_TOKENIZE_HPP_
#define EPI_TOKENIZE_HPP_

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "epi/normalize.hpp"

namespace epi {

inline constexpr char32_t kZwnj = 0x200C;

struct TokenList {
  std::vector<std::string> tokens;
  std::string origin;  // access_no of the item the text came from

  friend bool operator==(const TokenList&, const TokenList&) = default;
};

struct StemRule {
  std::string suffix;
  int min_stem_len = 1;  // code points that must survive the strip

  friend bool operator==(const StemRule&, const StemRule&) = default;
};

struct VariantRule {
  std::string variant;
  std::string canonical;

  friend bool operator==(const VariantRule&, const VariantRule&) = default;
};

// Lookup key shared by stop words, variants and the entity indexes: ZWNJ
// removed and ASCII letters lower-cased.
std::string match_key(std::string_view token);

class StopWords {
 public:
  StopWords() = default;
  explicit StopWords(std::span<const std::string> words);

  bool contains(std::string_view token) const;
  std::size_t size() const { return words_.size(); }
  // Words in insertion order, as loaded.
  const std::vector<std::string>& words() const { return ordered_; }

 private:
  std::unordered_set<std::string> words_;
  std::vector<std::string> ordered_;
};

// Stem and variant rules. Variants are looked up by match_key.
class RuleSet {
 public:
  RuleSet() = default;
  RuleSet(std::vector<StemRule> stems, std::vector<VariantRule> variants);

  const std::vector<StemRule>& stems() const { return stems_; }
  const std::vector<VariantRule>& variants() const { return variants_; }
  const std::string* variant_of(std::string_view token) const;
  // Stems sorted by suffix length, longest first.
  const std::vector<StemRule>& stems_longest_first() const { return by_length_; }

 private:
  std::vector<StemRule> stems_;
  std::vector<VariantRule> variants_;
  std::vector<StemRule> by_length_;
  std::unordered_map<std::string, std::size_t> variant_index_;
};

struct TextRules {
  StopWords stops;
  RuleSet rules;
};

// Splits on Unicode whitespace. ZWNJ stays inside tokens; a ZWNJ at either
// end of a token is dropped.
TokenList tokenize(const NormalizedText& nt, std::string origin = {});

TokenList remove_stop_words(const TokenList& tl, const StopWords& stops);

// One rewrite at most: an exact variant wins, else the longest stem rule whose
// strip leaves min_stem_len code points, else the token unchanged.
std::string canonicalize_token(std::string_view token, const RuleSet& rules);

// normalize_text -> tokenize -> remove_stop_words -> canonicalize_token.
// A canonical form containing spaces (a multi-word variant) contributes one
// token per word. Throws EncodingError on malformed UTF-8.
TokenList prepare(std::string_view raw, const TextRules& rules, std::string origin = {});

}  // namespace epi

#endif  // EPI_TOKENIZE_HPP_
