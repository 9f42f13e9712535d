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

#include "epi/tokenize.hpp"

#include <algorithm>

#include "epi/error.hpp"
#include "epi/utf8.hpp"

namespace epi {
namespace {

constexpr std::string_view kZwnjUtf8 = "\xE2\x80\x8C";

std::string_view trim_zwnj(std::string_view s) {
  while (s.starts_with(kZwnjUtf8)) s.remove_prefix(kZwnjUtf8.size());
  while (s.ends_with(kZwnjUtf8)) s.remove_suffix(kZwnjUtf8.size());
  return s;
}

void split_words(std::string_view s, std::vector<std::string>& out) {
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(' ', i);
    if (j == std::string_view::npos) j = s.size();
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j + 1;
  }
}

}  // namespace

std::string match_key(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (std::size_t i = 0; i < token.size();) {
    if (token.substr(i).starts_with(kZwnjUtf8)) {
      i += kZwnjUtf8.size();
      continue;
    }
    char c = token[i++];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }
  return out;
}

StopWords::StopWords(std::span<const std::string> words) {
  for (const auto& w : words) {
    if (words_.insert(match_key(w)).second) ordered_.push_back(w);
  }
}

bool StopWords::contains(std::string_view token) const {
  return words_.contains(match_key(token));
}

RuleSet::RuleSet(std::vector<StemRule> stems, std::vector<VariantRule> variants)
    : stems_(std::move(stems)), variants_(std::move(variants)), by_length_(stems_) {
  std::stable_sort(by_length_.begin(), by_length_.end(), [](const StemRule& a, const StemRule& b) {
    return utf8::length(a.suffix) > utf8::length(b.suffix);
  });
  for (std::size_t i = 0; i < variants_.size(); ++i) {
    variant_index_.emplace(match_key(variants_[i].variant), i);
  }
}

const std::string* RuleSet::variant_of(std::string_view token) const {
  auto it = variant_index_.find(match_key(token));
  return it == variant_index_.end() ? nullptr : &variants_[it->second].canonical;
}

TokenList tokenize(const NormalizedText& nt, std::string origin) {
  TokenList tl;
  tl.origin = std::move(origin);
  std::string current;
  auto flush = [&] {
    std::string_view t = trim_zwnj(current);
    if (!t.empty()) tl.tokens.emplace_back(t);
    current.clear();
  };
  for (char32_t c : utf8::decode(nt.text)) {
    if (is_whitespace(c)) {
      flush();
    } else {
      utf8::append(current, c);
    }
  }
  flush();
  return tl;
}

TokenList remove_stop_words(const TokenList& tl, const StopWords& stops) {
  TokenList out;
  out.origin = tl.origin;
  for (const auto& t : tl.tokens) {
    if (!stops.contains(t)) out.tokens.push_back(t);
  }
  return out;
}

std::string canonicalize_token(std::string_view token, const RuleSet& rules) {
  if (const std::string* canonical = rules.variant_of(token)) return *canonical;
  const std::size_t len = utf8::length(token);
  for (const auto& rule : rules.stems_longest_first()) {
    const std::size_t suffix_len = utf8::length(rule.suffix);
    if (!token.ends_with(rule.suffix)) continue;
    if (len < suffix_len + static_cast<std::size_t>(rule.min_stem_len)) continue;
    return std::string(token.substr(0, token.size() - rule.suffix.size()));
  }
  return std::string(token);
}

TokenList prepare(std::string_view raw, const TextRules& rules, std::string origin) {
  const TokenList filtered =
      remove_stop_words(tokenize(normalize_text(raw), std::move(origin)), rules.stops);
  TokenList out;
  out.origin = filtered.origin;
  out.tokens.reserve(filtered.tokens.size());
  for (const auto& t : filtered.tokens) {
    split_words(canonicalize_token(t, rules.rules), out.tokens);
  }
  return out;
}

}  // namespace epi
