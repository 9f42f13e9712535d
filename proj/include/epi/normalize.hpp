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

#ifndef EPI_NORMALIZE_HPP_
#define EPI_NORMALIZE_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

// Character-level cleaning of Urdu text ahead of tokenization.
//
// The removable sets are fixed constants so evaluation can audit them; the
// same lists ship as data/lexicon/diacritics.tsv and punctuation.tsv.
//
//   diacritics   U+064B..U+065F (tanween, zabar, zer, pesh, shad, jazm...)
//                and U+0670 superscript alef. Deleted.
//   punctuation  ! " ' ( ) , - . : ; ? [ ] and the typographic quotes, dashes
//                and ellipsis, plus the Urdu marks ، ؛ ؟ ۔. Replaced by a
//                single space; whitespace runs collapse and the ends are trimmed.

namespace epi {

enum class NormStage { Nfc, Diacritics, Punct };

struct NormalizedText {
  std::string text;
  std::vector<NormStage> applied;

  bool has(NormStage s) const;
  bool fully_normalized() const;
  friend bool operator==(const NormalizedText&, const NormalizedText&) = default;
};

const char* stage_tag(NormStage s);

bool is_diacritic(char32_t c);
bool is_punctuation(char32_t c);
bool is_whitespace(char32_t c);

std::span<const char32_t> diacritic_set();
std::span<const char32_t> punctuation_set();

// Canonical composition (NFC). Throws EncodingError on malformed UTF-8.
std::string nfc(std::string_view text);

// Both removals are total: malformed byte runs are copied through untouched.
std::string remove_diacritics(std::string_view text);
std::string remove_punctuation(std::string_view text);

// nfc -> remove_diacritics -> remove_punctuation.
NormalizedText normalize_text(std::string_view text);

}  // namespace epi

#endif  // EPI_NORMALIZE_HPP_
