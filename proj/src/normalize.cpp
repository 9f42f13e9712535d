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

#include "epi/normalize.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <array>

#include "epi/error.hpp"
#include "epi/utf8.hpp"

namespace epi {
namespace {

constexpr auto kDiacritics = [] {
  std::array<char32_t, 0x0660 - 0x064B + 1> out{};
  std::size_t i = 0;
  for (char32_t c = 0x064B; c < 0x0660; ++c) out[i++] = c;
  out[i] = 0x0670;
  return out;
}();

constexpr std::array<char32_t, 24> kPunctuation = {
    U'!', U'"', U'\'', U'(', U')', U',', U'-', U'.', U':', U';', U'?', U'[', U']',
    0x060C,  // Arabic comma
    0x061B,  // Arabic semicolon
    0x061F,  // Arabic question mark
    0x06D4,  // Urdu full stop
    0x2013,  // en dash
    0x2014,  // em dash
    0x2018, 0x2019, 0x201C, 0x201D,
    0x2026,  // ellipsis
};
static_assert(std::is_sorted(kPunctuation.begin(), kPunctuation.end()));

// Walks s, handing each well-formed code point to on_cp and each malformed
// byte run to on_raw.
template <class OnCp, class OnRaw>
void scan(std::string_view s, OnCp&& on_cp, OnRaw&& on_raw) {
  const auto* p = reinterpret_cast<const uint8_t*>(s.data());
  const int32_t n = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < n) {
    const int32_t at = i;
    UChar32 c;
    U8_NEXT(p, i, n, c);
    if (c < 0) {
      on_raw(s.substr(static_cast<std::size_t>(at), static_cast<std::size_t>(i - at)));
    } else {
      on_cp(static_cast<char32_t>(c), s.substr(static_cast<std::size_t>(at),
                                               static_cast<std::size_t>(i - at)));
    }
  }
}

}  // namespace

bool NormalizedText::has(NormStage s) const {
  return std::find(applied.begin(), applied.end(), s) != applied.end();
}

bool NormalizedText::fully_normalized() const {
  return applied == std::vector<NormStage>{NormStage::Nfc, NormStage::Diacritics, NormStage::Punct};
}

const char* stage_tag(NormStage s) {
  switch (s) {
    case NormStage::Nfc: return "NFC";
    case NormStage::Diacritics: return "DIACRITICS";
    case NormStage::Punct: return "PUNCT";
  }
  return "?";
}

bool is_diacritic(char32_t c) { return (c >= 0x064B && c <= 0x065F) || c == 0x0670; }

bool is_punctuation(char32_t c) {
  return std::binary_search(kPunctuation.begin(), kPunctuation.end(), c);
}

bool is_whitespace(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

std::span<const char32_t> diacritic_set() { return kDiacritics; }
std::span<const char32_t> punctuation_set() { return kPunctuation; }

std::string nfc(std::string_view text) {
  if (!utf8::valid(text)) throw EncodingError("input is not valid UTF-8");
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error(std::string("ICU NFC unavailable: ") + u_errorName(status));
  const auto src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString dst = normalizer->normalize(src, status);
  if (U_FAILURE(status)) throw Error(std::string("NFC failed: ") + u_errorName(status));
  std::string out;
  dst.toUTF8String(out);
  return out;
}

std::string remove_diacritics(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  scan(
      text,
      [&](char32_t c, std::string_view bytes) {
        if (!is_diacritic(c)) out.append(bytes);
      },
      [&](std::string_view raw) { out.append(raw); });
  return out;
}

std::string remove_punctuation(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  auto emit = [&](std::string_view bytes) {
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.append(bytes);
  };
  scan(
      text,
      [&](char32_t c, std::string_view bytes) {
        if (is_punctuation(c) || is_whitespace(c)) {
          pending_space = true;
        } else {
          emit(bytes);
        }
      },
      emit);
  return out;
}

NormalizedText normalize_text(std::string_view text) {
  NormalizedText nt;
  nt.text = nfc(text);
  nt.applied.push_back(NormStage::Nfc);
  nt.text = remove_diacritics(nt.text);
  nt.applied.push_back(NormStage::Diacritics);
  nt.text = remove_punctuation(nt.text);
  nt.applied.push_back(NormStage::Punct);
  return nt;
}

}  // namespace epi
