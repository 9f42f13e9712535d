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

#ifndef EPI_UTF8_HPP_
#define EPI_UTF8_HPP_

#include <string>
#include <string_view>

namespace epi::utf8 {

// Throws EncodingError on malformed input.
std::u32string decode(std::string_view s);
std::string encode(std::u32string_view s);
void append(std::string& out, char32_t c);

bool valid(std::string_view s);
std::size_t length(std::string_view s);

std::string code_point_label(char32_t c);  // "U+064E"

}  // namespace epi::utf8

#endif  // EPI_UTF8_HPP_
