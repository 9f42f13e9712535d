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

#ifndef EPI_FEED_HPP_
#define EPI_FEED_HPP_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "epi/clock.hpp"

namespace epi {

struct FeedSource {
  std::string source_id;
  std::string name;
  std::string url;
  std::chrono::seconds poll_interval = std::chrono::hours(24);
};

enum class ItemFlag : int { Processed = 0, New = 1 };

struct FeedItem {
  std::string access_no;
  std::string source_id;
  std::string title;
  std::string description;
  std::string link;
  Timestamp published{};
  Timestamp fetched_at{};
  ItemFlag flag = ItemFlag::New;

  friend bool operator==(const FeedItem&, const FeedItem&) = default;
};

// One FeedItem per <item>, in document order. Items whose title is empty after
// cleaning are skipped. Throws ParseError on malformed XML and StructureError
// when there is no <channel>.
std::vector<FeedItem> parse_rss(std::string_view xml, std::string_view source_id,
                                Timestamp fetched_at);

// Removes <...> tags, then decodes HTML character references. Whitespace is
// trimmed at both ends.
std::string clean_markup(std::string_view text);

// guid, else link, else hex SHA-256 of title + pubDate.
std::string derive_access_no(std::string_view guid, std::string_view link,
                             std::string_view title, std::string_view pub_date);

std::string sha256_hex(std::string_view data);

struct FetchOptions {
  std::chrono::seconds timeout{10};
};

// HTTP(S) GET of source.url, body handed to parse_rss. Any transport failure,
// non-2xx status or parse failure surfaces as FetchError.
std::vector<FeedItem> fetch_source(const FeedSource& source, const FetchOptions& opts = {},
                                   Timestamp fetched_at = now_utc());

// Parses `source_id<TAB>name<TAB>url[<TAB>poll_hours]` records. Blank lines
// and lines starting with '#' are ignored.
std::vector<FeedSource> parse_sources(std::string_view text, std::string_view origin = "sources");
std::vector<FeedSource> load_sources(const std::filesystem::path& file);

// One record; `where` labels errors (e.g. "sources.tsv:4").
FeedSource parse_source_line(std::string_view line, std::string_view where);

// True for http:// or https:// URLs with a non-empty host.
bool valid_feed_url(std::string_view url);

}  // namespace epi

#endif  // EPI_FEED_HPP_
