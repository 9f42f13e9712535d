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

#include "epi/feed.hpp"

#include <expat.h>
#include <httplib.h>
#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "epi/error.hpp"
#include "epi/utf8.hpp"

namespace epi {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

// Collapses ASCII whitespace runs to one space and trims.
std::string squeeze(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending = false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      pending = !out.empty();
      continue;
    }
    if (pending) out += ' ';
    pending = false;
    out += c;
  }
  return out;
}

const std::unordered_map<std::string_view, char32_t>& named_entities() {
  static const std::unordered_map<std::string_view, char32_t> table{
      {"amp", U'&'},      {"lt", U'<'},       {"gt", U'>'},       {"quot", U'"'},
      {"apos", U'\''},    {"nbsp", 0x00A0},   {"ndash", 0x2013},  {"mdash", 0x2014},
      {"lsquo", 0x2018},  {"rsquo", 0x2019},  {"ldquo", 0x201C},  {"rdquo", 0x201D},
      {"laquo", 0x00AB},  {"raquo", 0x00BB},  {"hellip", 0x2026}, {"bull", 0x2022},
      {"middot", 0x00B7}, {"copy", 0x00A9},   {"reg", 0x00AE},    {"trade", 0x2122},
      {"shy", 0x00AD},    {"zwnj", 0x200C},   {"zwj", 0x200D},    {"lrm", 0x200E},
      {"rlm", 0x200F},    {"deg", 0x00B0},    {"times", 0x00D7},  {"thinsp", 0x2009},
      {"ensp", 0x2002},   {"emsp", 0x2003},
  };
  return table;
}

bool valid_scalar(char32_t cp) { return cp <= 0x10FFFF && !(cp >= 0xD800 && cp <= 0xDFFF); }

std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out += s[i++];
      continue;
    }
    const auto semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out += s[i++];
      continue;
    }
    const std::string_view body = s.substr(i + 1, semi - i - 1);
    std::optional<char32_t> cp;
    if (body.size() > 1 && body[0] == '#') {
      const bool hex = body[1] == 'x' || body[1] == 'X';
      const auto digits = body.substr(hex ? 2 : 1);
      std::uint32_t v = 0;
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v, hex ? 16 : 10);
      if (!digits.empty() && ec == std::errc() && p == digits.data() + digits.size()) {
        cp = valid_scalar(v) && v != 0 ? static_cast<char32_t>(v) : char32_t{0xFFFD};
      }
    } else if (auto it = named_entities().find(body); it != named_entities().end()) {
      cp = it->second;
    }
    if (!cp) {
      out += s[i++];
      continue;
    }
    utf8::append(out, *cp);
    i = semi + 1;
  }
  return out;
}

bool starts_tag(std::string_view s, std::size_t i) {
  if (i + 1 >= s.size()) return false;
  const char c = s[i + 1];
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '/' || c == '!' || c == '?';
}

// Tags become a space so adjacent block elements do not fuse words.
std::string strip_tags(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '<' && starts_tag(s, i)) {
      std::size_t end;
      if (s.substr(i, 4) == "<!--") {
        end = s.find("-->", i + 4);
        if (end != std::string_view::npos) end += 2;
      } else {
        end = s.find('>', i + 1);
      }
      if (end != std::string_view::npos) {
        out += ' ';
        i = end + 1;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

enum class Field { None, Title, Description, Link, PubDate, Guid };

Field field_of(std::string_view name) {
  if (name == "title") return Field::Title;
  if (name == "description") return Field::Description;
  if (name == "link") return Field::Link;
  if (name == "pubDate") return Field::PubDate;
  if (name == "guid") return Field::Guid;
  return Field::None;
}

struct RawItem {
  std::string title, description, link, pub_date, guid;
};

struct ParseState {
  int depth = 0;
  int item_depth = -1;
  int field_depth = -1;
  Field field = Field::None;
  bool saw_channel = false;
  std::string buf;
  RawItem current;
  std::vector<RawItem> items;
};

void XMLCALL on_start(void* data, const XML_Char* name, const XML_Char**) {
  auto& st = *static_cast<ParseState*>(data);
  ++st.depth;
  const std::string_view n(name);
  if (n == "channel") st.saw_channel = true;
  if (st.item_depth < 0) {
    if (n == "item") {
      st.item_depth = st.depth;
      st.current = {};
    }
    return;
  }
  if (st.field == Field::None && st.depth == st.item_depth + 1) {
    st.field = field_of(n);
    if (st.field != Field::None) {
      st.field_depth = st.depth;
      st.buf.clear();
    }
  }
}

void XMLCALL on_end(void* data, const XML_Char*) {
  auto& st = *static_cast<ParseState*>(data);
  if (st.field != Field::None && st.depth == st.field_depth) {
    std::string* slot = nullptr;
    switch (st.field) {
      case Field::Title: slot = &st.current.title; break;
      case Field::Description: slot = &st.current.description; break;
      case Field::Link: slot = &st.current.link; break;
      case Field::PubDate: slot = &st.current.pub_date; break;
      case Field::Guid: slot = &st.current.guid; break;
      case Field::None: break;
    }
    if (slot) *slot = std::move(st.buf);
    st.buf.clear();
    st.field = Field::None;
  }
  if (st.depth == st.item_depth) {
    st.items.push_back(std::move(st.current));
    st.item_depth = -1;
  }
  --st.depth;
}

void XMLCALL on_text(void* data, const XML_Char* s, int len) {
  auto& st = *static_cast<ParseState*>(data);
  if (st.field != Field::None) st.buf.append(s, static_cast<std::size_t>(len));
}

struct ParserDeleter {
  void operator()(XML_Parser p) const { XML_ParserFree(p); }
};

std::vector<RawItem> parse_raw(std::string_view xml) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, ParserDeleter> parser(XML_ParserCreate(nullptr));
  if (!parser) throw std::bad_alloc();
  ParseState st;
  XML_SetUserData(parser.get(), &st);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);

  constexpr std::size_t kChunk = 1 << 20;
  std::size_t pos = 0;
  do {
    const std::size_t n = std::min(kChunk, xml.size() - pos);
    const bool last = pos + n == xml.size();
    if (XML_Parse(parser.get(), xml.data() + pos, static_cast<int>(n), last) == XML_STATUS_ERROR) {
      const auto offset = XML_GetCurrentByteIndex(parser.get());
      throw ParseError(std::string("malformed XML: ") + XML_ErrorString(XML_GetErrorCode(parser.get())),
                       offset < 0 ? 0 : static_cast<std::size_t>(offset));
    }
    pos += n;
  } while (pos < xml.size());

  if (!st.saw_channel) throw StructureError("not an RSS 2.0 document: no <channel> element");
  return std::move(st.items);
}

Timestamp published_or(std::string_view pub_date, Timestamp fallback) {
  const auto s = trim(pub_date);
  if (s.empty()) return fallback;
  if (auto t = parse_rfc822(s)) return *t;
  if (auto t = parse_iso8601(s)) return *t;
  return fallback;
}

}  // namespace

std::string clean_markup(std::string_view text) { return squeeze(decode_entities(strip_tags(text))); }

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xF];
  }
  return out;
}

std::string derive_access_no(std::string_view guid, std::string_view link, std::string_view title,
                             std::string_view pub_date) {
  if (auto g = trim(guid); !g.empty()) return std::string(g);
  if (auto l = trim(link); !l.empty()) return std::string(l);
  std::string key(title);
  key += trim(pub_date);
  return sha256_hex(key);
}

std::vector<FeedItem> parse_rss(std::string_view xml, std::string_view source_id,
                                Timestamp fetched_at) {
  std::vector<FeedItem> out;
  for (auto& raw : parse_raw(xml)) {
    FeedItem item;
    item.title = clean_markup(raw.title);
    if (item.title.empty()) continue;
    item.description = clean_markup(raw.description);
    item.link = std::string(trim(raw.link));
    item.access_no = derive_access_no(raw.guid, raw.link, item.title, raw.pub_date);
    item.source_id = std::string(source_id);
    item.published = published_or(raw.pub_date, fetched_at);
    item.fetched_at = fetched_at;
    item.flag = ItemFlag::New;
    out.push_back(std::move(item));
  }
  return out;
}

bool valid_feed_url(std::string_view url) {
  std::string_view rest;
  if (url.starts_with("http://")) {
    rest = url.substr(7);
  } else if (url.starts_with("https://")) {
    rest = url.substr(8);
  } else {
    return false;
  }
  const auto host_end = rest.find_first_of("/?#");
  const auto authority = rest.substr(0, host_end);
  if (authority.empty() || authority.find_first_of(" \t@") != std::string_view::npos) return false;
  const auto colon = authority.rfind(':');
  if (colon != std::string_view::npos && authority.find(']') == std::string_view::npos) {
    const auto port = authority.substr(colon + 1);
    if (colon == 0 || port.empty() || port.find_first_not_of("0123456789") != std::string_view::npos) {
      return false;
    }
  }
  return url.find_first_of(" \t\r\n") == std::string_view::npos;
}

std::vector<FeedItem> fetch_source(const FeedSource& source, const FetchOptions& opts,
                                   Timestamp fetched_at) {
  if (!valid_feed_url(source.url)) throw FetchError(source.source_id, "invalid URL " + source.url);
  const std::string_view url = source.url;
  const auto scheme_end = url.find("://") + 3;
  const auto path_start = url.find('/', scheme_end);
  const std::string base(url.substr(0, path_start));
  const std::string path = path_start == std::string_view::npos ? "/" : std::string(url.substr(path_start));

  httplib::Client cli(base);
  const auto t = static_cast<time_t>(opts.timeout.count());
  cli.set_connection_timeout(t, 0);
  cli.set_read_timeout(t, 0);
  cli.set_write_timeout(t, 0);
  cli.set_follow_location(true);
  cli.set_default_headers({{"User-Agent", "epi-flasher/1.0"}});

  auto res = cli.Get(path);
  if (!res) throw FetchError(source.source_id, "GET " + source.url + ": " + httplib::to_string(res.error()));
  if (res->status < 200 || res->status > 299) {
    throw FetchError(source.source_id, "GET " + source.url + ": HTTP " + std::to_string(res->status));
  }
  try {
    return parse_rss(res->body, source.source_id, fetched_at);
  } catch (const Error& e) {
    throw FetchError(source.source_id, e.what());
  }
}

FeedSource parse_source_line(std::string_view line, std::string_view where) {
  std::vector<std::string_view> f;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == '\t') {
      f.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  const std::string at(where);
  if (f.size() < 3 || f.size() > 4) {
    throw ValidationError(at + ": expected source_id<TAB>name<TAB>url[<TAB>poll_hours]");
  }
  FeedSource src{std::string(f[0]), std::string(f[1]), std::string(f[2])};
  if (src.source_id.empty()) throw ValidationError(at + ": empty source_id");
  if (!valid_feed_url(src.url)) throw ValidationError(at + ": invalid URL '" + src.url + "'");
  if (f.size() == 4 && !f[3].empty()) {
    int hours = 0;
    auto [p, ec] = std::from_chars(f[3].data(), f[3].data() + f[3].size(), hours);
    if (ec != std::errc() || p != f[3].data() + f[3].size() || hours < 1) {
      throw ValidationError(at + ": poll_hours must be a positive integer");
    }
    src.poll_interval = std::chrono::hours(hours);
  }
  return src;
}

std::vector<FeedSource> parse_sources(std::string_view text, std::string_view origin) {
  std::vector<FeedSource> out;
  std::set<std::string> ids;
  std::size_t n = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++n;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const std::string at = std::string(origin) + ":" + std::to_string(n);
    auto src = parse_source_line(line, at);
    if (!ids.insert(src.source_id).second) {
      throw ValidationError(at + ": duplicate source_id '" + src.source_id + "'");
    }
    out.push_back(std::move(src));
  }
  return out;
}

std::vector<FeedSource> load_sources(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw LoadError("cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sources(ss.str(), file.filename().string());
}

}  // namespace epi
