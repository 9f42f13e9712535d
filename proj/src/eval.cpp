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

#include "epi/eval.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "epi/error.hpp"
#include "epi/normalize.hpp"
#include "epi/utf8.hpp"

namespace epi {
namespace {

using Counts = std::map<std::string, std::uint64_t>;

Counts count(std::span<const std::string> units) {
  Counts c;
  for (const auto& u : units) ++c[u];
  return c;
}

bool is_char_stage(Stage s) { return s == Stage::Diacritics || s == Stage::Punct; }

std::string geo_label(double lat, double lon) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f,%.4f", lat, lon);
  return buf;
}

// U+XXXX or exactly one literal code point.
std::string char_unit(std::string_view u, const std::string& at) {
  if (u.size() > 2 && (u[0] == 'U' || u[0] == 'u') && u[1] == '+') {
    std::uint32_t cp = 0;
    const auto hex = u.substr(2);
    auto [p, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), cp, 16);
    if (ec != std::errc() || p != hex.data() + hex.size() || cp > 0x10FFFF) {
      throw ValidationError(at + ": bad code point '" + std::string(u) + "'");
    }
    return utf8::code_point_label(cp);
  }
  const auto cps = utf8::decode(u);
  if (cps.size() != 1) {
    throw ValidationError(at + ": character unit '" + std::string(u) + "' is not one code point");
  }
  return utf8::code_point_label(cps[0]);
}

std::string geo_unit(std::string_view u, const std::string& at) {
  const auto comma = u.find(',');
  double lat = 0, lon = 0;
  bool ok = comma != std::string_view::npos;
  if (ok) {
    auto a = u.substr(0, comma), b = u.substr(comma + 1);
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), lat);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), lon);
    ok = r1.ec == std::errc() && r1.ptr == a.data() + a.size() && r2.ec == std::errc() &&
         r2.ptr == b.data() + b.size();
  }
  if (!ok) throw ValidationError(at + ": bad coordinate unit '" + std::string(u) + "'");
  return geo_label(lat, lon);
}

std::string canonical_unit(Stage s, std::string_view u, const std::string& at) {
  if (is_char_stage(s)) return char_unit(u, at);
  if (s == Stage::Geo) return geo_unit(u, at);
  return std::string(u);
}

// Code points present in `before` but not in `after`, as labels.
std::vector<std::string> removed_code_points(std::string_view before, std::string_view after,
                                             bool skip_whitespace) {
  std::map<char32_t, long> diff;
  for (char32_t c : utf8::decode(before)) ++diff[c];
  for (char32_t c : utf8::decode(after)) --diff[c];
  std::vector<std::string> out;
  for (const auto& [c, n] : diff) {
    if (skip_whitespace && is_whitespace(c)) continue;
    for (long i = 0; i < n; ++i) out.push_back(utf8::code_point_label(c));
  }
  return out;
}

template <class Match>
std::vector<std::string> distinct_ids(const std::vector<Match>& matches) {
  std::vector<std::string> out;
  for (const auto& m : matches) {
    if (std::find(out.begin(), out.end(), m.entry->id) == out.end()) out.push_back(m.entry->id);
  }
  return out;
}

std::vector<CityMatch> located_cities(const FeedItem& item, const LexiconSet& lex) {
  auto cities = lex.match_city(prepare(item.title, lex, item.access_no));
  if (cities.empty()) cities = lex.match_city(prepare(item.description, lex, item.access_no));
  return cities;
}

std::string percent(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", *v * 100.0);
  return buf;
}

std::string fraction(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", *v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Metrics metrics(const ConfusionMatrix& m) {
  if (m.total() == 0) throw EmptyMatrixError("confusion matrix is empty");
  Metrics r;
  r.accuracy = static_cast<double>(m.tp + m.tn) / static_cast<double>(m.total());
  if (m.tp + m.fp > 0) r.precision = static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fp);
  if (m.tp + m.fn > 0) r.recall = static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn);
  if (r.precision && r.recall && *r.precision + *r.recall > 0) {
    r.f_score = 2 * *r.precision * *r.recall / (*r.precision + *r.recall);
  }
  return r;
}

const char* stage_tag(Stage s) {
  switch (s) {
    case Stage::Diacritics: return "DIACRITICS";
    case Stage::Punct: return "PUNCT";
    case Stage::Tokenize: return "TOKENIZE";
    case Stage::StopWords: return "STOPWORDS";
    case Stage::Disease: return "DISEASE";
    case Stage::City: return "CITY";
    case Stage::Geo: return "GEO";
  }
  return "?";
}

const char* stage_title(Stage s) {
  switch (s) {
    case Stage::Diacritics: return "Removal of Diacritics";
    case Stage::Punct: return "Removal of Punctuation";
    case Stage::Tokenize: return "Tokenization Correctness";
    case Stage::StopWords: return "Stop Word Removal";
    case Stage::Disease: return "Epidemic outbreak detection";
    case Stage::City: return "City detection";
    case Stage::Geo: return "City Lat Long Detection";
  }
  return "?";
}

Stage parse_stage(std::string_view tag) {
  std::string up;
  for (char c : tag) {
    if (c == '_' || c == '-') continue;
    up += static_cast<char>(c >= 'a' && c <= 'z' ? c - 32 : c);
  }
  for (Stage s : kAllStages) {
    if (up == stage_tag(s)) return s;
  }
  throw ValidationError("unknown stage '" + std::string(tag) + "'");
}

std::vector<Stage> parse_stage_list(std::string_view spec) {
  if (spec.empty() || spec == "all") return {kAllStages.begin(), kAllStages.end()};
  std::vector<Stage> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    const auto part = spec.substr(start, end - start);
    if (!part.empty()) {
      const Stage s = parse_stage(part);
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    start = end + 1;
  }
  if (out.empty()) throw ValidationError("empty stage list");
  return out;
}

std::vector<GoldRecord> parse_gold(std::string_view text, std::string_view origin) {
  std::vector<GoldRecord> out;
  std::set<std::pair<std::string, Stage>> seen;
  std::size_t n = 0, start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++n;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::string at = std::string(origin) + ":" + std::to_string(n);
    if (!utf8::valid(line)) throw ValidationError(at + ": invalid UTF-8");

    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos) {
      throw ValidationError(at + ": expected access_no<TAB>stage<TAB>units");
    }
    GoldRecord g;
    g.access_no = std::string(line.substr(0, t1));
    if (g.access_no.empty()) throw ValidationError(at + ": empty access_no");
    try {
      g.stage = parse_stage(line.substr(t1 + 1, t2 - t1 - 1));
    } catch (const ValidationError& e) {
      throw ValidationError(at + ": " + e.what());
    }
    if (!seen.emplace(g.access_no, g.stage).second) {
      throw ValidationError(at + ": duplicate record for " + g.access_no + " " + stage_tag(g.stage));
    }
    const auto units = line.substr(t2 + 1);
    std::size_t us = 0;
    while (!units.empty() && us <= units.size()) {
      auto ue = units.find('|', us);
      if (ue == std::string_view::npos) ue = units.size();
      auto u = units.substr(us, ue - us);
      us = ue + 1;
      if (u.empty()) continue;
      const bool negative = u.front() == '!' && u.size() > 1;
      if (negative) u.remove_prefix(1);
      (negative ? g.negatives : g.expected).push_back(canonical_unit(g.stage, u, at));
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GoldRecord> load_gold(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw LoadError("cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_gold(ss.str(), file.filename().string());
}

std::vector<std::string> stage_output(Stage stage, const FeedItem& item, const LexiconSet& lex) {
  switch (stage) {
    case Stage::Diacritics: {
      const std::string in = nfc(item.title);
      return removed_code_points(in, remove_diacritics(in), false);
    }
    case Stage::Punct: {
      const std::string in = remove_diacritics(nfc(item.title));
      return removed_code_points(in, remove_punctuation(in), true);
    }
    case Stage::Tokenize:
      return tokenize(normalize_text(item.title)).tokens;
    case Stage::StopWords: {
      std::vector<std::string> out;
      for (auto& t : tokenize(normalize_text(item.title)).tokens) {
        if (lex.stops().contains(t)) out.push_back(std::move(t));
      }
      return out;
    }
    case Stage::Disease:
      return distinct_ids(lex.match_disease(prepare(item.title, lex, item.access_no)));
    case Stage::City:
      return distinct_ids(located_cities(item, lex));
    case Stage::Geo: {
      std::vector<std::string> out;
      for (const auto& m : located_cities(item, lex)) {
        auto g = geo_label(m.entry->lat, m.entry->lon);
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
      }
      return out;
    }
  }
  return {};
}

ConfusionMatrix score_units(Stage, std::span<const std::string> output, const GoldRecord& gold) {
  const Counts s = count(output);
  const Counts g = count(gold.expected);
  ConfusionMatrix m;
  for (const auto& [unit, n] : g) {
    auto it = s.find(unit);
    if (it != s.end()) m.tp += std::min(n, it->second);
  }
  m.fn = gold.expected.size() - m.tp;
  m.fp = output.size() - m.tp;
  for (const auto& neg : gold.negatives) {
    if (!s.contains(neg)) ++m.tn;
  }
  return m;
}

StageReport score_stage(Stage stage, std::span<const FeedItem> items,
                        std::span<const GoldRecord> gold, const LexiconSet& lex) {
  std::unordered_map<std::string_view, const FeedItem*> by_access;
  for (const auto& it : items) by_access.emplace(it.access_no, &it);
  StageReport r;
  r.name = stage_title(stage);
  for (const auto& g : gold) {
    if (g.stage != stage) continue;
    auto it = by_access.find(g.access_no);
    if (it == by_access.end()) {
      throw ValidationError(std::string("gold record for unknown item '") + g.access_no + "'");
    }
    r.matrix += score_units(stage, stage_output(stage, *it->second, lex), g);
  }
  if (r.matrix.total() == 0) {
    throw EmptyMatrixError(std::string("no gold units for stage ") + stage_tag(stage));
  }
  r.metrics = metrics(r.matrix);
  return r;
}

Report report(std::vector<StageReport> stages) {
  if (stages.empty()) throw ValidationError("report needs at least one stage");
  Report r;
  r.overall.name = "Overall";
  for (const auto& s : stages) r.overall.matrix += s.matrix;
  r.overall.metrics = metrics(r.overall.matrix);
  r.rows = std::move(stages);
  return r;
}

std::string format_text(const Report& r) {
  std::size_t width = 5;
  for (const auto& s : r.rows) width = std::max(width, s.name.size());
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-*s %6s %6s %6s %6s %9s %10s %8s %8s\n",
                static_cast<int>(width), "Stage", "TP", "FN", "FP", "TN", "Accuracy", "Precision",
                "Recall", "F-score");
  out += buf;
  auto row = [&](const StageReport& s) {
    std::snprintf(buf, sizeof buf, "%-*s %6llu %6llu %6llu %6llu %9s %10s %8s %8s\n",
                  static_cast<int>(width), s.name.c_str(),
                  static_cast<unsigned long long>(s.matrix.tp),
                  static_cast<unsigned long long>(s.matrix.fn),
                  static_cast<unsigned long long>(s.matrix.fp),
                  static_cast<unsigned long long>(s.matrix.tn),
                  percent(s.metrics.accuracy).c_str(), percent(s.metrics.precision).c_str(),
                  percent(s.metrics.recall).c_str(), percent(s.metrics.f_score).c_str());
    out += buf;
  };
  for (const auto& s : r.rows) row(s);
  row(r.overall);
  return out;
}

std::string format_csv(const Report& r) {
  std::string out = "stage,tp,fn,fp,tn,accuracy,precision,recall,f_score\n";
  auto row = [&](const StageReport& s) {
    out += csv_field(s.name) + "," + std::to_string(s.matrix.tp) + "," +
           std::to_string(s.matrix.fn) + "," + std::to_string(s.matrix.fp) + "," +
           std::to_string(s.matrix.tn) + "," + fraction(s.metrics.accuracy) + "," +
           fraction(s.metrics.precision) + "," + fraction(s.metrics.recall) + "," +
           fraction(s.metrics.f_score) + "\n";
  };
  for (const auto& s : r.rows) row(s);
  row(r.overall);
  return out;
}

}  // namespace epi
