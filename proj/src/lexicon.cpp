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

#include "epi/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "epi/error.hpp"
#include "epi/utf8.hpp"

namespace epi {
namespace {

namespace fs = std::filesystem;

constexpr const char* kStopFile = "stopwords.txt";
constexpr const char* kStemFile = "stems.tsv";
constexpr const char* kVariantFile = "variants.tsv";
constexpr const char* kDiseaseFile = "diseases.tsv";
constexpr const char* kCityFile = "cities.tsv";

std::string join(std::span<const std::string> parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> split_aliases(std::string_view s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  for (auto& a : split(s, '|')) {
    if (!a.empty()) out.push_back(std::move(a));
  }
  return out;
}

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> read_lines(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw LoadError("cannot open lexicon file " + file.string());
  std::vector<Line> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!utf8::valid(line)) {
      throw ValidationError(file.filename().string() + ":" + std::to_string(n) +
                            ": invalid UTF-8");
    }
    out.push_back({n, std::move(line)});
  }
  if (in.bad()) throw LoadError("error reading " + file.string());
  return out;
}

std::string where(const char* file, std::size_t line) {
  return std::string(file) + ":" + std::to_string(line);
}

std::vector<std::string> fields(const Line& line, const char* file, std::size_t want) {
  auto f = split(line.text, '\t');
  if (f.size() != want) {
    throw ValidationError(where(file, line.number) + ": expected " + std::to_string(want) +
                          " tab-separated fields, got " + std::to_string(f.size()));
  }
  return f;
}

double parse_degrees(const std::string& s, const std::string& at) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ValidationError(at + ": bad coordinate '" + s + "'");
  }
  return v;
}

int parse_int(const std::string& s, const std::string& at) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ValidationError(at + ": bad integer '" + s + "'");
  }
  return v;
}

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string join_keys(std::span<const std::string> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += match_key(tokens[i]);
  }
  return out;
}

}  // namespace

// Human-readable origin of each entry, for error messages.
struct LexiconSet::Source {
  std::vector<std::string> stems, variants, diseases, cities;

  static std::string pick(const std::vector<std::string>& v, std::size_t i, const char* kind) {
    return i < v.size() ? v[i] : std::string(kind) + " #" + std::to_string(i + 1);
  }
};

std::size_t EntityIndex::insert(std::string key, std::size_t entry) {
  auto [it, inserted] = keys_.emplace(std::move(key), entry);
  return inserted ? npos : it->second;
}

std::size_t EntityIndex::find(std::string_view key) const {
  auto it = keys_.find(std::string(key));
  return it == keys_.end() ? npos : it->second;
}

std::vector<EntityIndex::Hit> EntityIndex::scan(std::span<const std::string> tokens) const {
  std::vector<Hit> hits;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t matched = 0;
    std::size_t entry = npos;
    for (std::size_t n = std::min(kMaxNgram, tokens.size() - i); n >= 1; --n) {
      entry = find(join_keys(tokens.subspan(i, n)));
      if (entry != npos) {
        matched = n;
        break;
      }
    }
    if (matched) {
      hits.push_back({entry, {i, i + matched}});
      i += matched;
    } else {
      ++i;
    }
  }
  return hits;
}

std::vector<std::string> LexiconSet::keys_for(std::string_view name) const {
  std::vector<std::string> keys;
  const TokenList canonical = prepare(name, text_);
  keys.push_back(join_keys(canonical.tokens));
  // Also register the un-stemmed form so literal spellings produced by a
  // variant rewrite still hit.
  const TokenList raw = remove_stop_words(tokenize(normalize_text(name)), text_.stops);
  std::string raw_key = join_keys(raw.tokens);
  if (raw_key != keys.front()) keys.push_back(std::move(raw_key));
  return keys;
}

LexiconSet LexiconSet::assemble(std::vector<std::string> stop_words, std::vector<StemRule> stems,
                                std::vector<VariantRule> variants,
                                std::vector<DiseaseEntry> diseases,
                                std::vector<CityEntry> cities, const Source& src) {
  for (std::size_t i = 0; i < stems.size(); ++i) {
    if (stems[i].suffix.empty()) {
      throw ValidationError(Source::pick(src.stems, i, "stem rule") + ": empty suffix");
    }
    if (stems[i].min_stem_len < 1) {
      throw ValidationError(Source::pick(src.stems, i, "stem rule") + ": min_stem_len < 1");
    }
  }
  {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < variants.size(); ++i) {
      const auto at = Source::pick(src.variants, i, "variant rule");
      if (variants[i].variant.empty() || variants[i].canonical.empty()) {
        throw ValidationError(at + ": empty variant or canonical");
      }
      if (match_key(variants[i].variant) == match_key(variants[i].canonical)) {
        throw ValidationError(at + ": variant equals canonical");
      }
      if (!seen.insert(match_key(variants[i].variant)).second) {
        throw ValidationError(at + ": duplicate variant '" + variants[i].variant + "'");
      }
    }
  }

  LexiconSet lex;
  lex.text_.stops = StopWords(stop_words);
  lex.text_.rules = RuleSet(std::move(stems), std::move(variants));

  auto index_names = [&lex](EntityIndex& index, std::size_t entry, const std::string& at,
                            const std::vector<std::string>& names, auto&& describe) {
    for (const auto& name : names) {
      for (auto& key : lex.keys_for(name)) {
        if (key.empty()) {
          throw ValidationError(at + ": name '" + name + "' is empty after normalization");
        }
        const std::size_t words = static_cast<std::size_t>(
            std::count(key.begin(), key.end(), ' ') + 1);
        if (words > kMaxNgram) {
          throw ValidationError(at + ": name '" + name + "' is longer than " +
                                std::to_string(kMaxNgram) + " tokens");
        }
        const std::size_t owner = index.insert(key, entry);
        if (owner != EntityIndex::npos && owner != entry) {
          throw ValidationError(at + ": name '" + name + "' collides with " + describe(owner));
        }
      }
    }
  };

  lex.diseases_ = std::move(diseases);
  for (std::size_t i = 0; i < lex.diseases_.size(); ++i) {
    const auto& d = lex.diseases_[i];
    const auto at = Source::pick(src.diseases, i, "disease");
    if (d.id.empty()) throw ValidationError(at + ": empty disease_id");
    if (d.urdu.empty()) throw ValidationError(at + ": empty urdu_canonical");
    if (!lex.disease_ids_.emplace(d.id, i).second) {
      throw ValidationError(at + ": duplicate disease_id '" + d.id + "'");
    }
    std::vector<std::string> names{d.urdu};
    names.insert(names.end(), d.aliases.begin(), d.aliases.end());
    index_names(lex.disease_index_, i, at, names, [&lex](std::size_t owner) {
      return "disease '" + lex.diseases_[owner].id + "'";
    });
  }

  lex.cities_ = std::move(cities);
  for (std::size_t i = 0; i < lex.cities_.size(); ++i) {
    const auto& c = lex.cities_[i];
    const auto at = Source::pick(src.cities, i, "city");
    if (c.id.empty()) throw ValidationError(at + ": empty city_id");
    if (c.urdu.empty()) throw ValidationError(at + ": empty urdu_canonical");
    if (c.lat < -90 || c.lat > 90 || c.lon < -180 || c.lon > 180) {
      throw ValidationError(at + ": coordinate out of range");
    }
    if (!kPakistanBox.contains(c.lat, c.lon)) {
      throw ValidationError(at + ": coordinate (" + format_double(c.lat) + ", " +
                            format_double(c.lon) + ") outside the Pakistan bounding box");
    }
    if (!lex.city_ids_.emplace(c.id, i).second) {
      throw ValidationError(at + ": duplicate city_id '" + c.id + "'");
    }
    std::vector<std::string> names{c.urdu};
    names.insert(names.end(), c.aliases.begin(), c.aliases.end());
    index_names(lex.city_index_, i, at, names, [&lex](std::size_t owner) {
      return "city '" + lex.cities_[owner].id + "'";
    });
  }
  return lex;
}

LexiconSet LexiconSet::build(std::vector<std::string> stop_words, std::vector<StemRule> stems,
                             std::vector<VariantRule> variants,
                             std::vector<DiseaseEntry> diseases, std::vector<CityEntry> cities) {
  return assemble(std::move(stop_words), std::move(stems), std::move(variants),
                  std::move(diseases), std::move(cities), Source{});
}

LexiconSet LexiconSet::load(const fs::path& dir) {
  Source src;

  std::vector<std::string> stops;
  for (auto& line : read_lines(dir / kStopFile)) {
    std::string word = line.text;
    while (!word.empty() && (word.back() == ' ' || word.back() == '\t')) word.pop_back();
    if (!word.empty()) stops.push_back(std::move(word));
  }

  std::vector<StemRule> stems;
  for (const auto& line : read_lines(dir / kStemFile)) {
    auto f = fields(line, kStemFile, 2);
    const auto at = where(kStemFile, line.number);
    stems.push_back({f[0], parse_int(f[1], at)});
    src.stems.push_back(at);
  }

  std::vector<VariantRule> variants;
  for (const auto& line : read_lines(dir / kVariantFile)) {
    auto f = fields(line, kVariantFile, 2);
    variants.push_back({f[0], f[1]});
    src.variants.push_back(where(kVariantFile, line.number));
  }

  std::vector<DiseaseEntry> diseases;
  for (const auto& line : read_lines(dir / kDiseaseFile)) {
    auto f = fields(line, kDiseaseFile, 4);
    diseases.push_back({f[0], f[1], f[2], split_aliases(f[3])});
    src.diseases.push_back(where(kDiseaseFile, line.number));
  }

  std::vector<CityEntry> cities;
  for (const auto& line : read_lines(dir / kCityFile)) {
    auto f = fields(line, kCityFile, 6);
    const auto at = where(kCityFile, line.number);
    cities.push_back({f[0], f[1], f[2], split_aliases(f[3]), parse_degrees(f[4], at),
                      parse_degrees(f[5], at)});
    src.cities.push_back(at);
  }

  return assemble(std::move(stops), std::move(stems), std::move(variants), std::move(diseases),
                  std::move(cities), src);
}

void LexiconSet::save(const fs::path& dir) const {
  fs::create_directories(dir);
  auto open = [&dir](const char* name) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + (dir / name).string());
    return out;
  };
  {
    auto out = open(kStopFile);
    for (const auto& w : text_.stops.words()) out << w << '\n';
  }
  {
    auto out = open(kStemFile);
    for (const auto& r : text_.rules.stems()) out << r.suffix << '\t' << r.min_stem_len << '\n';
  }
  {
    auto out = open(kVariantFile);
    for (const auto& r : text_.rules.variants()) out << r.variant << '\t' << r.canonical << '\n';
  }
  {
    auto out = open(kDiseaseFile);
    for (const auto& d : diseases_) {
      out << d.id << '\t' << d.urdu << '\t' << d.english << '\t' << join(d.aliases, "|") << '\n';
    }
  }
  {
    auto out = open(kCityFile);
    for (const auto& c : cities_) {
      out << c.id << '\t' << c.urdu << '\t' << c.english << '\t' << join(c.aliases, "|") << '\t'
          << format_double(c.lat) << '\t' << format_double(c.lon) << '\n';
    }
  }
}

const DiseaseEntry* LexiconSet::disease(std::string_view id) const {
  auto it = disease_ids_.find(std::string(id));
  return it == disease_ids_.end() ? nullptr : &diseases_[it->second];
}

const CityEntry* LexiconSet::city(std::string_view id) const {
  auto it = city_ids_.find(std::string(id));
  return it == city_ids_.end() ? nullptr : &cities_[it->second];
}

const DiseaseEntry* LexiconSet::find_disease(std::string_view name) const {
  const std::size_t i = disease_index_.find(keys_for(name).front());
  return i == EntityIndex::npos ? nullptr : &diseases_[i];
}

const CityEntry* LexiconSet::find_city(std::string_view name) const {
  const std::size_t i = city_index_.find(keys_for(name).front());
  return i == EntityIndex::npos ? nullptr : &cities_[i];
}

std::vector<DiseaseMatch> LexiconSet::match_disease(const TokenList& tokens) const {
  std::vector<DiseaseMatch> out;
  for (const auto& hit : disease_index_.scan(tokens.tokens)) {
    out.push_back({&diseases_[hit.entry], hit.span});
  }
  return out;
}

std::vector<CityMatch> LexiconSet::match_city(const TokenList& tokens) const {
  std::vector<CityMatch> out;
  for (const auto& hit : city_index_.scan(tokens.tokens)) {
    out.push_back({&cities_[hit.entry], hit.span});
  }
  return out;
}

bool operator==(const LexiconSet& a, const LexiconSet& b) {
  return a.text_.stops.words() == b.text_.stops.words() &&
         a.text_.rules.stems() == b.text_.rules.stems() &&
         a.text_.rules.variants() == b.text_.rules.variants() && a.diseases_ == b.diseases_ &&
         a.cities_ == b.cities_;
}

}  // namespace epi
