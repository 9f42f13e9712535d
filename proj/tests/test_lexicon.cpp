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

#include <catch_amalgamated.hpp>

#include <set>

#include "epi/error.hpp"
#include "epi/lexicon.hpp"
#include "support.hpp"

using namespace epi;

namespace {

std::vector<std::string> toks(std::initializer_list<const char*> w) { return {w.begin(), w.end()}; }

LexiconSet small(std::vector<DiseaseEntry> diseases, std::vector<CityEntry> cities,
                 std::vector<VariantRule> variants = {}) {
  return LexiconSet::build({"میں", "کے"}, {{"وں", 2}}, std::move(variants), std::move(diseases),
                           std::move(cities));
}

void copy_lexicon(const std::filesystem::path& to) {
  std::filesystem::create_directories(to);
  for (const auto& e : std::filesystem::directory_iterator(test::repo_data("lexicon"))) {
    std::filesystem::copy_file(e.path(), to / e.path().filename());
  }
}

void append(const std::filesystem::path& file, const std::string& line) {
  std::ofstream out(file, std::ios::app);
  out << line << '\n';
}

}  // namespace

TEST_CASE("shipped lexicon sizes") {
  const auto& lex = test::shipped_lexicon();
  CHECK(lex.diseases().size() == 50);
  CHECK(lex.cities().size() == 374);
  CHECK(lex.stops().size() >= 150);
  CHECK(lex.stops().contains("میں"));
}

TEST_CASE("geo_of returns the stored coordinates") {
  const auto& lex = test::shipped_lexicon();
  CHECK(geo_of(*lex.city("lahore")) == GeoPoint{31.5204, 74.3587});
  CHECK(geo_of(*lex.city("karachi")) == GeoPoint{24.8607, 67.0011});
  for (const auto& c : lex.cities()) {
    CAPTURE(c.id);
    CHECK(kPakistanBox.contains(c.lat, c.lon));
  }
}

TEST_CASE("match_disease finds spans") {
  const auto& lex = test::shipped_lexicon();
  auto m = match_disease({toks({"لاہور", "ڈینگی"}), ""}, lex);
  REQUIRE(m.size() == 1);
  CHECK(m[0].entry->id == "dengue");
  CHECK(m[0].span == TokenSpan{1, 2});
  CHECK(match_disease({toks({"لاہور", "بارش"}), ""}, lex).empty());

  auto two = match_disease(prepare("ڈینگی اور ملیریا کے کیس", lex), lex);
  REQUIRE(two.size() == 2);
  CHECK(two[0].entry->id == "dengue");
  CHECK(two[1].entry->id == "malaria");
}

TEST_CASE("match_city handles multi-word and Latin names") {
  const auto& lex = test::shipped_lexicon();
  auto m = match_city({toks({"بورے", "والا", "میں", "ہیضہ"}), ""}, lex);
  REQUIRE(m.size() == 1);
  CHECK(m[0].entry->id == "burewala");
  CHECK(m[0].span == TokenSpan{0, 2});

  auto latin = match_city({toks({"Burewala"}), ""}, lex);
  REQUIRE(latin.size() == 1);
  CHECK(latin[0].entry->id == "burewala");
  CHECK(latin[0].span == TokenSpan{0, 1});

  CHECK(match_city({toks({"ڈینگی"}), ""}, lex).empty());
}

TEST_CASE("the longer n-gram wins") {
  auto lex = small({{"hep", "ہیپاٹائٹس", "Hepatitis", {}}, {"hep_c", "ہیپاٹائٹس سی", "Hepatitis C", {}}},
                   {{"x", "کراچی", "Karachi", {}, 24.86, 67.0}});
  auto m = lex.match_disease({toks({"ہیپاٹائٹس", "سی", "کیس"}), ""});
  REQUIRE(m.size() == 1);
  CHECK(m[0].entry->id == "hep_c");
  CHECK(m[0].span == TokenSpan{0, 2});
  auto one = lex.match_disease({toks({"ہیپاٹائٹس", "کیس"}), ""});
  REQUIRE(one.size() == 1);
  CHECK(one[0].entry->id == "hep");
}

TEST_CASE("every name resolves to its entry") {
  const auto& lex = test::shipped_lexicon();
  for (const auto& d : lex.diseases()) {
    CHECK(lex.find_disease(d.urdu) == &d);
    for (const auto& a : d.aliases) {
      CAPTURE(d.id, a);
      CHECK(lex.find_disease(a) == &d);
    }
  }
  for (const auto& c : lex.cities()) {
    CHECK(lex.find_city(c.urdu) == &c);
    for (const auto& a : c.aliases) {
      CAPTURE(c.id, a);
      CHECK(lex.find_city(a) == &c);
    }
  }
  // Diacritics and ZWNJ do not hide a name.
  CHECK(lex.find_city("لَاہور") == lex.city("lahore"));
  CHECK(lex.find_city("لاہ‌ور") == lex.city("lahore"));
}

TEST_CASE("scan agrees with a brute-force n-gram oracle") {
  const auto& lex = test::shipped_lexicon();
  const char* headlines[] = {
      "ڈینگی بخار اور ملیریا کے کیس لاہور اور کراچی میں",
      "ہیپاٹائٹس سی کے مریض رحیم یار خان میں",
      "کورونا وائرس کے بعد ٹی بی کا خطرہ",
      "ڈیرہ غازی خان میں پولیو وائرس کا کیس",
  };
  for (const char* h : headlines) {
    const auto tl = prepare(h, lex);
    // Oracle: at each position try every n from kMaxNgram down via find_disease.
    std::vector<std::string> expect;
    for (std::size_t i = 0; i < tl.tokens.size();) {
      std::size_t step = 1;
      for (std::size_t n = std::min(kMaxNgram, tl.tokens.size() - i); n > 0; --n) {
        std::string name;
        for (std::size_t k = 0; k < n; ++k) name += (k ? " " : "") + tl.tokens[i + k];
        if (const auto* d = lex.find_disease(name)) {
          expect.push_back(d->id);
          step = n;
          break;
        }
      }
      i += step;
    }
    std::vector<std::string> got;
    for (const auto& m : lex.match_disease(tl)) got.push_back(m.entry->id);
    CAPTURE(h);
    CHECK(got == expect);
  }
}

TEST_CASE("gazetteer round-trips through save and load") {
  test::TempDir dir;
  const auto& lex = test::shipped_lexicon();
  lex.save(dir.path());
  const auto back = LexiconSet::load(dir.path());
  CHECK(back == lex);
  CHECK(back.city("lahore")->lat == 31.5204);
}

TEST_CASE("lexicon validation") {
  const CityEntry karachi{"karachi", "کراچی", "Karachi", {}, 24.8607, 67.0011};
  SECTION("alias equal to another entry's canonical") {
    CHECK_THROWS_AS(small({{"a", "ہیضہ", "", {}}, {"b", "کالرا", "", {"ہیضہ"}}}, {karachi}),
                    ValidationError);
  }
  SECTION("duplicate ids") {
    CHECK_THROWS_AS(small({{"a", "ہیضہ", "", {}}, {"a", "خسرہ", "", {}}}, {karachi}),
                    ValidationError);
  }
  SECTION("coordinates outside Pakistan") {
    CHECK_THROWS_AS(small({}, {{"dhaka", "ڈھاکہ", "Dhaka", {}, 23.81, 90.41}}), ValidationError);
    CHECK_THROWS_AS(small({}, {{"tehran", "تہران", "Tehran", {}, 35.69, 51.39}}), ValidationError);
  }
  SECTION("variant equal to canonical") {
    CHECK_THROWS_AS(small({}, {karachi}, {{"کراچی", "کراچی"}}), ValidationError);
  }
  SECTION("duplicate variant") {
    CHECK_THROWS_AS(small({}, {karachi}, {{"کرونا", "کورونا"}, {"کرونا", "کووڈ"}}), ValidationError);
  }
  SECTION("name longer than the n-gram limit") {
    CHECK_THROWS_AS(small({{"a", "بہت لمبا نام والی بیماری", "", {}}}, {karachi}), ValidationError);
  }
  SECTION("name made only of stop words") {
    CHECK_THROWS_AS(small({{"a", "میں", "", {}}}, {karachi}), ValidationError);
  }
  SECTION("bad stem rules") {
    CHECK_THROWS_AS(LexiconSet::build({}, {{"", 2}}, {}, {}, {}), ValidationError);
    CHECK_THROWS_AS(LexiconSet::build({}, {{"وں", 0}}, {}, {}, {}), ValidationError);
  }
}

TEST_CASE("load reports the file and line of a bad record") {
  test::TempDir dir;
  copy_lexicon(dir.path());
  append(dir / "cities.tsv", "dhaka\tڈھاکہ\tDhaka\t\t23.81\t90.41");
  try {
    LexiconSet::load(dir.path());
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("cities.tsv:"));
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("bounding box"));
  }
}

TEST_CASE("load rejects malformed rows and missing files") {
  test::TempDir dir;
  copy_lexicon(dir.path());
  append(dir / "diseases.tsv", "broken\tonly three\tfields");
  CHECK_THROWS_AS(LexiconSet::load(dir.path()), ValidationError);
  CHECK_THROWS_AS(LexiconSet::load(dir / "missing"), LoadError);
}

TEST_CASE("diseases file alias colliding with a canonical fails to load") {
  test::TempDir dir;
  copy_lexicon(dir.path());
  append(dir / "diseases.tsv", "fake\tجعلی\tFake\tملیریا");
  CHECK_THROWS_AS(LexiconSet::load(dir.path()), ValidationError);
}
