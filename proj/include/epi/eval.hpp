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

#ifndef EPI_EVAL_HPP_
#define EPI_EVAL_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epi/feed.hpp"
#include "epi/lexicon.hpp"

namespace epi {

struct ConfusionMatrix {
  std::uint64_t tp = 0, fn = 0, fp = 0, tn = 0;

  std::uint64_t total() const { return tp + fn + fp + tn; }
  ConfusionMatrix& operator+=(const ConfusionMatrix& o) {
    tp += o.tp;
    fn += o.fn;
    fp += o.fp;
    tn += o.tn;
    return *this;
  }
  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

// Precision, recall and F are absent when their denominator is zero.
struct Metrics {
  double accuracy = 0;
  std::optional<double> precision, recall, f_score;
  friend bool operator==(const Metrics&, const Metrics&) = default;
};

// Throws EmptyMatrixError when the matrix is all zeros.
Metrics metrics(const ConfusionMatrix& m);

enum class Stage { Diacritics, Punct, Tokenize, StopWords, Disease, City, Geo };

inline constexpr std::array<Stage, 7> kAllStages{Stage::Diacritics, Stage::Punct,
                                                 Stage::Tokenize,   Stage::StopWords,
                                                 Stage::Disease,    Stage::City,
                                                 Stage::Geo};

// Gold-file tag: DIACRITICS, PUNCT, TOKENIZE, STOPWORDS, DISEASE, CITY, GEO.
const char* stage_tag(Stage s);
// Row label used in reports.
const char* stage_title(Stage s);
// Case-insensitive tag lookup; throws ValidationError.
Stage parse_stage(std::string_view tag);
// "all" or a comma-separated list of tags.
std::vector<Stage> parse_stage_list(std::string_view spec);

struct GoldRecord {
  std::string access_no;
  Stage stage = Stage::Diacritics;
  std::vector<std::string> expected;   // units the pipeline should produce or remove
  std::vector<std::string> negatives;  // units it should leave alone ('!' prefix in the file)
};

// `access_no<TAB>stage<TAB>units` where units are '|'-separated and a leading
// '!' marks an explicit negative. Character units (DIACRITICS, PUNCT) are
// written as U+XXXX or as the literal character; GEO units as "lat,lon".
std::vector<GoldRecord> parse_gold(std::string_view text, std::string_view origin = "gold");
std::vector<GoldRecord> load_gold(const std::filesystem::path& file);

// What the pipeline yields for one item at one stage: removed code points,
// tokens, removed stop words, disease ids, city ids or "lat,lon" pairs.
std::vector<std::string> stage_output(Stage stage, const FeedItem& item, const LexiconSet& lex);

// Multiset comparison of one item's output against its gold record.
ConfusionMatrix score_units(Stage stage, std::span<const std::string> output,
                            const GoldRecord& gold);

struct StageReport {
  std::string name;
  ConfusionMatrix matrix;
  Metrics metrics;
};

// Throws ValidationError for gold naming an unknown item and EmptyMatrixError
// when no unit of this stage was counted.
StageReport score_stage(Stage stage, std::span<const FeedItem> items,
                        std::span<const GoldRecord> gold, const LexiconSet& lex);

struct Report {
  std::vector<StageReport> rows;
  StageReport overall;  // metrics of the element-wise summed matrix
};

// Requires at least one stage.
Report report(std::vector<StageReport> stages);
std::string format_text(const Report& r);
std::string format_csv(const Report& r);

}  // namespace epi

#endif  // EPI_EVAL_HPP_
