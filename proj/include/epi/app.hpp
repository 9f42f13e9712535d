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

#ifndef EPI_APP_HPP_
#define EPI_APP_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "epi/config.hpp"
#include "epi/event_store.hpp"
#include "epi/extract.hpp"
#include "epi/item_store.hpp"

namespace epi {

// Exclusive advisory lock on the data directory, held for one command.
class StoreLock {
 public:
  // Throws IoError when another process holds the lock.
  explicit StoreLock(const std::filesystem::path& lock_file);
  ~StoreLock();
  StoreLock(const StoreLock&) = delete;
  StoreLock& operator=(const StoreLock&) = delete;

 private:
  int fd_ = -1;
};

struct SourceResult {
  std::string source_id;
  bool skipped = false;  // polled already in the current interval
  std::size_t fetched = 0;
  std::size_t stored = 0;
  std::optional<std::string> error;
};

struct FetchSummary {
  std::vector<SourceResult> sources;
  bool all_failed() const;
};

// Fetches every due source concurrently and ingests serially in config order.
FetchSummary cmd_fetch(const Config& cfg, std::ostream& log, bool force = false,
                       Timestamp now = now_utc());

struct ProcessSummary {
  std::size_t items = 0;
  std::size_t stored = 0;
  std::size_t merged = 0;
  std::size_t disease_without_location = 0;
  std::size_t no_disease = 0;
  std::size_t failed = 0;
  friend bool operator==(const ProcessSummary&, const ProcessSummary&) = default;
};

struct ProcessOptions {
  ExtractOptions extract;
  int window_days = kDedupWindowDays;
  bool parallel = true;
};

// Extracts every NEW item, dedups the drafts into the event store and marks
// the items PROCESSED. Items that yield nothing are logged by outcome.
ProcessSummary process_pending(ItemStore& items, EventStore& events, const LexiconSet& lex,
                               const ProcessOptions& opts, std::ostream& log,
                               Timestamp now = now_utc());

// Loads the lexicon before opening any store, so a bad lexicon touches nothing.
ProcessSummary cmd_process(const Config& cfg, std::ostream& log, Timestamp now = now_utc());

std::size_t cmd_purge(const Config& cfg, Timestamp now = now_utc());

void cmd_dump(const Config& cfg, std::ostream& out);

struct EvalArgs {
  std::filesystem::path gold;
  std::filesystem::path items;  // RSS XML
  std::string stages = "all";
  std::optional<std::filesystem::path> csv;
};

// Returns the plain-text report and writes the CSV when requested.
std::string cmd_eval(const Config& cfg, const EvalArgs& args);

// Serves until SIGINT/SIGTERM. Throws IoError if the address is unavailable.
void cmd_serve(const Config& cfg, std::ostream& log);

// Per-source poll bookkeeping in fetch_state.json.
bool source_due(const FeedSource& src, std::optional<Timestamp> last, Timestamp now);

}  // namespace epi

#endif  // EPI_APP_HPP_
