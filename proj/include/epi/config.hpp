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

#ifndef EPI_CONFIG_HPP_
#define EPI_CONFIG_HPP_

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epi/feed.hpp"

namespace epi {

// Lexicon shipped with the source tree, used when LEXICON_DIR is unset.
std::filesystem::path default_lexicon_dir();

struct Config {
  std::filesystem::path data_dir = "epi-data";
  std::filesystem::path lexicon_dir = default_lexicon_dir();
  std::string listen_addr = "127.0.0.1:8080";
  int dedup_window_days = 2;
  int retention_days = 90;
  bool disease_fallback = false;
  int fetch_timeout_seconds = 10;
  std::vector<FeedSource> sources;

  std::filesystem::path items_db() const { return data_dir / "items.sqlite"; }
  std::filesystem::path events_db() const { return data_dir / "events.sqlite"; }
  std::filesystem::path fetch_state() const { return data_dir / "fetch_state.json"; }
  std::filesystem::path lock_file() const { return data_dir / ".lock"; }
};

using EnvLookup = std::function<std::optional<std::string>(const char*)>;

// Reads std::getenv.
std::optional<std::string> process_env(const char* name);

// Config text: `KEY=VALUE` settings and tab-separated source records
// (`source_id<TAB>name<TAB>url[<TAB>poll_hours]`). `#` starts a comment line.
// Keys: DATA_DIR, LEXICON_DIR, LISTEN_ADDR, DEDUP_WINDOW_DAYS, RETENTION_DAYS,
// DISEASE_FALLBACK, FETCH_TIMEOUT_SECONDS. Relative paths resolve against
// base_dir. Throws ValidationError.
Config parse_config(std::string_view text, const std::filesystem::path& base_dir,
                    std::string_view origin = "config");

// Applies the same keys from the environment over `cfg`.
void apply_env(Config& cfg, const EnvLookup& env = process_env);

// File (optional) then environment. Throws LoadError or ValidationError.
Config load_config(const std::optional<std::filesystem::path>& file,
                   const EnvLookup& env = process_env);

// "host:port" -> (host, port). Throws ValidationError.
std::pair<std::string, int> parse_listen_addr(std::string_view addr);

}  // namespace epi

#endif  // EPI_CONFIG_HPP_
