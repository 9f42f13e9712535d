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

#include "epi/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "epi/error.hpp"

namespace epi {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

int parse_int(std::string_view v, std::string_view key, int min, const std::string& at) {
  int n = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (ec != std::errc() || p != v.data() + v.size() || n < min) {
    throw ValidationError(at + ": " + std::string(key) + " must be an integer >= " +
                          std::to_string(min));
  }
  return n;
}

bool parse_bool(std::string_view v, std::string_view key, const std::string& at) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ValidationError(at + ": " + std::string(key) + " must be true or false");
}

std::filesystem::path resolve(std::string_view v, const std::filesystem::path& base) {
  std::filesystem::path p{std::string(v)};
  return p.is_absolute() || base.empty() ? p : base / p;
}

// Returns false for unknown keys.
bool set_key(Config& cfg, std::string_view key, std::string_view value,
             const std::filesystem::path& base, const std::string& at) {
  if (key == "DATA_DIR") {
    cfg.data_dir = resolve(value, base);
  } else if (key == "LEXICON_DIR") {
    cfg.lexicon_dir = resolve(value, base);
  } else if (key == "LISTEN_ADDR") {
    parse_listen_addr(value);
    cfg.listen_addr = std::string(value);
  } else if (key == "DEDUP_WINDOW_DAYS") {
    cfg.dedup_window_days = parse_int(value, key, 0, at);
  } else if (key == "RETENTION_DAYS") {
    cfg.retention_days = parse_int(value, key, 1, at);
  } else if (key == "DISEASE_FALLBACK") {
    cfg.disease_fallback = parse_bool(value, key, at);
  } else if (key == "FETCH_TIMEOUT_SECONDS") {
    cfg.fetch_timeout_seconds = parse_int(value, key, 1, at);
  } else {
    return false;
  }
  return true;
}

constexpr const char* kKeys[] = {"DATA_DIR",       "LEXICON_DIR",      "LISTEN_ADDR",
                                 "DEDUP_WINDOW_DAYS", "RETENTION_DAYS", "DISEASE_FALLBACK",
                                 "FETCH_TIMEOUT_SECONDS"};

}  // namespace

std::filesystem::path default_lexicon_dir() { return EPI_DEFAULT_LEXICON_DIR; }

std::optional<std::string> process_env(const char* name) {
  const char* v = std::getenv(name);
  if (!v) return std::nullopt;
  return std::string(v);
}

std::pair<std::string, int> parse_listen_addr(std::string_view addr) {
  const auto colon = addr.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw ValidationError("LISTEN_ADDR must be host:port, got '" + std::string(addr) + "'");
  }
  std::string host(addr.substr(0, colon));
  if (host.size() > 2 && host.front() == '[' && host.back() == ']') host = host.substr(1, host.size() - 2);
  const auto port_s = addr.substr(colon + 1);
  int port = -1;
  auto [p, ec] = std::from_chars(port_s.data(), port_s.data() + port_s.size(), port);
  if (ec != std::errc() || p != port_s.data() + port_s.size() || port < 0 || port > 65535) {
    throw ValidationError("LISTEN_ADDR has a bad port: '" + std::string(addr) + "'");
  }
  return {host, port};
}

Config parse_config(std::string_view text, const std::filesystem::path& base_dir,
                    std::string_view origin) {
  Config cfg;
  std::set<std::string> ids;
  std::size_t n = 0, start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++n;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const std::string at = std::string(origin) + ":" + std::to_string(n);
    if (line.find('\t') != std::string_view::npos) {
      auto src = parse_source_line(line, at);
      if (!ids.insert(src.source_id).second) {
        throw ValidationError(at + ": duplicate source_id '" + src.source_id + "'");
      }
      cfg.sources.push_back(std::move(src));
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError(at + ": expected KEY=VALUE or a tab-separated source record");
    }
    const auto key = trim(t.substr(0, eq));
    const auto value = trim(t.substr(eq + 1));
    try {
      if (!set_key(cfg, key, value, base_dir, at)) {
        throw ValidationError(at + ": unknown setting '" + std::string(key) + "'");
      }
    } catch (const ValidationError& e) {
      const std::string what = e.what();
      throw ValidationError(what.starts_with(at) ? what : at + ": " + what);
    }
  }
  return cfg;
}

void apply_env(Config& cfg, const EnvLookup& env) {
  for (const char* key : kKeys) {
    if (auto v = env(key)) {
      try {
        set_key(cfg, key, trim(*v), std::filesystem::current_path(), std::string("$") + key);
      } catch (const ValidationError& e) {
        const std::string what = e.what();
        throw ValidationError(what.starts_with("$") ? what : std::string("$") + key + ": " + what);
      }
    }
  }
}

Config load_config(const std::optional<std::filesystem::path>& file, const EnvLookup& env) {
  Config cfg;
  if (file) {
    std::ifstream in(*file, std::ios::binary);
    if (!in) throw LoadError("cannot open config " + file->string());
    std::ostringstream ss;
    ss << in.rdbuf();
    cfg = parse_config(ss.str(), std::filesystem::absolute(*file).parent_path(),
                       file->filename().string());
  }
  apply_env(cfg, env);
  return cfg;
}

}  // namespace epi
