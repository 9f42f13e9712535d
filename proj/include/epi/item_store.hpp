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

#ifndef EPI_ITEM_STORE_HPP_
#define EPI_ITEM_STORE_HPP_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "epi/feed.hpp"

struct sqlite3;

namespace epi {

// Raw news items keyed by access_no. Single writer: every method takes the
// internal lock, and a second process is kept out by the CLI lock file.
class ItemStore {
 public:
  explicit ItemStore(const std::filesystem::path& file);
  ~ItemStore();
  ItemStore(const ItemStore&) = delete;
  ItemStore& operator=(const ItemStore&) = delete;

  // Stores items whose access_no is unknown, flagged NEW. Returns how many
  // were stored. The file is not written at all when nothing is new.
  std::size_t ingest(std::span<const FeedItem> items);

  bool contains(std::string_view access_no) const;
  std::vector<FeedItem> pending() const;
  std::vector<FeedItem> all() const;
  std::size_t size() const;

  // NEW -> PROCESSED. Unknown or already processed refs are ignored.
  void mark_processed(std::span<const std::string> access_nos);

  const std::filesystem::path& path() const { return path_; }

 private:
  std::vector<FeedItem> select(const char* sql) const;

  std::filesystem::path path_;
  sqlite3* db_ = nullptr;
  mutable std::mutex mu_;
};

}  // namespace epi

#endif  // EPI_ITEM_STORE_HPP_
