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

#include "epi/item_store.hpp"

#include <unordered_set>

#include "sqlite.hpp"

namespace epi {
namespace {

constexpr const char* kSchema = R"sql(
CREATE TABLE IF NOT EXISTS items (
  seq         INTEGER PRIMARY KEY,
  access_no   TEXT NOT NULL UNIQUE,
  source_id   TEXT NOT NULL,
  title       TEXT NOT NULL,
  description TEXT NOT NULL,
  link        TEXT NOT NULL,
  published   TEXT NOT NULL,
  fetched_at  TEXT NOT NULL,
  flag        INTEGER NOT NULL CHECK (flag IN (0, 1))
);
)sql";

constexpr const char* kColumns =
    "access_no, source_id, title, description, link, published, fetched_at, flag";

Timestamp parse_stored(const std::string& s) {
  auto t = parse_iso8601(s);
  if (!t) throw IoError("item store: bad timestamp '" + s + "'");
  return *t;
}

}  // namespace

ItemStore::ItemStore(const std::filesystem::path& file) : path_(file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  db_ = sql::open(file);
  try {
    // Only create the table when missing so reopening never writes.
    sql::Stmt probe(db_, "SELECT 1 FROM sqlite_master WHERE type='table' AND name='items'");
    if (!probe.step()) sql::exec(db_, kSchema);
  } catch (...) {
    sqlite3_close(db_);
    throw;
  }
}

ItemStore::~ItemStore() { sqlite3_close(db_); }

std::size_t ItemStore::ingest(std::span<const FeedItem> items) {
  std::lock_guard lock(mu_);
  std::vector<const FeedItem*> fresh;
  {
    sql::Stmt known(db_, "SELECT 1 FROM items WHERE access_no = ?1");
    std::unordered_set<std::string_view> batch;
    for (const auto& item : items) {
      if (!batch.insert(item.access_no).second) continue;
      known.bind(1, item.access_no);
      const bool exists = known.step();
      known.reset();
      if (!exists) fresh.push_back(&item);
    }
  }
  if (fresh.empty()) return 0;

  sql::Transaction tx(db_);
  sql::Stmt ins(db_,
                "INSERT INTO items (access_no, source_id, title, description, link, published, "
                "fetched_at, flag) VALUES (?1, ?2, ?3, ?4, ?5, ?6, ?7, 1)");
  for (const FeedItem* item : fresh) {
    ins.bind(1, item->access_no)
        .bind(2, item->source_id)
        .bind(3, item->title)
        .bind(4, item->description)
        .bind(5, item->link)
        .bind(6, format_timestamp(item->published))
        .bind(7, format_timestamp(item->fetched_at));
    ins.run();
    ins.reset();
  }
  tx.commit();
  return fresh.size();
}

bool ItemStore::contains(std::string_view access_no) const {
  std::lock_guard lock(mu_);
  sql::Stmt q(db_, "SELECT 1 FROM items WHERE access_no = ?1");
  q.bind(1, access_no);
  return q.step();
}

std::vector<FeedItem> ItemStore::select(const char* where) const {
  std::lock_guard lock(mu_);
  const std::string sql = std::string("SELECT ") + kColumns + " FROM items " + where + " ORDER BY seq";
  sql::Stmt q(db_, sql.c_str());
  std::vector<FeedItem> out;
  while (q.step()) {
    FeedItem it;
    it.access_no = q.text(0);
    it.source_id = q.text(1);
    it.title = q.text(2);
    it.description = q.text(3);
    it.link = q.text(4);
    it.published = parse_stored(q.text(5));
    it.fetched_at = parse_stored(q.text(6));
    it.flag = q.int64(7) ? ItemFlag::New : ItemFlag::Processed;
    out.push_back(std::move(it));
  }
  return out;
}

std::vector<FeedItem> ItemStore::pending() const { return select("WHERE flag = 1"); }

std::vector<FeedItem> ItemStore::all() const { return select(""); }

std::size_t ItemStore::size() const {
  std::lock_guard lock(mu_);
  sql::Stmt q(db_, "SELECT COUNT(*) FROM items");
  q.step();
  return static_cast<std::size_t>(q.int64(0));
}

void ItemStore::mark_processed(std::span<const std::string> access_nos) {
  if (access_nos.empty()) return;
  std::lock_guard lock(mu_);
  sql::Transaction tx(db_);
  sql::Stmt up(db_, "UPDATE items SET flag = 0 WHERE access_no = ?1 AND flag = 1");
  for (const auto& a : access_nos) {
    up.bind(1, a);
    up.run();
    up.reset();
  }
  tx.commit();
}

}  // namespace epi
