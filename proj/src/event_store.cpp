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

#include "epi/event_store.hpp"

#include <json.hpp>

#include <ostream>

#include "sqlite.hpp"

namespace epi {
namespace {

constexpr const char* kSchema = R"sql(
PRAGMA foreign_keys = ON;
CREATE TABLE IF NOT EXISTS events (
  event_id    INTEGER PRIMARY KEY AUTOINCREMENT,
  disease_id  TEXT NOT NULL,
  city_id     TEXT NOT NULL,
  lat         REAL NOT NULL,
  lon         REAL NOT NULL,
  event_date  TEXT NOT NULL,
  detected_at TEXT NOT NULL
);
CREATE INDEX IF NOT EXISTS events_by_date ON events (event_date, event_id);
CREATE INDEX IF NOT EXISTS events_by_key ON events (disease_id, city_id, event_date);
CREATE TABLE IF NOT EXISTS event_sources (
  event_id INTEGER NOT NULL REFERENCES events (event_id) ON DELETE CASCADE,
  position INTEGER NOT NULL,
  link     TEXT NOT NULL,
  item_ref TEXT NOT NULL,
  PRIMARY KEY (event_id, position),
  UNIQUE (event_id, item_ref)
);
)sql";

Date parse_stored_date(const std::string& s) {
  auto d = parse_date(s);
  if (!d) throw IoError("event store: bad date '" + s + "'");
  return *d;
}

Timestamp parse_stored_time(const std::string& s) {
  auto t = parse_iso8601(s);
  if (!t) throw IoError("event store: bad timestamp '" + s + "'");
  return *t;
}

void validate(const OutbreakEvent& e) {
  if (e.disease_id.empty() || e.city_id.empty()) {
    throw ValidationError("event needs disease_id and city_id");
  }
  if (e.links.empty()) throw ValidationError("event needs at least one source link");
  if (e.links.size() != e.item_refs.size()) {
    throw ValidationError("event links and item_refs differ in length");
  }
  if (e.event_date > date_of(e.detected_at)) {
    throw ValidationError("event_date " + format_date(e.event_date) + " is after detected_at " +
                          format_timestamp(e.detected_at));
  }
}

}  // namespace

EventStore::EventStore(const std::filesystem::path& file) : path_(file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  db_ = sql::open(file);
  try {
    sql::exec(db_, kSchema);
  } catch (...) {
    sqlite3_close(db_);
    throw;
  }
}

EventStore::~EventStore() { sqlite3_close(db_); }

void EventStore::begin() {
  if (tx_depth_ == 0) {
    sql::exec(db_, "BEGIN IMMEDIATE");
    tx_failed_ = false;
  }
  ++tx_depth_;
}

void EventStore::finish(bool commit) {
  if (!commit) tx_failed_ = true;
  if (--tx_depth_ > 0) return;
  if (tx_failed_) {
    sqlite3_exec(db_, "ROLLBACK", nullptr, nullptr, nullptr);
    if (commit) throw IoError("event store: transaction rolled back after an inner failure");
    return;
  }
  try {
    sql::exec(db_, "COMMIT");
  } catch (...) {
    sqlite3_exec(db_, "ROLLBACK", nullptr, nullptr, nullptr);
    throw;
  }
}

EventStore::Tx::Tx(EventStore& store) : store_(store), lock_(store.mu_) { store_.begin(); }

EventStore::Tx::~Tx() {
  if (!done_) store_.finish(false);
}

void EventStore::Tx::commit() {
  done_ = true;
  store_.finish(true);
}

std::int64_t EventStore::put_event(const OutbreakEvent& e) {
  validate(e);
  Tx tx(*this);
  sql::Stmt ins(db_,
                "INSERT INTO events (disease_id, city_id, lat, lon, event_date, detected_at) "
                "VALUES (?1, ?2, ?3, ?4, ?5, ?6)");
  ins.bind(1, e.disease_id)
      .bind(2, e.city_id)
      .bind(3, e.lat)
      .bind(4, e.lon)
      .bind(5, format_date(e.event_date))
      .bind(6, format_timestamp(e.detected_at));
  ins.run();
  const std::int64_t id = sqlite3_last_insert_rowid(db_);
  sql::Stmt src(db_,
                "INSERT INTO event_sources (event_id, position, link, item_ref) "
                "VALUES (?1, ?2, ?3, ?4)");
  for (std::size_t i = 0; i < e.links.size(); ++i) {
    src.bind(1, id).bind(2, static_cast<std::int64_t>(i)).bind(3, e.links[i]).bind(4, e.item_refs[i]);
    src.run();
    src.reset();
  }
  tx.commit();
  return id;
}

std::vector<OutbreakEvent> EventStore::load_where(const std::string& where,
                                                  const std::vector<std::string>& args,
                                                  const char* order) const {
  std::lock_guard lock(mu_);
  const std::string sql =
      "SELECT event_id, disease_id, city_id, lat, lon, event_date, detected_at FROM events " +
      where + " ORDER BY " + order;
  sql::Stmt q(db_, sql.c_str());
  for (std::size_t i = 0; i < args.size(); ++i) q.bind(static_cast<int>(i + 1), args[i]);
  std::vector<OutbreakEvent> out;
  while (q.step()) {
    OutbreakEvent e;
    e.event_id = q.int64(0);
    e.disease_id = q.text(1);
    e.city_id = q.text(2);
    e.lat = q.real(3);
    e.lon = q.real(4);
    e.event_date = parse_stored_date(q.text(5));
    e.detected_at = parse_stored_time(q.text(6));
    out.push_back(std::move(e));
  }
  if (out.empty()) return out;
  sql::Stmt src(db_,
                "SELECT link, item_ref FROM event_sources WHERE event_id = ?1 ORDER BY position");
  for (auto& e : out) {
    src.bind(1, e.event_id);
    while (src.step()) {
      e.links.push_back(src.text(0));
      e.item_refs.push_back(src.text(1));
    }
    src.reset();
  }
  return out;
}

std::optional<OutbreakEvent> EventStore::get(std::int64_t event_id) const {
  auto v = load_where("WHERE event_id = ?1", {std::to_string(event_id)}, "event_id");
  if (v.empty()) return std::nullopt;
  return std::move(v.front());
}

std::vector<OutbreakEvent> EventStore::query(const EventQuery& q) const {
  if (q.days_back < 1) throw ValidationError("days_back must be at least 1");
  const Date to = date_of(q.as_of);
  const Date from = to - std::chrono::days(q.days_back);
  std::string where = "WHERE event_date >= ?1 AND event_date <= ?2";
  std::vector<std::string> args{format_date(from), format_date(to)};
  if (q.disease_id) {
    args.push_back(*q.disease_id);
    where += " AND disease_id = ?" + std::to_string(args.size());
  }
  if (q.city_id) {
    args.push_back(*q.city_id);
    where += " AND city_id = ?" + std::to_string(args.size());
  }
  return load_where(where, args, "event_date DESC, event_id DESC");
}

std::vector<OutbreakEvent> EventStore::candidates(const std::string& disease_id,
                                                  const std::string& city_id, Date from,
                                                  Date to) const {
  return load_where(
      "WHERE disease_id = ?1 AND city_id = ?2 AND event_date >= ?3 AND event_date <= ?4",
      {disease_id, city_id, format_date(from), format_date(to)}, "event_id");
}

bool EventStore::merge(std::int64_t event_id, const std::string& link, const std::string& item_ref,
                       Date date) {
  Tx tx(*this);
  bool changed = false;
  {
    sql::Stmt has(db_, "SELECT event_date FROM events WHERE event_id = ?1");
    has.bind(1, event_id);
    if (!has.step()) throw ValidationError("no event with id " + std::to_string(event_id));
    if (date < parse_stored_date(has.text(0))) {
      sql::Stmt up(db_, "UPDATE events SET event_date = ?1 WHERE event_id = ?2");
      up.bind(1, format_date(date)).bind(2, event_id);
      up.run();
      changed = true;
    }
  }
  {
    sql::Stmt ins(db_,
                  "INSERT OR IGNORE INTO event_sources (event_id, position, link, item_ref) "
                  "SELECT ?1, COALESCE(MAX(position) + 1, 0), ?2, ?3 FROM event_sources "
                  "WHERE event_id = ?1");
    ins.bind(1, event_id).bind(2, link).bind(3, item_ref);
    ins.run();
    changed = changed || sqlite3_changes(db_) > 0;
  }
  tx.commit();
  return changed;
}

std::size_t EventStore::purge_expired(Timestamp as_of, int retain_days) {
  if (retain_days < 0) throw ValidationError("retain_days must not be negative");
  const Date cutoff = date_of(as_of) - std::chrono::days(retain_days);
  Tx tx(*this);
  sql::Stmt del(db_, "DELETE FROM events WHERE event_date < ?1");
  del.bind(1, format_date(cutoff));
  del.run();
  const auto n = static_cast<std::size_t>(sqlite3_changes(db_));
  tx.commit();
  return n;
}

std::vector<OutbreakEvent> EventStore::all() const { return load_where("", {}, "event_id"); }

std::size_t EventStore::size() const {
  std::lock_guard lock(mu_);
  sql::Stmt q(db_, "SELECT COUNT(*) FROM events");
  q.step();
  return static_cast<std::size_t>(q.int64(0));
}

std::string event_to_json(const OutbreakEvent& e) {
  nlohmann::ordered_json j{
      {"event_id", e.event_id},
      {"disease_id", e.disease_id},
      {"city_id", e.city_id},
      {"lat", e.lat},
      {"lon", e.lon},
      {"event_date", format_date(e.event_date)},
      {"links", e.links},
      {"item_refs", e.item_refs},
      {"detected_at", format_timestamp(e.detected_at)},
  };
  return j.dump();
}

void EventStore::dump(std::ostream& out) const {
  for (const auto& e : all()) out << event_to_json(e) << '\n';
}

}  // namespace epi
