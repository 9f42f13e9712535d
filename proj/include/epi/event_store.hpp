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

#ifndef EPI_EVENT_STORE_HPP_
#define EPI_EVENT_STORE_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "epi/event.hpp"

struct sqlite3;

namespace epi {

inline constexpr int kRetentionDays = 90;

struct EventQuery {
  std::optional<std::string> disease_id;
  std::optional<std::string> city_id;
  int days_back = kRetentionDays;
  Timestamp as_of = now_utc();
};

// Durable event table. One writer at a time; queries may run from any thread.
class EventStore {
 public:
  explicit EventStore(const std::filesystem::path& file);
  ~EventStore();
  EventStore(const EventStore&) = delete;
  EventStore& operator=(const EventStore&) = delete;

  // Groups writes into one atomic unit. Store methods called on the same
  // thread while a Tx is open join it; destruction without commit() rolls
  // everything back.
  class Tx {
   public:
    explicit Tx(EventStore& store);
    ~Tx();
    Tx(const Tx&) = delete;
    Tx& operator=(const Tx&) = delete;
    void commit();

   private:
    EventStore& store_;
    std::unique_lock<std::recursive_mutex> lock_;
    bool done_ = false;
  };

  // Assigns and returns a fresh, strictly increasing event_id.
  std::int64_t put_event(const OutbreakEvent& e);
  std::optional<OutbreakEvent> get(std::int64_t event_id) const;

  // event_date in [date(as_of) - days_back, date(as_of)], newest first,
  // ties by event_id descending. Throws ValidationError if days_back < 1.
  std::vector<OutbreakEvent> query(const EventQuery& q) const;

  // Same (disease, city) with event_date in [from, to], ascending event_id.
  std::vector<OutbreakEvent> candidates(const std::string& disease_id, const std::string& city_id,
                                        Date from, Date to) const;

  // Appends (link, item_ref) unless item_ref is already attached and lowers
  // event_date to `date` if earlier. Returns false when nothing changed.
  bool merge(std::int64_t event_id, const std::string& link, const std::string& item_ref,
             Date date);

  // Deletes events with event_date < date(as_of) - retain_days.
  std::size_t purge_expired(Timestamp as_of, int retain_days = kRetentionDays);

  std::vector<OutbreakEvent> all() const;
  std::size_t size() const;

  // One JSON object per line, ascending event_id.
  void dump(std::ostream& out) const;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::vector<OutbreakEvent> load_where(const std::string& where,
                                        const std::vector<std::string>& args,
                                        const char* order) const;
  void begin();
  void finish(bool commit);

  std::filesystem::path path_;
  sqlite3* db_ = nullptr;
  mutable std::recursive_mutex mu_;
  int tx_depth_ = 0;
  bool tx_failed_ = false;
};

std::string event_to_json(const OutbreakEvent& e);

}  // namespace epi

#endif  // EPI_EVENT_STORE_HPP_
