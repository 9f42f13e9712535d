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

#ifndef EPI_API_HPP_
#define EPI_API_HPP_

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "epi/event.hpp"
#include "epi/event_store.hpp"
#include "epi/lexicon.hpp"

namespace epi {

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

using Params = std::map<std::string, std::string, std::less<>>;

// RFC 7946 FeatureCollection, one Point feature per event in input order.
std::string to_geojson(std::span<const OutbreakEvent> events, const LexiconSet& lex);

// Read-only HTTP handlers over a store and lexicon. Transport-free, so the
// same object backs ApiServer and the tests.
class ApiService {
 public:
  using Clock = std::function<Timestamp()>;
  ApiService(const EventStore& store, const LexiconSet& lex, Clock clock = now_utc);

  Response handle(std::string_view method, std::string_view path, const Params& params) const;

  Response events(const Params& params) const;
  Response events_geojson(const Params& params) const;
  Response event_detail(std::string_view id) const;
  Response lexicon() const;
  Response health() const;

 private:
  // Validates disease/city/days; on failure fills `error` with a 400.
  bool build_query(const Params& params, EventQuery& q, Response& error) const;

  const EventStore& store_;
  const LexiconSet& lex_;
  Clock clock_;
};

// Serves an ApiService over HTTP with a thread pool.
class ApiServer {
 public:
  explicit ApiServer(const ApiService& service);
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  // Binds host:port (0 picks a free port) and returns the bound port.
  // Throws IoError when the address is unavailable.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace epi

#endif  // EPI_API_HPP_
