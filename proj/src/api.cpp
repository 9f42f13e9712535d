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

#include "epi/api.hpp"

#include <httplib.h>

#include <charconv>
#include <json.hpp>

#include "epi/error.hpp"

namespace epi {
namespace {

using nlohmann::ordered_json;

Response json_response(int status, const ordered_json& j) {
  return {status, "application/json", j.dump() + "\n"};
}

Response error_response(int status, const std::string& message) {
  return json_response(status, ordered_json{{"error", message}});
}

ordered_json names(const std::string& id, const std::string& urdu, const std::string& english) {
  return ordered_json{{"id", id}, {"urdu", urdu}, {"english", english}};
}

// Flat record used by /api/events.
ordered_json event_json(const OutbreakEvent& e, const LexiconSet& lex, bool detail) {
  const DiseaseEntry* d = lex.disease(e.disease_id);
  const CityEntry* c = lex.city(e.city_id);
  ordered_json j{
      {"event_id", e.event_id},
      {"disease_id", e.disease_id},
      {"disease_urdu", d ? d->urdu : ""},
      {"disease_english", d ? d->english : ""},
      {"city_id", e.city_id},
      {"city_urdu", c ? c->urdu : ""},
      {"city_english", c ? c->english : ""},
      {"lat", e.lat},
      {"lon", e.lon},
      {"event_date", format_date(e.event_date)},
      {"links", e.links},
  };
  if (detail) j["item_refs"] = e.item_refs;
  j["detected_at"] = format_timestamp(e.detected_at);
  return j;
}

const std::string* param(const Params& p, std::string_view key) {
  auto it = p.find(key);
  if (it == p.end() || it->second.empty()) return nullptr;
  return &it->second;
}

}  // namespace

std::string to_geojson(std::span<const OutbreakEvent> events, const LexiconSet& lex) {
  ordered_json features = ordered_json::array();
  for (const auto& e : events) {
    const DiseaseEntry* d = lex.disease(e.disease_id);
    const CityEntry* c = lex.city(e.city_id);
    features.push_back(ordered_json{
        {"type", "Feature"},
        {"id", e.event_id},
        {"geometry", {{"type", "Point"}, {"coordinates", {e.lon, e.lat}}}},
        {"properties",
         {{"event_id", e.event_id},
          {"disease", names(e.disease_id, d ? d->urdu : "", d ? d->english : "")},
          {"city", names(e.city_id, c ? c->urdu : "", c ? c->english : "")},
          {"date", format_date(e.event_date)},
          {"links", e.links}}},
    });
  }
  return ordered_json{{"type", "FeatureCollection"}, {"features", std::move(features)}}.dump();
}

ApiService::ApiService(const EventStore& store, const LexiconSet& lex, Clock clock)
    : store_(store), lex_(lex), clock_(std::move(clock)) {}

bool ApiService::build_query(const Params& params, EventQuery& q, Response& error) const {
  if (const auto* d = param(params, "disease")) {
    if (!lex_.disease(*d)) {
      error = error_response(400, "unknown disease '" + *d + "'");
      return false;
    }
    q.disease_id = *d;
  }
  if (const auto* c = param(params, "city")) {
    if (!lex_.city(*c)) {
      error = error_response(400, "unknown city '" + *c + "'");
      return false;
    }
    q.city_id = *c;
  }
  if (const auto* s = param(params, "days")) {
    int days = 0;
    auto [p, ec] = std::from_chars(s->data(), s->data() + s->size(), days);
    if (ec != std::errc() || p != s->data() + s->size() || days < 1) {
      error = error_response(400, "days must be an integer >= 1");
      return false;
    }
    q.days_back = days;
  }
  q.as_of = clock_();
  return true;
}

Response ApiService::events(const Params& params) const {
  EventQuery q;
  Response err;
  if (!build_query(params, q, err)) return err;
  try {
    ordered_json list = ordered_json::array();
    for (const auto& e : store_.query(q)) list.push_back(event_json(e, lex_, false));
    return json_response(200, ordered_json{{"events", std::move(list)}});
  } catch (const IoError& e) {
    return error_response(500, e.what());
  }
}

Response ApiService::events_geojson(const Params& params) const {
  EventQuery q;
  Response err;
  if (!build_query(params, q, err)) return err;
  try {
    const auto events = store_.query(q);
    return {200, "application/geo+json", to_geojson(events, lex_) + "\n"};
  } catch (const IoError& e) {
    return error_response(500, e.what());
  }
}

Response ApiService::event_detail(std::string_view id) const {
  std::int64_t n = 0;
  auto [p, ec] = std::from_chars(id.data(), id.data() + id.size(), n);
  if (id.empty() || ec != std::errc() || p != id.data() + id.size() || n < 1) {
    return error_response(404, "no event " + std::string(id));
  }
  try {
    auto e = store_.get(n);
    if (!e) return error_response(404, "no event " + std::string(id));
    return json_response(200, event_json(*e, lex_, true));
  } catch (const IoError& ex) {
    return error_response(500, ex.what());
  }
}

Response ApiService::lexicon() const {
  ordered_json diseases = ordered_json::array();
  for (const auto& d : lex_.diseases()) diseases.push_back(names(d.id, d.urdu, d.english));
  ordered_json cities = ordered_json::array();
  for (const auto& c : lex_.cities()) {
    auto j = names(c.id, c.urdu, c.english);
    j["lat"] = c.lat;
    j["lon"] = c.lon;
    cities.push_back(std::move(j));
  }
  return json_response(200, ordered_json{{"diseases", diseases}, {"cities", cities}});
}

Response ApiService::health() const { return {200, "text/plain", "ok"}; }

Response ApiService::handle(std::string_view method, std::string_view path,
                            const Params& params) const {
  if (method != "GET" && method != "HEAD") return error_response(405, "read-only API");
  if (path == "/healthz") return health();
  if (path == "/api/events") return events(params);
  if (path == "/api/events.geojson") return events_geojson(params);
  if (path == "/api/lexicon") return lexicon();
  constexpr std::string_view kDetail = "/api/events/";
  if (path.starts_with(kDetail)) return event_detail(path.substr(kDetail.size()));
  return error_response(404, "not found");
}

struct ApiServer::Impl {
  explicit Impl(const ApiService& s) : service(s) {}
  const ApiService& service;
  httplib::Server server;
};

ApiServer::ApiServer(const ApiService& service) : impl_(std::make_unique<Impl>(service)) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    Params params;
    for (const auto& [k, v] : req.params) params.emplace(k, v);
    Response r = impl_->service.handle(req.method, req.path, params);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(std::move(r.body), r.content_type);
  };
  // Plain SO_REUSEADDR: the library default adds SO_REUSEPORT, which would let a
  // second server silently share a port that is already serving.
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  impl_->server.Get(".*", handler);
  auto not_allowed = [](const httplib::Request&, httplib::Response& res) {
    res.status = 405;
    res.set_content("{\"error\":\"read-only API\"}\n", "application/json");
  };
  impl_->server.Post(".*", not_allowed);
  impl_->server.Put(".*", not_allowed);
  impl_->server.Delete(".*", not_allowed);
  impl_->server.Patch(".*", not_allowed);
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::bind(const std::string& host, int port) {
  int bound = -1;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
  } else if (impl_->server.bind_to_port(host, port)) {
    bound = port;
  }
  if (bound < 0) throw IoError("cannot listen on " + host + ":" + std::to_string(port));
  return bound;
}

void ApiServer::listen() { impl_->server.listen_after_bind(); }

void ApiServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace epi
