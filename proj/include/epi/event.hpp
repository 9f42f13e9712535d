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

#ifndef EPI_EVENT_HPP_
#define EPI_EVENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "epi/clock.hpp"

namespace epi {

struct OutbreakEvent {
  std::int64_t event_id = 0;  // 0 until stored
  std::string disease_id;
  std::string city_id;
  double lat = 0;
  double lon = 0;
  Date event_date{};
  std::vector<std::string> links;      // aligned with item_refs
  std::vector<std::string> item_refs;  // access_no of each backing item
  Timestamp detected_at{};

  friend bool operator==(const OutbreakEvent&, const OutbreakEvent&) = default;
};

}  // namespace epi

#endif  // EPI_EVENT_HPP_
