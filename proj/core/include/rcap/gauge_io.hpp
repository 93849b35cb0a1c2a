// Copyright 2026 The rcap Authors
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

// Gauge CSV wire format and HTTP retrieval.
//
//   # unit=cm
//   timestamp,level
//   2023-11-01T00:00:00Z,412
//   2023-11-01T00:01:00Z,413
//
// The unit line is optional and defaults to meters.

#ifndef RCAP_GAUGE_IO_HPP_
#define RCAP_GAUGE_IO_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "rcap/tides.hpp"

namespace rcap::tides {

inline constexpr const char* kGaugeEndpointEnv = "RCAP_GAUGE_ENDPOINT";

// "YYYY-MM-DDTHH:MM:SS" with optional "Z" or "+00:00". Throws CsvFormatError.
std::int64_t parse_iso8601(std::string_view text);
std::string format_iso8601(std::int64_t seconds);

// Throws CsvFormatError, OutOfOrderError, DuplicateTimestampError and
// EmptySeriesError.
GaugeSeries parse_gauge_csv(std::string_view text, std::string gauge_id = {},
                            GeoPoint position = {});

std::string write_gauge_csv(const GaugeSeries& series);

GaugeSeries read_gauge_file(const std::string& path, std::string gauge_id = {},
                            GeoPoint position = {});

// GET {endpoint}/gauges/{gauge_id}?from=<iso>&to=<iso>. Throws NetworkError
// for unreachable hosts and non-200 responses, then the parse errors above.
GaugeSeries fetch_gauge_series(const std::string& endpoint, const std::string& gauge_id,
                               std::int64_t from, std::int64_t to);

}  // namespace rcap::tides

#endif  // RCAP_GAUGE_IO_HPP_
