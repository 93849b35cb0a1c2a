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

#include "rcap/gauge_io.hpp"

#include <charconv>
#include <cmath>
#include <chrono>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <httplib.h>

#include "rcap/errors.hpp"

namespace rcap::tides {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_digits(std::string_view text, std::size_t pos, std::size_t len) {
  int value = 0;
  if (pos + len > text.size()) throw CsvFormatError(fmt::format("bad timestamp '{}'", text));
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + len, value);
  if (ec != std::errc() || ptr != text.data() + pos + len) {
    throw CsvFormatError(fmt::format("bad timestamp '{}'", text));
  }
  return value;
}

}  // namespace

std::int64_t parse_iso8601(std::string_view text) {
  text = trim(text);
  if (text.size() < 19 || text[4] != '-' || text[7] != '-' || (text[10] != 'T' && text[10] != ' ') ||
      text[13] != ':' || text[16] != ':') {
    throw CsvFormatError(fmt::format("bad timestamp '{}'", text));
  }
  const std::string_view suffix = text.substr(19);
  if (!(suffix.empty() || suffix == "Z" || suffix == "+00:00")) {
    throw CsvFormatError(fmt::format("timestamp '{}' is not UTC", text));
  }
  using namespace std::chrono;
  const year_month_day date{year{parse_digits(text, 0, 4)},
                            month{static_cast<unsigned>(parse_digits(text, 5, 2))},
                            day{static_cast<unsigned>(parse_digits(text, 8, 2))}};
  const int hh = parse_digits(text, 11, 2);
  const int mm = parse_digits(text, 14, 2);
  const int ss = parse_digits(text, 17, 2);
  if (!date.ok() || hh > 23 || mm > 59 || ss > 59) {
    throw CsvFormatError(fmt::format("bad timestamp '{}'", text));
  }
  return sys_days{date}.time_since_epoch().count() * 86400LL + hh * 3600 + mm * 60 + ss;
}

std::string format_iso8601(std::int64_t seconds) {
  using namespace std::chrono;
  const sys_seconds tp{std::chrono::seconds{seconds}};
  const sys_days day = floor<days>(tp);
  const year_month_day ymd{day};
  const hh_mm_ss hms{tp - day};
  return fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}Z", static_cast<int>(ymd.year()),
                     static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                     hms.hours().count(), hms.minutes().count(), hms.seconds().count());
}

GaugeSeries parse_gauge_csv(std::string_view text, std::string gauge_id, GeoPoint position) {
  GaugeSeries out{std::move(gauge_id), position, {}};
  double scale = 1.0;
  bool header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      if (body.starts_with("unit=")) {
        const std::string_view unit = trim(body.substr(5));
        if (unit == "cm") {
          scale = 0.01;
        } else if (unit == "m") {
          scale = 1.0;
        } else {
          throw CsvFormatError(fmt::format("line {}: unknown unit '{}'", line_no, unit));
        }
      }
      continue;
    }
    if (!header) {
      if (line != "timestamp,level") {
        throw CsvFormatError(fmt::format("line {}: expected header 'timestamp,level'", line_no));
      }
      header = true;
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw CsvFormatError(fmt::format("line {}: expected two fields", line_no));
    }
    const std::int64_t time = parse_iso8601(line.substr(0, comma));
    const std::string_view field = trim(line.substr(comma + 1));
    double level = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), level);
    if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(level)) {
      throw CsvFormatError(fmt::format("line {}: bad level '{}'", line_no, field));
    }
    if (!out.samples.empty()) {
      if (time == out.samples.back().time) {
        throw DuplicateTimestampError(fmt::format("line {}: duplicate timestamp", line_no));
      }
      if (time < out.samples.back().time) {
        throw OutOfOrderError(fmt::format("line {}: timestamp goes backwards", line_no));
      }
    }
    out.samples.push_back({time, level * scale});
  }
  if (out.samples.empty()) throw EmptySeriesError("gauge series has no samples");
  return out;
}

std::string write_gauge_csv(const GaugeSeries& series) {
  std::string out = "# unit=m\ntimestamp,level\n";
  for (const Sample& s : series.samples) {
    out += fmt::format("{},{:.17g}\n", format_iso8601(s.time), s.level);
  }
  return out;
}

GaugeSeries read_gauge_file(const std::string& path, std::string gauge_id, GeoPoint position) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInputError(fmt::format("cannot open gauge file {}", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_gauge_csv(buffer.str(), std::move(gauge_id), position);
}

GaugeSeries fetch_gauge_series(const std::string& endpoint, const std::string& gauge_id,
                               std::int64_t from, std::int64_t to) {
  const std::size_t scheme = endpoint.find("://");
  const std::size_t path_start = endpoint.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  const std::string host = endpoint.substr(0, path_start);
  std::string base = path_start == std::string::npos ? "" : endpoint.substr(path_start);
  while (!base.empty() && base.back() == '/') base.pop_back();

  httplib::Client client(host);
  client.set_connection_timeout(10);
  client.set_read_timeout(60);
  const std::string path = fmt::format("{}/gauges/{}", base, gauge_id);
  const httplib::Params params{{"from", format_iso8601(from)}, {"to", format_iso8601(to)}};
  auto result = client.Get(path, params, httplib::Headers{});
  if (!result) {
    throw NetworkError(fmt::format("GET {}{}: {}", host, path, httplib::to_string(result.error())));
  }
  if (result->status != 200) {
    throw NetworkError(fmt::format("GET {}{}: HTTP {}", host, path, result->status));
  }
  return parse_gauge_csv(result->body, gauge_id);
}

}  // namespace rcap::tides
