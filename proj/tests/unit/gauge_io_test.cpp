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

#include <string>
#include <thread>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <gtest/gtest.h>
#include <httplib.h>

#include "rcap/errors.hpp"
#include "rcap/gauge_io.hpp"

namespace rcap::tides {
namespace {

TEST(Iso8601, RoundTrip) {
  EXPECT_EQ(parse_iso8601("1970-01-01T00:00:00Z"), 0);
  EXPECT_EQ(parse_iso8601("2023-11-20T00:00:00Z"), 1700438400);
  EXPECT_EQ(parse_iso8601("2023-11-20T00:00:00+00:00"), 1700438400);
  EXPECT_EQ(parse_iso8601("2024-02-29T12:34:56"), 1709210096);
  EXPECT_EQ(format_iso8601(1709210096), "2024-02-29T12:34:56Z");
  for (std::int64_t t : {0LL, 59LL, 86399LL, 951782400LL, 1700438400LL}) {
    EXPECT_EQ(parse_iso8601(format_iso8601(t)), t);
  }
}

TEST(Iso8601, Rejects) {
  EXPECT_THROW(parse_iso8601("2023-02-30T00:00:00Z"), CsvFormatError);
  EXPECT_THROW(parse_iso8601("2023-11-20T24:00:00Z"), CsvFormatError);
  EXPECT_THROW(parse_iso8601("2023-11-20T00:00:00+01:00"), CsvFormatError);
  EXPECT_THROW(parse_iso8601("20231120"), CsvFormatError);
}

TEST(GaugeCsv, ParsesUnitsAndComments) {
  const auto s = parse_gauge_csv(
      "# station: Cuxhaven\n# unit=cm\ntimestamp,level\n2023-11-01T00:00:00Z,412\n\n2023-11-01T00:01:00Z,-3.5\n",
      "cux", {53.87, 8.72});
  EXPECT_EQ(s.gauge_id, "cux");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s.samples[0].level, 4.12);
  EXPECT_DOUBLE_EQ(s.samples[1].level, -0.035);
  EXPECT_EQ(s.samples[1].time - s.samples[0].time, 60);
}

TEST(GaugeCsv, WriteParseRoundTrip) {
  GaugeSeries s{"g", {}, {{1700438400, 0.1}, {1700438460, -1.0 / 3.0}, {1700438520, 2.5}}};
  const auto back = parse_gauge_csv(write_gauge_csv(s), "g");
  EXPECT_EQ(back.samples, s.samples);
}

TEST(GaugeCsv, Errors) {
  EXPECT_THROW(parse_gauge_csv("time,level\n"), CsvFormatError);
  EXPECT_THROW(parse_gauge_csv("timestamp,level\n2023-11-01T00:00:00Z\n"), CsvFormatError);
  EXPECT_THROW(parse_gauge_csv("timestamp,level\n2023-11-01T00:00:00Z,abc\n"), CsvFormatError);
  EXPECT_THROW(parse_gauge_csv("# unit=ft\ntimestamp,level\n"), CsvFormatError);
  EXPECT_THROW(parse_gauge_csv("timestamp,level\n"), EmptySeriesError);
  EXPECT_THROW(parse_gauge_csv("timestamp,level\n2023-11-01T00:01:00Z,1\n2023-11-01T00:00:00Z,1\n"),
               OutOfOrderError);
  EXPECT_THROW(parse_gauge_csv("timestamp,level\n2023-11-01T00:00:00Z,1\n2023-11-01T00:00:00Z,1\n"),
               DuplicateTimestampError);
}

class GaugeServer : public ::testing::Test {
 protected:
  void SetUp() override {
    server_.Get(R"(/api/gauges/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
      last_from_ = req.get_param_value("from");
      last_to_ = req.get_param_value("to");
      if (req.matches[1] == "missing") {
        res.status = 404;
        return;
      }
      if (req.matches[1] == "garbled") {
        res.set_content("not a csv", "text/csv");
        return;
      }
      res.set_content("# unit=cm\ntimestamp,level\n2023-11-20T00:00:00Z,100\n2023-11-20T00:01:00Z,101\n",
                      "text/csv");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  void TearDown() override {
    server_.stop();
    thread_.join();
  }
  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_) + "/api/"; }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::string last_from_;
  std::string last_to_;
};

TEST_F(GaugeServer, FetchesSeries) {
  const auto s = fetch_gauge_series(endpoint(), "cux", 1700438400, 1700438460);
  EXPECT_EQ(s.gauge_id, "cux");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s.samples[1].level, 1.01);
  EXPECT_EQ(last_from_, "2023-11-20T00:00:00Z");
  EXPECT_EQ(last_to_, "2023-11-20T00:01:00Z");
}

TEST_F(GaugeServer, NotFoundIsNetworkError) {
  EXPECT_THROW(fetch_gauge_series(endpoint(), "missing", 0, 60), NetworkError);
}

TEST_F(GaugeServer, BadBodyIsCsvError) {
  EXPECT_THROW(fetch_gauge_series(endpoint(), "garbled", 0, 60), CsvFormatError);
}

TEST(GaugeFetch, UnreachableHost) {
  // Grab a free port, then release it so connecting is refused.
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  ASSERT_GE(fd, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  socklen_t len = sizeof addr;
  ASSERT_EQ(::bind(fd, reinterpret_cast<sockaddr*>(&addr), len), 0);
  ASSERT_EQ(::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len), 0);
  const int port = ntohs(addr.sin_port);
  ::close(fd);
  EXPECT_THROW(fetch_gauge_series("http://127.0.0.1:" + std::to_string(port), "g", 0, 60), NetworkError);
}

}  // namespace
}  // namespace rcap::tides
