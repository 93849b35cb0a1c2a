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

#ifndef RCAP_ERRORS_HPP_
#define RCAP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rcap {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Indices out of range, wrong shapes, unparsable files.
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

// Caller supplied an inconsistent combination of options or inputs.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// A numeric argument outside its admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid tuning parameter (e.g. more clusters than zones).
class ParameterError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// Time series that do not share a sampling grid, or a gap too large to fill.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

// Enumeration guard of the brute-force oracle exceeded.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

// Gauge ingestion errors. Each failure mode has its own type so callers can
// distinguish transport problems from bad payloads.
class GaugeError : public Error {
 public:
  using Error::Error;
};

class NetworkError : public GaugeError {
 public:
  using GaugeError::GaugeError;
};

class CsvFormatError : public GaugeError {
 public:
  using GaugeError::GaugeError;
};

class OutOfOrderError : public GaugeError {
 public:
  using GaugeError::GaugeError;
};

class DuplicateTimestampError : public GaugeError {
 public:
  using GaugeError::GaugeError;
};

class EmptySeriesError : public GaugeError {
 public:
  using GaugeError::GaugeError;
};

}  // namespace rcap

#endif  // RCAP_ERRORS_HPP_
