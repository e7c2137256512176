// Copyright 2026 The numrad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats: check reports (JSON and CSV) and the matrix file format
// {"n": int, "data": [[re, im], ...]} with n*n row-major entries.
// Numbers are written with 17 significant digits through std::to_chars, so
// output is locale independent and round-trips exactly.

#ifndef NUMRAD_REPORT_IO_HPP
#define NUMRAD_REPORT_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numrad/inequalities.hpp"
#include "numrad/linalg.hpp"

namespace numrad {

/// 17 significant digits, shortest of fixed/scientific; "nan", "inf",
/// "-inf" for non-finite values.
std::string format_double(double x);

/// Minimal streaming JSON writer; commas and nesting are tracked for the
/// caller. Non-finite numbers are written as null.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double x);
  JsonWriter& value(long long x);
  JsonWriter& value(unsigned long long x);
  JsonWriter& value(int x) { return value(static_cast<long long>(x)); }
  JsonWriter& value(std::size_t x) { return value(static_cast<unsigned long long>(x)); }
  JsonWriter& value(bool b);
  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  /// Inserts pre-serialized JSON as one value.
  JsonWriter& raw(std::string_view json);
  /// Starts a new line before the next value (only between array elements).
  JsonWriter& newline();

  const std::string& str() const { return out_; }

 private:
  void separate();
  std::string out_;
  std::vector<bool> first_;  // per open container: no element written yet
  bool after_key_ = false;
  bool pending_newline_ = false;
};

std::string json_escape(std::string_view s);

/// One report as a single-line JSON object with the fields check_name,
/// inputs_digest, tolerance, passed, links, terms.
std::string report_to_json(const CheckReport& r);

/// CSV with a header row and one row per link. Fields containing commas or
/// quotes are quoted; lines end in LF.
std::string reports_to_csv(const std::vector<CheckReport>& reports);
std::string csv_field(std::string_view s);

/// Throws ParseError naming the offending field.
ComplexMatrix parse_matrix_json(std::string_view text);
/// Throws IoError when the file cannot be read, ParseError on bad content.
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

/// Matrix file text; `meta` entries, when given, go into a "meta" object
/// next to "n" and "data".
std::string matrix_to_json(const ComplexMatrix& a,
                           const std::vector<std::pair<std::string, std::string>>& meta = {});

/// Writes `text` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace numrad

#endif  // NUMRAD_REPORT_IO_HPP
