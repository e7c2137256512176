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

#include "numrad/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "numrad/error.hpp"

namespace numrad {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          static constexpr char kHex[] = "0123456789abcdef";
          out += "\\u00";
          out += kHex[(c >> 4) & 0xf];
          out += kHex[c & 0xf];
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

void JsonWriter::separate() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ += ',';
    first_.back() = false;
  }
  if (pending_newline_) {
    out_ += '\n';
    pending_newline_ = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  out_ += '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  first_.pop_back();
  out_ += '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  out_ += '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  first_.pop_back();
  if (pending_newline_) {
    out_ += '\n';
    pending_newline_ = false;
  }
  out_ += ']';
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  separate();
  out_ += json_escape(k);
  out_ += ':';
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double x) {
  separate();
  out_ += std::isfinite(x) ? format_double(x) : "null";
  return *this;
}

JsonWriter& JsonWriter::value(long long x) {
  separate();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(unsigned long long x) {
  separate();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(bool b) {
  separate();
  out_ += b ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
  separate();
  out_ += json_escape(s);
  return *this;
}

JsonWriter& JsonWriter::raw(std::string_view json) {
  separate();
  out_ += json;
  return *this;
}

JsonWriter& JsonWriter::newline() {
  pending_newline_ = true;
  return *this;
}

std::string report_to_json(const CheckReport& r) {
  JsonWriter w;
  w.begin_object();
  w.key("check_name").value(r.check_name);
  w.key("inputs_digest").value(r.inputs_digest);
  w.key("tolerance").value(r.tolerance);
  w.key("passed").value(r.passed);
  w.key("links").begin_array();
  for (const auto& l : r.links) {
    w.begin_object();
    w.key("lhs_label").value(l.lhs_label);
    w.key("rhs_label").value(l.rhs_label);
    w.key("lhs").value(l.lhs);
    w.key("rhs").value(l.rhs);
    w.key("slack").value(l.slack);
    w.end_object();
  }
  w.end_array();
  w.key("terms").begin_object();
  for (const auto& [label, v] : r.terms) w.key(label).value(v);
  w.end_object();
  w.end_object();
  return w.str();
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::string out =
      "check_name,inputs_digest,tolerance,passed,link,lhs_label,rhs_label,lhs,rhs,slack\n";
  for (const auto& r : reports) {
    for (std::size_t k = 0; k < r.links.size(); ++k) {
      const auto& l = r.links[k];
      out += csv_field(r.check_name) + ',' + r.inputs_digest + ',' + format_double(r.tolerance) +
             ',' + (r.passed ? "true" : "false") + ',' + std::to_string(k) + ',' +
             csv_field(l.lhs_label) + ',' + csv_field(l.rhs_label) + ',' + format_double(l.lhs) +
             ',' + format_double(l.rhs) + ',' + format_double(l.slack) + '\n';
    }
  }
  return out;
}

ComplexMatrix parse_matrix_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("matrix file: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("matrix file: top level must be an object");
  const auto n_it = doc.find("n");
  if (n_it == doc.end()) throw ParseError("matrix file: missing field \"n\"");
  if (!n_it->is_number_integer() || n_it->get<long long>() < 1) {
    throw ParseError("matrix file: field \"n\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(n_it->get<long long>());
  const auto d_it = doc.find("data");
  if (d_it == doc.end()) throw ParseError("matrix file: missing field \"data\"");
  if (!d_it->is_array()) throw ParseError("matrix file: field \"data\" must be an array");
  if (d_it->size() != n * n) {
    throw ParseError("matrix file: field \"data\" has " + std::to_string(d_it->size()) +
                     " entries, expected n*n = " + std::to_string(n * n));
  }
  std::vector<Complex> entries(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const json& e = (*d_it)[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParseError("matrix file: field \"data[" + std::to_string(k) +
                       "]\" must be a [re, im] pair of numbers");
    }
    entries[k] = {e[0].get<double>(), e[1].get<double>()};
    if (!std::isfinite(entries[k].real()) || !std::isfinite(entries[k].imag())) {
      throw ParseError("matrix file: field \"data[" + std::to_string(k) + "]\" is not finite");
    }
  }
  return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open matrix file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read matrix file " + path.string());
  return parse_matrix_json(ss.str());
}

std::string matrix_to_json(const ComplexMatrix& a,
                           const std::vector<std::pair<std::string, std::string>>& meta) {
  JsonWriter w;
  w.begin_object();
  w.key("n").value(a.dim());
  w.key("data").begin_array();
  for (Complex z : a.entries()) w.begin_array().value(z.real()).value(z.imag()).end_array();
  w.end_array();
  if (!meta.empty()) {
    w.key("meta").begin_object();
    for (const auto& [k, v] : meta) w.key(k).raw(v);
    w.end_object();
  }
  w.end_object();
  return w.str() + "\n";
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

}  // namespace numrad
