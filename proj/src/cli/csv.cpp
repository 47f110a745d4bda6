// Copyright 2026 The cmsim Authors
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

#include <cmath>
#include <cstdio>

#include "cmsim/csv.hpp"
#include "cmsim/errors.hpp"

namespace cmsim::cli {

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  if (header.empty()) throw ArgumentError("CSV header must not be empty");
  append(header);
}

void CsvWriter::row(const std::vector<CsvCell>& cells) {
  if (cells.size() != columns_) throw ArgumentError("CSV row width does not match the header");
  std::vector<std::string> fields;
  fields.reserve(cells.size());
  for (const auto& c : cells) {
    if (std::holds_alternative<std::monostate>(c)) {
      fields.emplace_back();
    } else if (const auto* i = std::get_if<long long>(&c)) {
      fields.push_back(std::to_string(*i));
    } else if (const auto* d = std::get_if<double>(&c)) {
      fields.push_back(format_real(*d));
    } else {
      fields.push_back(std::get<std::string>(c));
    }
  }
  append(fields);
}

std::string CsvWriter::format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string CsvWriter::quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void CsvWriter::append(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) text_ += ',';
    text_ += quote(fields[i]);
  }
  text_ += '\n';
}

}  // namespace cmsim::cli
