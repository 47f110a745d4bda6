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

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cmsim::cli {

/// Empty, integer, real (12 significant digits) or text.
using CsvCell = std::variant<std::monostate, long long, double, std::string>;

/// RFC 4180 style writer with \n line endings.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void row(const std::vector<CsvCell>& cells);
  std::size_t columns() const noexcept { return columns_; }
  const std::string& text() const noexcept { return text_; }

  static std::string format_real(double v);
  static std::string quote(std::string_view field);

 private:
  void append(const std::vector<std::string>& fields);

  std::size_t columns_;
  std::string text_;
};

}  // namespace cmsim::cli
