// Copyright 2026 The itz Authors.
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

#include "itz/csv.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

namespace itz {

std::string format_real(double value) { return fmt::format("{:.16e}", value); }

void write_csv_header(std::ostream& out, std::initializer_list<std::string_view> columns,
                      const std::vector<std::string>& metadata) {
  for (const auto& line : metadata) out << "# " << line << '\n';
  bool first = true;
  for (auto c : columns) {
    if (!first) out << ',';
    out << c;
    first = false;
  }
  out << '\n';
}

std::vector<std::vector<std::string>> read_csv_rows(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace itz
