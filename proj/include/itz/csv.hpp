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

#ifndef ITZ_CSV_HPP
#define ITZ_CSV_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace itz {

/// 17 significant digits in scientific notation, e.g. "1.2732395447351628e+00".
/// Round-trips every double exactly and produces byte-identical output.
std::string format_real(double value);

/// Writes '#'-prefixed metadata lines (if any) and the column header.
void write_csv_header(std::ostream& out, std::initializer_list<std::string_view> columns,
                      const std::vector<std::string>& metadata = {});

/// Minimal CSV reader: skips '#' lines and the header, splits on commas.
std::vector<std::vector<std::string>> read_csv_rows(std::istream& in);

}  // namespace itz

#endif  // ITZ_CSV_HPP
