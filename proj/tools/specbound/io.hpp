// Copyright 2026 The specbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPECBOUND_TOOLS_IO_HPP_
#define SPECBOUND_TOOLS_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace specbound::cli {

// "1,0.5, 0.25" or "1 0.5 0.25".
std::vector<double> parse_number_list(const std::string& text);

std::string format_double(double value);

// Numeric CSV: '#' lines are comments, an optional non-numeric first row is a
// header, every row has the same number of columns. Returns columns.
std::vector<std::vector<double>> read_numeric_csv(const std::filesystem::path& path);

// `comments` become '#'-prefixed lines ahead of the header row.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& comments,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace specbound::cli

#endif  // SPECBOUND_TOOLS_IO_HPP_
