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

#include "io.hpp"

#include <cerrno>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "capi_handle.hpp"

namespace specbound::cli {

namespace {

bool parse_double(const std::string& token, double& out) {
  if (token.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(token.c_str(), &end);
  // ERANGE on underflow still yields the nearest subnormal
  const bool range_ok = errno == 0 || (errno == ERANGE && std::abs(out) < DBL_MIN);
  return range_ok && end == token.c_str() + token.size() && std::isfinite(out);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(trim(field));
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

std::vector<double> parse_number_list(const std::string& text) {
  std::string normalised = text;
  for (char& c : normalised) {
    if (c == ',' || c == ';' || c == '\t') c = ' ';
  }
  std::istringstream in(normalised);
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    double v = 0.0;
    if (!parse_double(token, v)) config_error("not a finite number: \"" + token + "\"");
    out.push_back(v);
  }
  if (out.empty()) config_error("empty number list");
  return out;
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::vector<std::vector<double>> read_numeric_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open " + path.string());
  std::vector<std::vector<double>> columns;
  std::string line;
  std::size_t line_no = 0;
  bool seen_row = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto fields = split(t, ',');
    std::vector<double> row;
    bool numeric = true;
    for (const auto& f : fields) {
      double v = 0.0;
      if (!parse_double(f, v)) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (!seen_row && columns.empty()) {
        seen_row = true;  // header
        continue;
      }
      config_error(path.string() + ":" + std::to_string(line_no) + ": non-numeric field");
    }
    seen_row = true;
    if (columns.empty()) columns.resize(row.size());
    if (row.size() != columns.size()) {
      config_error(path.string() + ":" + std::to_string(line_no) + ": expected " +
                   std::to_string(columns.size()) + " columns");
    }
    for (std::size_t i = 0; i < row.size(); ++i) columns[i].push_back(row[i]);
  }
  if (columns.empty()) config_error(path.string() + " holds no data rows");
  return columns;
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& comments,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
  std::string text;
  for (const auto& c : comments) text += "# " + c + "\n";
  for (std::size_t i = 0; i < header.size(); ++i) text += (i ? "," : "") + header[i];
  text += "\n";
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) text += ",";
      text += format_double(columns[i][r]);
    }
    text += "\n";
  }
  write_text(path, text);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Failure(SB_INTERNAL, "cannot write " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) config_error("cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace specbound::cli
