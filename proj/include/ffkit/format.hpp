// Copyright 2026 The ffkit Authors
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

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

// Output conventions shared by the CLI: 17 significant digits, '.' decimal
// separator, LF line endings, a header row for CSV.
namespace ffkit::format {

std::string number(double v);

// A rectangular result table. Cells are JSON scalars so the same rows can be
// written as CSV or as a JSON array of objects.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<nlohmann::json> row);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<nlohmann::json>>& rows() const { return rows_; }

  void write_csv(std::ostream& out) const;
  nlohmann::json to_json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<nlohmann::json>> rows_;
};

std::string csv_cell(const nlohmann::json& cell);

// Splits one CSV line (no quoting beyond the cells written by csv_cell).
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace ffkit::format
