// SPDX-License-Identifier: Apache-2.0
//
// ndtlab: delivery-time analysis for cache-aided broadcast-relay networks
// Copyright (C) 2026 The ndtlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace ndtlab::cli {

namespace {

Json integer_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

std::string quote(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

Json rational_json(const Rational& value) {
  Json j;
  j["num"] = integer_json(value.numerator());
  j["den"] = integer_json(value.denominator());
  j["float"] = value.to_double();
  return j;
}

Json json_document(const std::string& command, Json inputs, Json outputs, std::uint64_t seed) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["outputs"] = std::move(outputs);
  doc["metadata"] = {{"tool", "ndtlab"}, {"version", NDTLAB_VERSION}, {"seed", seed}};
  return doc;
}

void CsvWriter::preamble(const std::string& command, const std::vector<std::pair<std::string, std::string>>& inputs,
                         std::uint64_t seed) {
  os_ << "# ndtlab " << command << "\n";
  os_ << "# schema: " << kSchemaVersion << "\n";
  os_ << "# version: " << NDTLAB_VERSION << "\n";
  os_ << "# seed: " << seed << "\n";
  for (const auto& [name, value] : inputs) os_ << "# input " << name << "=" << value << "\n";
}

void CsvWriter::comment(const std::string& text) { os_ << "# " << text << "\n"; }

void CsvWriter::columns(const std::vector<std::pair<std::string, std::string>>& fields) {
  for (const auto& [name, meaning] : fields) os_ << "# field " << name << ": " << meaning << "\n";
  std::vector<std::string> names;
  for (const auto& field : fields) names.push_back(field.first);
  row(names);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i == 0 ? "" : ",") << quote(cells[i]);
  os_ << "\n";
}

}  // namespace ndtlab::cli
