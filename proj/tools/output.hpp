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

#ifndef NDTLAB_TOOLS_OUTPUT_HPP
#define NDTLAB_TOOLS_OUTPUT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ndtlab/rational.hpp"

namespace ndtlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// 17 significant digits; `inf`, `-inf` and `nan` for non-finite values.
std::string format_double(double value);

/// {"num": n, "den": d, "float": x}; num and den become strings when they
/// do not fit in 64 bits.
Json rational_json(const Rational& value);

/// Object with `schema`, `command`, `inputs`, `outputs` and `metadata`.
Json json_document(const std::string& command, Json inputs, Json outputs, std::uint64_t seed);

// Comma-separated table preceded by `#` comment lines: command, schema,
// version, seed, inputs, then one `# field <name>: <meaning>` line per column.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void preamble(const std::string& command, const std::vector<std::pair<std::string, std::string>>& inputs,
                std::uint64_t seed);
  void comment(const std::string& text);
  void columns(const std::vector<std::pair<std::string, std::string>>& fields);
  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& os_;
};

}  // namespace ndtlab::cli

#endif  // NDTLAB_TOOLS_OUTPUT_HPP
