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

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ndtlab/scheduler.hpp"

namespace ndtlab {

std::string format_phase1_slot(std::size_t slot_number, const Phase1Slot& slot) {
  std::string out = "P1 " + std::to_string(slot_number) + " RN" + slot.rn_group.str() + " UE" + slot.ue_group.str() +
                    " sym:";
  for (std::size_t i = 0; i < slot.delivered.size(); ++i) {
    if (i > 0) out += ',';
    out += slot.delivered[i].symbol.str();
  }
  return out;
}

namespace {

[[noreturn]] void malformed(const std::string& line, const std::string& why) {
  throw std::invalid_argument("malformed P1 record (" + why + "): " + line);
}

int parse_int(const std::string& token, const std::string& line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) malformed(line, "bad integer");
  return std::stoi(token);
}

}  // namespace

std::pair<std::size_t, Phase1Slot> parse_phase1_slot(const std::string& line, const Rational& ue_dof) {
  std::istringstream in(line);
  std::string tag, number, rn, ue, sym;
  if (!(in >> tag >> number >> rn >> ue >> sym) || tag != "P1") malformed(line, "expected 5 fields");
  std::string extra;
  if (in >> extra) malformed(line, "trailing fields");
  if (rn.rfind("RN", 0) != 0 || ue.rfind("UE", 0) != 0 || sym.rfind("sym:", 0) != 0) malformed(line, "field tags");

  Phase1Slot slot;
  slot.rn_group = IndexSet::parse(rn.substr(2));
  slot.ue_group = IndexSet::parse(ue.substr(2));
  slot.ue_dof = ue_dof;

  // Symbols are `<file>/{set}/<copy>` joined by commas; commas inside braces
  // belong to the set.
  const std::string body = sym.substr(4);
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char ch : body) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) parts.push_back(current);

  const auto members = slot.rn_group.elements();
  if (parts.size() != members.size()) malformed(line, "symbol count differs from RN group size");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    const auto first = p.find('/');
    const auto last = p.rfind('/');
    if (first == std::string::npos || first == last) malformed(line, "symbol '" + p + "'");
    SymbolId s;
    s.file = parse_int(p.substr(0, first), line);
    s.share_set = IndexSet::parse(p.substr(first + 1, last - first - 1));
    s.copy = parse_int(p.substr(last + 1), line);
    slot.delivered.push_back({members[i], s});
  }
  return {static_cast<std::size_t>(parse_int(number, line)), slot};
}

void write_schedule(std::ostream& os, const Schedule& s) {
  const NetworkConfig& c = s.config;
  os << "# ndtlab schedule\n";
  os << "# schema: 1\n";
  os << "# K=" << c.K << " M=" << c.M << " N=" << c.N << " mu=" << c.mu.fraction_str()
     << " alpha=" << c.alpha.fraction_str() << "\n";
  os << "# demand:";
  for (std::size_t i = 0; i < s.demand.files.size(); ++i) os << (i == 0 ? " " : ",") << s.demand.files[i];
  os << "\n";
  os << "# L'=" << s.symbols_per_file.fraction_str() << " T1=" << s.phase1_uses().fraction_str()
     << " T2=" << s.phase2_uses.fraction_str() << " Ltilde=" << s.phase1_ue_dof.fraction_str() << "\n";
  os << "# records: U <use#> RN<m>|UE<k> file:<f>; P1 <slot#> RN{...} UE{...} sym:<file>/<set>/<copy>,...;"
        " P2 UE<k> dof <num>/<den>\n";
  for (std::size_t i = 0; i < s.phase2_pattern.size(); ++i) {
    const auto& p = s.phase2_pattern[i];
    os << "# P2 pattern " << (i + 1) << " private UE" << p.private_ues.str() << " dof "
       << p.private_dof.fraction_str() << " common UE" << p.common_ue << " dof " << p.common_dof.fraction_str()
       << "\n";
  }

  for (std::size_t i = 0; i < s.unicast.size(); ++i) {
    const auto& u = s.unicast[i];
    os << "U " << (i + 1) << ' ' << (u.target == UnicastSlot::Target::Relay ? "RN" : "UE") << u.node
       << " file:" << u.file << "\n";
  }
  for (std::size_t i = 0; i < s.phase1.size(); ++i) os << format_phase1_slot(i + 1, s.phase1[i]) << "\n";
  for (std::size_t k = 0; k < s.phase2_dof.size(); ++k) {
    os << "P2 UE" << (k + 1) << " dof " << s.phase2_dof[k].fraction_str() << "\n";
  }
}

}  // namespace ndtlab
