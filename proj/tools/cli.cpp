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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ndtlab/bounds.hpp"
#include "ndtlab/linksim.hpp"
#include "ndtlab/network.hpp"
#include "ndtlab/regions.hpp"
#include "ndtlab/scheduler.hpp"
#include "output.hpp"

namespace ndtlab::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  int K = 0;
  int M = 0;
  std::optional<int> N;
  std::string mu;
  std::string alpha = "1";
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 1;

  std::string mu_grid;
  std::string mu_step = "1/100";
  int m_max = 20;
  std::string demand;
  std::string snr = "1e4,1e6,1e8";
  int trials = 10000;
  int threads = 1;
};

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::logic_error&) {
    throw UsageError(flag + ": '" + text + "' is not an exact rational (use p/q, an integer or a finite decimal)");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

std::vector<double> parse_snr_list(const std::string& text) {
  std::vector<double> values;
  for (const auto& item : split(text, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("--snr: '" + item + "' is not a number");
    values.push_back(v);
  }
  if (values.size() < 3) throw UsageError("--snr: need at least 3 power points, got " + std::to_string(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 1.0)) throw UsageError("--snr: powers must exceed 1");
    if (i > 0 && !(values[i] > values[i - 1])) throw UsageError("--snr: powers must be strictly increasing");
  }
  return values;
}

std::vector<int> parse_demand(const std::string& text) {
  std::vector<int> files;
  for (const auto& item : split(text, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("--demand: '" + item + "' is not a file index");
    }
    files.push_back(std::stoi(item));
  }
  return files;
}

NetworkConfig network_from(const Flags& f, const Rational& mu) {
  NetworkConfig c;
  c.K = f.K;
  c.M = f.M;
  c.N = f.N.value_or(f.K + f.M);
  c.mu = mu;
  c.alpha = parse_rational_flag("--alpha", f.alpha);
  return validate(c);
}

CornerConfig corner_from(const Flags& f) { return CornerConfig(network_from(f, parse_rational_flag("--mu", f.mu))); }

std::vector<std::pair<std::string, std::string>> csv_inputs(const NetworkConfig& c) {
  return {{"K", std::to_string(c.K)},
          {"M", std::to_string(c.M)},
          {"N", std::to_string(c.N)},
          {"mu", c.mu.fraction_str()},
          {"alpha", c.alpha.fraction_str()}};
}

Json json_inputs(const NetworkConfig& c) {
  Json j;
  j["K"] = c.K;
  j["M"] = c.M;
  j["N"] = c.N;
  j["mu"] = rational_json(c.mu);
  j["alpha"] = rational_json(c.alpha);
  return j;
}

const char* bool_str(bool value) { return value ? "true" : "false"; }

// bounds ------------------------------------------------------------------

int cmd_bounds(const Flags& f, std::ostream& os) {
  const NetworkConfig c = network_from(f, parse_rational_flag("--mu", f.mu));
  const bool corner = (c.mu * Rational(c.M)).is_integer();
  const OptimalityReport report = optimality_report(c);
  std::optional<NdtBreakdown> os_value;
  if (corner) os_value = ndt_one_shot(CornerConfig(c));
  const Rational man = man_ndt(c.M, c.mu);

  if (f.format == "json") {
    Json out;
    out["lower_bound"] = {{"value", rational_json(report.converse.value)},
                          {"inner_max", rational_json(report.converse.inner_max)},
                          {"ell", report.converse.argmax_ell},
                          {"s", report.converse.argmax_s},
                          {"floor_active", report.converse.floor_active},
                          {"assumes_perfect_csi", report.converse_assumes_perfect_csi}};
    out["full_cache_bound"] = report.full_cache_bound ? rational_json(*report.full_cache_bound) : Json(nullptr);
    out["lower"] = rational_json(report.lower);
    out["man"] = rational_json(man);
    if (os_value) {
      out["one_shot"] = {{"man_term", rational_json(os_value->man_term)},
                         {"interference_term", rational_json(os_value->interference_term)},
                         {"value", rational_json(os_value->value)},
                         {"limiting_channel", to_string(os_value->limiting_channel)}};
    } else {
      out["one_shot"] = nullptr;
    }
    out["envelope"] = rational_json(report.upper);
    out["upper"] = rational_json(report.upper);
    out["gap"] = rational_json(report.gap);
    out["optimal"] = report.optimal;
    os << json_document("bounds", json_inputs(c), std::move(out), f.seed).dump(2) << "\n";
    return kExitOk;
  }

  CsvWriter csv(os);
  csv.preamble("bounds", csv_inputs(c), f.seed);
  if (!corner) csv.comment("mu is not a corner point; one-shot rows are omitted and the envelope is time-shared");
  csv.columns({{"quantity", "name of the reported value"},
               {"numerator", "exact value, numerator"},
               {"denominator", "exact value, denominator"},
               {"float", "value as a double"},
               {"note", "witness or flags, space separated key=value"}});
  auto row = [&](const std::string& name, const Rational& v, const std::string& note) {
    csv.row({name, v.numerator().str(), v.denominator().str(), format_double(v.to_double()), note});
  };
  const auto& w = report.converse;
  row("lower_bound", w.value,
      "ell=" + std::to_string(w.argmax_ell) + " s=" + std::to_string(w.argmax_s) +
          " floor_active=" + bool_str(w.floor_active) +
          " assumes_perfect_csi=" + bool_str(report.converse_assumes_perfect_csi));
  row("lower_bound_inner_max", w.inner_max, "");
  if (report.full_cache_bound) row("full_cache_bound", *report.full_cache_bound, "");
  row("lower", report.lower, "");
  row("man", man, "");
  if (os_value) {
    row("one_shot_man_term", os_value->man_term, "");
    row("one_shot_interference_term", os_value->interference_term, "");
    row("one_shot", os_value->value, std::string("limiting_channel=") + to_string(os_value->limiting_channel));
  }
  row("envelope", report.upper, "");
  row("gap", report.gap, std::string("optimal=") + bool_str(report.optimal));
  return kExitOk;
}

// sweep -------------------------------------------------------------------

struct SweepRow {
  std::string kind;
  Rational mu;
  std::optional<Rational> one_shot;
  Rational envelope;
  Rational lower;
};

int cmd_sweep(const Flags& f, std::ostream& os) {
  const NetworkConfig base = network_from(f, Rational(0));
  const AchievableEnvelope envelope(base.K, base.M, base.alpha);

  std::vector<SweepRow> rows;
  auto make_row = [&](const std::string& kind, const Rational& mu) {
    NetworkConfig c = base;
    c.mu = mu;
    SweepRow r{kind, mu, std::nullopt, envelope(mu), best_lower_bound(c)};
    if ((mu * Rational(c.M)).is_integer()) r.one_shot = ndt_one_shot(CornerConfig(c)).value;
    return r;
  };
  for (int c = 0; c <= base.M; ++c) rows.push_back(make_row("corner", Rational(c, base.M)));
  if (!f.mu_grid.empty()) {
    const Rational step = parse_rational_flag("--mu-grid", f.mu_grid);
    if (step <= Rational(0) || step > Rational(1)) throw UsageError("--mu-grid: step must lie in (0, 1]");
    for (Rational mu(0); mu <= Rational(1); mu += step) rows.push_back(make_row("envelope", mu));
  }

  if (f.format == "json") {
    Json list = Json::array();
    for (const auto& r : rows) {
      const Rational gap = r.envelope - r.lower;
      list.push_back({{"kind", r.kind},
                      {"mu", rational_json(r.mu)},
                      {"delta_os", r.one_shot ? rational_json(*r.one_shot) : Json(nullptr)},
                      {"envelope", rational_json(r.envelope)},
                      {"delta_lb", rational_json(r.lower)},
                      {"gap", rational_json(gap)},
                      {"optimal", gap.is_zero()}});
    }
    Json inputs = json_inputs(base);
    inputs.erase("mu");
    inputs["mu_grid"] = f.mu_grid.empty() ? Json(nullptr) : rational_json(Rational::parse(f.mu_grid));
    os << json_document("sweep", std::move(inputs), Json{{"rows", std::move(list)}}, f.seed).dump(2) << "\n";
    return kExitOk;
  }

  CsvWriter csv(os);
  auto inputs = csv_inputs(base);
  inputs.erase(inputs.begin() + 3);  // mu varies per row
  inputs.emplace_back("mu_grid", f.mu_grid.empty() ? "none" : Rational::parse(f.mu_grid).fraction_str());
  csv.preamble("sweep", inputs, f.seed);
  csv.columns({{"kind", "corner (mu = c/M) or envelope (mu-grid sample)"},
               {"mu", "cache fraction, exact p/q"},
               {"mu_float", "cache fraction as a double"},
               {"delta_os", "one-shot NDT at a corner, exact p/q; empty off corners"},
               {"delta_os_float", "one-shot NDT as a double"},
               {"envelope", "lower convex envelope of the corner points, exact p/q"},
               {"envelope_float", "envelope as a double"},
               {"delta_lb", "best lower bound, exact p/q"},
               {"delta_lb_float", "best lower bound as a double"},
               {"gap", "envelope minus lower bound, exact p/q"},
               {"gap_float", "gap as a double"},
               {"optimal", "true when the gap is zero"}});
  for (const auto& r : rows) {
    const Rational gap = r.envelope - r.lower;
    csv.row({r.kind, r.mu.fraction_str(), format_double(r.mu.to_double()),
             r.one_shot ? r.one_shot->fraction_str() : "", r.one_shot ? format_double(r.one_shot->to_double()) : "",
             r.envelope.fraction_str(), format_double(r.envelope.to_double()), r.lower.fraction_str(),
             format_double(r.lower.to_double()), gap.fraction_str(), format_double(gap.to_double()),
             bool_str(gap.is_zero())});
  }
  return kExitOk;
}

// regions -----------------------------------------------------------------

int cmd_regions(const Flags& f, std::ostream& os) {
  if (f.K < 1) throw UsageError("--K: must be at least 1");
  if (f.m_max < 1) throw UsageError("--m-max: must be at least 1");
  const Rational step = parse_rational_flag("--mu-step", f.mu_step);
  if (step <= Rational(0) || step > Rational(1)) throw UsageError("--mu-step: step must lie in (0, 1]");
  if (parse_rational_flag("--alpha", f.alpha) != Rational(1)) {
    throw UsageError("--alpha: the region taxonomy is defined at alpha = 1 only");
  }
  const RegionMap map = region_map(f.K, step, f.m_max);

  if (f.format == "json") {
    Json cells = Json::array();
    for (std::size_t i = 0; i < map.mu_grid.size(); ++i) {
      for (int M = map.m_min; M <= map.m_max; ++M) {
        const RegionLabel& label = map.at(i, M);
        const bool known = label.region != Region::Unclassified;
        cells.push_back({{"mu", rational_json(map.mu_grid[i])},
                         {"M", M},
                         {"region", to_string(label.region)},
                         {"ndt", known ? rational_json(region_ndt(label, map.mu_grid[i], map.K, M)) : Json(nullptr)}});
      }
    }
    Json curves = Json::array();
    for (const auto& curve : map.boundaries) {
      Json points = Json::array();
      for (const auto& [mu, m] : curve.points) points.push_back({{"mu", rational_json(mu)}, {"M", m}});
      curves.push_back({{"name", curve.name}, {"points", std::move(points)}});
    }
    Json inputs{{"K", map.K}, {"mu_step", rational_json(step)}, {"m_min", map.m_min}, {"m_max", map.m_max},
                {"alpha", rational_json(Rational(1))}};
    os << json_document("regions", std::move(inputs), Json{{"cells", std::move(cells)}, {"boundaries", std::move(curves)}},
                        f.seed)
              .dump(2)
       << "\n";
    return kExitOk;
  }

  CsvWriter csv(os);
  csv.preamble("regions",
               {{"K", std::to_string(map.K)},
                {"mu_step", step.fraction_str()},
                {"m_min", std::to_string(map.m_min)},
                {"m_max", std::to_string(map.m_max)},
                {"alpha", "1/1"}},
               f.seed);
  csv.comment("two tables: the region map, then the boundary curves after a '# table boundaries' line");
  csv.columns({{"mu", "cache fraction, exact p/q"},
               {"M", "number of relays"},
               {"region", "A, B, C, D, E, or U when no row of the region table matches"},
               {"ndt_numerator", "achievable NDT of the region, numerator; empty for U"},
               {"ndt_denominator", "achievable NDT of the region, denominator; empty for U"},
               {"ndt_float", "achievable NDT as a double; empty for U"}});
  for (std::size_t i = 0; i < map.mu_grid.size(); ++i) {
    for (int M = map.m_min; M <= map.m_max; ++M) {
      const RegionLabel& label = map.at(i, M);
      if (label.region == Region::Unclassified) {
        csv.row({map.mu_grid[i].fraction_str(), std::to_string(M), to_string(label.region), "", "", ""});
        continue;
      }
      const Rational ndt = region_ndt(label, map.mu_grid[i], map.K, M);
      csv.row({map.mu_grid[i].fraction_str(), std::to_string(M), to_string(label.region), ndt.numerator().str(),
               ndt.denominator().str(), format_double(ndt.to_double())});
    }
  }
  csv.comment("table boundaries");
  csv.columns({{"curve", std::string(kStandaloneFrontier) + " (mu M = K), " + kBorderAB + " (M = 1/(1-2mu)) or " +
                             kBorderED + " (K = mu M man(mu))"},
               {"mu_b", "cache fraction, exact p/q"},
               {"M_b", "relay count on the curve, as a double"}});
  for (const auto& curve : map.boundaries) {
    for (const auto& [mu, m] : curve.points) csv.row({curve.name, mu.fraction_str(), format_double(m)});
  }
  return kExitOk;
}

// schedule ----------------------------------------------------------------

Json violation_json(const Violation& v) {
  Json j{{"kind", to_string(v.kind)}, {"detail", v.detail}};
  j["slot"] = v.slot ? Json(*v.slot) : Json(nullptr);
  j["symbol"] = v.symbol ? Json(v.symbol->str()) : Json(nullptr);
  return j;
}

int cmd_schedule(const Flags& f, std::ostream& os) {
  const CornerConfig config = corner_from(f);
  DemandVector demand = worst_case_demand(config.base());
  if (!f.demand.empty()) {
    demand.files = parse_demand(f.demand);
    check_demand(demand, config.base());
  }
  const Schedule schedule = build_schedule(config, demand);
  const ScheduleReport report = verify_schedule(schedule, config);
  const int code = report.passed() ? kExitOk : kExitVerification;

  const std::vector<std::pair<std::string, bool>> checks{{"rn_complete", report.rn_complete},
                                                         {"zf_feasible", report.zf_feasible},
                                                         {"ue_complete", report.ue_complete},
                                                         {"cache_ratio_ok", report.cache_ratio_ok},
                                                         {"phase2_ok", report.phase2_ok}};

  if (f.format == "json") {
    Json r;
    for (const auto& [name, ok] : checks) r[name] = ok;
    r["passed"] = report.passed();
    r["cache_ratio"] = rational_json(report.cache_ratio);
    r["symbols_per_file"] = rational_json(report.symbols_per_file);
    r["T1"] = rational_json(report.phase1_uses);
    r["T2"] = rational_json(report.phase2_uses);
    r["ndt"] = rational_json(report.ndt);
    r["ue_dof"] = Json::array();
    for (const auto& d : report.ue_dof) r["ue_dof"].push_back(rational_json(d));
    r["violations"] = Json::array();
    for (const auto& v : report.violations) r["violations"].push_back(violation_json(v));

    Json out;
    out["report"] = std::move(r);
    out["Ltilde"] = rational_json(schedule.phase1_ue_dof);
    out["unicast"] = Json::array();
    for (const auto& u : schedule.unicast) {
      out["unicast"].push_back({{"target", u.target == UnicastSlot::Target::Relay ? "RN" : "UE"},
                                {"node", u.node},
                                {"file", u.file}});
    }
    out["phase1"] = Json::array();
    for (std::size_t i = 0; i < schedule.phase1.size(); ++i) {
      out["phase1"].push_back(format_phase1_slot(i + 1, schedule.phase1[i]));
    }
    out["phase2_pattern"] = Json::array();
    for (const auto& p : schedule.phase2_pattern) {
      out["phase2_pattern"].push_back({{"private_ues", p.private_ues.elements()},
                                       {"private_dof", rational_json(p.private_dof)},
                                       {"common_ue", p.common_ue},
                                       {"common_dof", rational_json(p.common_dof)}});
    }
    out["phase2_dof"] = Json::array();
    for (const auto& d : schedule.phase2_dof) out["phase2_dof"].push_back(rational_json(d));
    Json inputs = json_inputs(config.base());
    inputs["demand"] = demand.files;
    os << json_document("schedule", std::move(inputs), std::move(out), f.seed).dump(2) << "\n";
    return code;
  }

  write_schedule(os, schedule);
  os << "# report records: R <check> pass|fail; R <quantity> <p/q>; R ue_dof UE<k> <p/q>;"
        " V <kind> <slot#|-> <symbol|-> <detail>\n";
  for (const auto& [name, ok] : checks) os << "R " << name << ' ' << (ok ? "pass" : "fail") << "\n";
  os << "R cache_ratio " << report.cache_ratio.fraction_str() << "\n";
  os << "R T1 " << report.phase1_uses.fraction_str() << "\n";
  os << "R T2 " << report.phase2_uses.fraction_str() << "\n";
  os << "R ndt " << report.ndt.fraction_str() << "\n";
  for (std::size_t k = 0; k < report.ue_dof.size(); ++k) {
    os << "R ue_dof UE" << (k + 1) << ' ' << report.ue_dof[k].fraction_str() << "\n";
  }
  for (const auto& v : report.violations) {
    os << "V " << to_string(v.kind) << ' ' << (v.slot ? std::to_string(*v.slot) : "-") << ' '
       << (v.symbol ? v.symbol->str() : "-") << ' ' << v.detail << "\n";
  }
  return code;
}

// simulate ----------------------------------------------------------------

int cmd_simulate(const Flags& f, std::ostream& os) {
  const CornerConfig config = corner_from(f);
  if (config.cache_level() < 1) throw UsageError("--mu: simulation needs mu M >= 1");
  if (f.trials < 1) throw UsageError("--trials: must be at least 1");
  if (f.threads < 1) throw UsageError("--threads: must be at least 1");

  SimulationSettings s;
  s.K = config.K();
  s.M = config.M();
  s.mu = config.mu();
  s.alpha = config.alpha();
  s.powers = parse_snr_list(f.snr);
  s.trials = f.trials;
  s.seed = f.seed;
  s.threads = f.threads;
  const auto estimates = estimate_exponents(s);

  bool all_pass = true;
  std::vector<bool> pass;
  for (const auto& e : estimates) {
    const bool ok = std::abs(e.slope - expected_slope(e.quantity, s.alpha)) <= slope_tolerance(e.quantity);
    pass.push_back(ok);
    all_pass = all_pass && ok;
  }
  const int code = all_pass ? kExitOk : kExitVerification;

  if (f.format == "json") {
    Json list = Json::array();
    for (std::size_t i = 0; i < estimates.size(); ++i) {
      const auto& e = estimates[i];
      list.push_back({{"quantity", to_string(e.quantity)},
                      {"slope", e.slope},
                      {"stderr", e.std_error},
                      {"expected", expected_slope(e.quantity, s.alpha)},
                      {"tolerance", slope_tolerance(e.quantity)},
                      {"pass", static_cast<bool>(pass[i])},
                      {"trials", e.trials},
                      {"levels", e.levels},
                      {"note", e.note.empty() ? Json(nullptr) : Json(e.note)}});
    }
    Json inputs = json_inputs(config.base());
    inputs["snr"] = s.powers;
    inputs["trials"] = s.trials;
    os << json_document("simulate", std::move(inputs), Json{{"estimates", std::move(list)}, {"pass", all_pass}},
                        f.seed)
              .dump(2)
       << "\n";
    return code;
  }

  CsvWriter csv(os);
  auto inputs = csv_inputs(config.base());
  inputs.emplace_back("snr", f.snr);
  inputs.emplace_back("trials", std::to_string(s.trials));
  csv.preamble("simulate", inputs, f.seed);
  csv.columns({{"quantity", "desired_signal, residual_interference, common_rate or private_rate"},
               {"slope", "least-squares slope against ln P"},
               {"stderr", "standard error of the slope"},
               {"expected", "high-SNR exponent predicted by the scheme"},
               {"tolerance", "allowed |slope - expected|"},
               {"pass", "true when within tolerance"},
               {"trials", "channel draws per power"},
               {"levels", "per-power level, ln(mean power) or mean rate in nats, separated by ';'"},
               {"note", "set when the variance estimate is unusable"}});
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    const auto& e = estimates[i];
    std::string levels;
    for (std::size_t j = 0; j < e.levels.size(); ++j) levels += (j ? ";" : "") + format_double(e.levels[j]);
    csv.row({to_string(e.quantity), format_double(e.slope), format_double(e.std_error),
             format_double(expected_slope(e.quantity, s.alpha)), format_double(slope_tolerance(e.quantity)),
             bool_str(pass[i]), std::to_string(e.trials), levels, e.note});
  }
  return code;
}

// plumbing ----------------------------------------------------------------

void add_output_flags(CLI::App* cmd, Flags& f, const std::string& default_format) {
  f.format = default_format;
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--out", f.out, "Write output to PATH instead of stdout");
  cmd->add_option("--seed", f.seed, "Seed, echoed in metadata and used by simulate")->capture_default_str();
}

void add_network_flags(CLI::App* cmd, Flags& f, bool need_km, bool need_mu) {
  auto* k = cmd->add_option("--K", f.K, "Number of users");
  auto* m = cmd->add_option("--M", f.M, "Number of relays");
  if (need_km) {
    k->required();
    m->required();
  } else {
    k->capture_default_str();
    m->capture_default_str();
  }
  cmd->add_option("--N", f.N, "Library size (default K+M)");
  auto* mu = cmd->add_option("--mu", f.mu, "Fractional cache size, p/q or decimal");
  if (need_mu) mu->required();
  cmd->add_option("--alpha", f.alpha, "CSI quality in [0,1], p/q or decimal")->capture_default_str();
}

int emit(const Flags& f, const std::string& body, std::ostream& out, std::ostream& err) {
  if (f.out.empty()) {
    out << body;
    return kExitOk;
  }
  std::ofstream file(f.out, std::ios::binary);
  if (file) file << body;
  if (!file) {
    err << "error: cannot write " << f.out << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delivery-time bounds, region maps, schedules and link simulations for cache-aided relay networks",
               "ndtlab"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", NDTLAB_VERSION);
  Flags f;

  auto* bounds = app.add_subcommand("bounds", "Lower bound, one-shot NDT, envelope and optimality gap");
  add_network_flags(bounds, f, true, true);
  add_output_flags(bounds, f, "csv");

  auto* sweep = app.add_subcommand("sweep", "One-shot NDT, envelope and lower bound over the corner grid");
  add_network_flags(sweep, f, true, false);
  sweep->add_option("--mu-grid", f.mu_grid, "Extra envelope samples every STEP in [0,1]");
  add_output_flags(sweep, f, "csv");

  auto* regions = app.add_subcommand("regions", "Region map over (mu, M) at alpha = 1");
  regions->add_option("--K", f.K, "Number of users")->required();
  regions->add_option("--mu-step", f.mu_step, "Grid step in mu")->capture_default_str();
  regions->add_option("--m-max", f.m_max, "Largest relay count")->capture_default_str();
  regions->add_option("--alpha", f.alpha, "Must be 1")->capture_default_str();
  add_output_flags(regions, f, "csv");

  auto* schedule = app.add_subcommand("schedule", "Build and verify the two-phase delivery schedule");
  add_network_flags(schedule, f, true, true);
  schedule->add_option("--demand", f.demand, "Comma-separated file indices, users then relays (default 1..K+M)");
  add_output_flags(schedule, f, "csv");

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo power and rate exponents under imperfect CSI");
  f.K = 2;
  f.M = 4;
  f.mu = "1/2";
  add_network_flags(simulate, f, false, false);
  simulate->add_option("--snr", f.snr, "Comma-separated powers P, at least three")->capture_default_str();
  simulate->add_option("--trials", f.trials, "Channel draws per power")->capture_default_str();
  simulate->add_option("--threads", f.threads, "Worker threads; results do not depend on it")->capture_default_str();
  add_output_flags(simulate, f, "json");

  // Subcommand defaults differ; reset the shared fields for the one parsed.
  for (auto* cmd : {bounds, sweep, regions, schedule}) {
    cmd->preparse_callback([&f](std::size_t) {
      f.K = 0;
      f.M = 0;
      f.mu.clear();
      f.format = "csv";
    });
  }
  simulate->preparse_callback([&f](std::size_t) { f.format = "json"; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream body;
  int code = kExitOk;
  try {
    if (*bounds) code = cmd_bounds(f, body);
    if (*sweep) code = cmd_sweep(f, body);
    if (*regions) code = cmd_regions(f, body);
    if (*schedule) code = cmd_schedule(f, body);
    if (*simulate) code = cmd_simulate(f, body);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const int io = emit(f, body.str(), out, err);
  return io != kExitOk ? io : code;
}

}  // namespace ndtlab::cli
