// Copyright 2026 The ghzbell Authors
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

#include "cli.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ghzbell/experiment.h"
#include "ghzbell/ghz.h"
#include "ghzbell/json_io.h"
#include "ghzbell/lhv.h"
#include "ghzbell/records.h"
#include "ghzbell/thresholds.h"
#include "ghzbell/verify.h"

namespace ghzbell::cli {

namespace {

using nlohmann::json;

// Thrown for flag combinations that parse but violate an operation's
// preconditions.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kJson, kCsv, kHuman };

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string scalar_text(const json& v) {
  if (v.is_null()) return "n/a";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return fixed6(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

// Plain-text rendering of a JSON document, so human output never carries
// values the JSON lacks.
void render_human(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : j.items()) {
    if (is_scalar(v)) {
      out << pad << key << ": " << scalar_text(v) << '\n';
    } else if (v.is_object()) {
      out << pad << key << ":\n";
      render_human(v, out, indent + 2);
    } else if (!v.empty() && v.front().is_object()) {
      out << pad << key << ":\n";
      for (const json& e : v) {
        out << pad << "  -";
        for (const auto& [k2, v2] : e.items()) {
          out << ' ' << k2 << '=' << (is_scalar(v2) ? scalar_text(v2) : v2.dump());
        }
        out << '\n';
      }
    } else {
      out << pad << key << ":";
      for (const json& e : v) out << ' ' << (is_scalar(e) ? scalar_text(e) : e.dump());
      out << '\n';
    }
  }
}

void render_thresholds_human(const json& rows, std::ostream& out) {
  out << "  n  V_cr(new)%  V_cr(old)%  eta_cr%\n";
  for (const json& r : rows) {
    char buf[128];
    auto pct = [](const json& v) {
      return v.is_null() ? std::string("n/a") : format_percent(v.get<double>());
    };
    std::snprintf(buf, sizeof buf, "%3d  %10s  %10s  %7s\n", r["n"].get<int>(),
                  pct(r["v_cr_new"]).c_str(), pct(r["v_cr_old"]).c_str(),
                  pct(r["eta_cr"]).c_str());
    out << buf;
  }
}

void emit_json(const json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

void emit(const json& j, Format format, std::ostream& out) {
  if (format == Format::kHuman) {
    render_human(j, out, 0);
  } else {
    emit_json(j, out);
  }
}

void require_not_csv(Format format, const std::string& command) {
  if (format == Format::kCsv) {
    throw UsageError("--format csv is not supported by '" + command + "'");
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnvVar)) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kSeedEnvVar) + " is not an unsigned integer");
  }
  return 0;
}

struct BoundFlags {
  int n = 3;
  std::string method = "both";
  int workers = 1;
};

int cmd_bound(const BoundFlags& f, Format format, std::ostream& out) {
  require_not_csv(format, "bound");
  if (f.n < 2) throw UsageError("--n must be at least 2");
  const bool brute = f.method == "brute" || f.method == "both";
  const bool factorized = f.method == "factorized" || f.method == "both";
  if (brute && f.n > kMaxBruteParties) {
    throw UsageError("--method " + f.method + " needs --n <= " +
                     std::to_string(kMaxBruteParties) +
                     "; use --method factorized for larger n");
  }
  if (f.n > kMaxFactorizedParties) {
    throw UsageError("--n must be at most " + std::to_string(kMaxFactorizedParties));
  }
  if (f.workers < 1) throw UsageError("--workers must be at least 1");

  json report;
  int status = kExitOk;
  if (brute) {
    const BruteForceResult b = max_s_brute(f.n, f.workers);
    report = maximizer_to_json(f.n, b.max_s, b.argmax);
    report["maximizer_count"] = b.maximizer_count;
    if (factorized) {
      const FactorizedResult fr = max_s_factorized(f.n);
      const bool agree = std::round(b.max_s * 1e9) == std::round(fr.max_s * 1e9) &&
                         b.argmax == fr.argmax;
      report["factorized_max_s"] = number_or_null(fr.max_s);
      report["methods_agree"] = agree;
      if (!agree) status = kExitCheckFailed;
    }
  } else {
    const FactorizedResult fr = max_s_factorized(f.n);
    report = maximizer_to_json(f.n, fr.max_s, fr.argmax);
    report["phase_class"] = fr.phase_class;
  }
  report["method"] = f.method;
  report["norm_sq"] = number_or_null(q_norm_sq_closed_form(f.n));
  report["q_n"] = number_or_null(q_entry_sum_closed_form(f.n));
  report["violation_factor"] = number_or_null(violation_factor(f.n));
  emit(report, format, out);
  return status;
}

int cmd_thresholds(int n_max, Format format, std::ostream& out) {
  if (n_max < 2) throw UsageError("--n-max must be at least 2");
  const std::vector<ThresholdRow> rows = threshold_table(n_max);
  switch (format) {
    case Format::kCsv:
      out << threshold_table_to_csv(rows);
      break;
    case Format::kJson:
      emit_json(threshold_table_to_json(rows), out);
      break;
    case Format::kHuman:
      render_thresholds_human(threshold_table_to_json(rows), out);
      break;
  }
  return kExitOk;
}

struct SimulateFlags {
  ExperimentConfig config;
  std::string policy = "round-robin";
  int workers = 1;
  std::string records_out;
  std::string records_in;
};

ExperimentConfig checked_config(const SimulateFlags& f) {
  ExperimentConfig c = f.config;
  try {
    c.setting_policy = parse_setting_policy(f.policy);
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (f.workers < 1) throw UsageError("--workers must be at least 1");
  return c;
}

int cmd_simulate(const SimulateFlags& f, Format format, std::ostream& out) {
  require_not_csv(format, "simulate");
  const ExperimentConfig c = checked_config(f);
  ExperimentSummary summary;
  if (!f.records_in.empty()) {
    std::ifstream in(f.records_in);
    if (!in) throw std::runtime_error("cannot open " + f.records_in);
    const std::vector<TrialRecord> records = read_records(in);
    summary = summarize_records(records, c);
  } else if (!f.records_out.empty()) {
    const std::vector<TrialRecord> records = simulate_records(c);
    std::ofstream file(f.records_out);
    if (!file) throw std::runtime_error("cannot write " + f.records_out);
    write_records(file, records);
    summary = summarize_records(records, c);
  } else {
    summary = run_experiment(c, f.workers);
  }
  emit(summary_to_json(summary, c), format, out);
  return kExitOk;
}

struct SweepFlags {
  int n = 3;
  double eta = 1.0;
  std::vector<double> v_grid;
  std::uint64_t trials = 270000;
  std::uint64_t seed = 0;
  int workers = 1;
};

int cmd_sweep(const SweepFlags& f, Format format, std::ostream& out) {
  if (f.v_grid.empty()) throw UsageError("--v-grid needs at least one value");
  ExperimentConfig probe;
  probe.n_parties = f.n;
  probe.efficiency = f.eta;
  probe.trials = f.trials;
  for (double v : f.v_grid) {
    probe.visibility = v;
    try {
      probe.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (f.workers < 1) throw UsageError("--workers must be at least 1");
  const std::vector<SweepPoint> points =
      visibility_sweep(f.n, f.eta, f.v_grid, f.trials, f.seed, f.workers);
  if (format == Format::kCsv) {
    out << sweep_to_csv(points);
    return kExitOk;
  }
  json report = {{"n", f.n},
                 {"eta", f.eta},
                 {"trials_per_point", f.trials},
                 {"seed", f.seed}};
  if (f.eta > 0.0) {
    report["v_critical_predicted"] =
        number_or_null(critical_visibility(f.n, f.eta).v_critical);
  } else {
    report["v_critical_predicted"] = nullptr;
  }
  report["points"] = sweep_to_json(points);
  emit(report, format, out);
  return kExitOk;
}

int cmd_verify(const VerifyOptions& options, Format format, std::ostream& out) {
  require_not_csv(format, "verify");
  std::vector<CheckResult> results;
  try {
    results = run_verification(options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all_passed = true;
  json checks = json::array();
  for (const CheckResult& r : results) {
    all_passed = all_passed && r.passed;
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  const json report = {{"passed", all_passed}, {"checks", checks}};
  if (format == Format::kHuman) {
    for (const json& c : report["checks"]) {
      out << (c["passed"].get<bool>() ? "PASS " : "FAIL ")
          << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>()
          << '\n';
    }
    out << (all_passed ? "all checks passed" : "verification FAILED") << '\n';
  } else {
    emit_json(report, out);
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-setting N-party GHZ Bell inequality toolkit", "ghzbell"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();

  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "human"}));

  std::uint64_t seed = 0;
  bool seed_given = false;

  BoundFlags bound;
  auto* bound_cmd = app.add_subcommand("bound", "Maximum of S over local strategies");
  bound_cmd->add_option("--n", bound.n, "Number of parties")->required();
  bound_cmd->add_option("--method", bound.method, "Search method")
      ->check(CLI::IsMember({"brute", "factorized", "both"}));
  bound_cmd->add_option("--workers", bound.workers, "Worker threads");

  int n_max = 5;
  auto* thr_cmd = app.add_subcommand("thresholds", "Critical visibility/efficiency table");
  thr_cmd->add_option("--n-max", n_max, "Largest party count");

  SimulateFlags sim;
  sim.config.trials = 270'000;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo experiment");
  sim_cmd->add_option("--n", sim.config.n_parties, "Number of parties");
  sim_cmd->add_option("--v", sim.config.visibility, "Fringe visibility in [0,1]");
  sim_cmd->add_option("--eta", sim.config.efficiency, "Collection efficiency in [0,1]");
  sim_cmd->add_option("--trials", sim.config.trials, "Number of trials");
  auto* sim_seed = sim_cmd->add_option("--seed", seed, "RNG seed");
  sim_cmd->add_option("--policy", sim.policy, "Setting policy")
      ->check(CLI::IsMember({"round-robin", "uniform-random"}));
  sim_cmd->add_option("--workers", sim.workers, "Worker threads");
  sim_cmd->add_option("--records-out", sim.records_out, "Write trial records to FILE");
  sim_cmd->add_option("--records-in", sim.records_in,
                      "Summarize trial records from FILE instead of sampling");

  SweepFlags sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Simulated visibility sweep");
  sweep_cmd->add_option("--n", sweep.n, "Number of parties");
  sweep_cmd->add_option("--eta", sweep.eta, "Collection efficiency in [0,1]");
  sweep_cmd->add_option("--v-grid", sweep.v_grid, "Comma-separated visibilities")
      ->delimiter(',')
      ->required();
  sweep_cmd->add_option("--trials", sweep.trials, "Trials per grid point");
  auto* sweep_seed = sweep_cmd->add_option("--seed", seed, "RNG seed");
  sweep_cmd->add_option("--workers", sweep.workers, "Worker threads");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity suite");
  verify_cmd->add_option("--n-max", verify.n_max_brute,
                         "Largest n for the exhaustive search");
  verify_cmd->add_option("--workers", verify.workers, "Worker threads");
  verify_cmd->add_option("--inject-fault", verify.inject_fault,
                         "Perturb the named check (harness self-test)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format format = format_name == "csv"     ? Format::kCsv
                        : format_name == "human" ? Format::kHuman
                                                 : Format::kJson;
  try {
    seed_given = (*sim_seed || *sweep_seed);
    if (!seed_given) seed = default_seed();
    if (*bound_cmd) return cmd_bound(bound, format, out);
    if (*thr_cmd) return cmd_thresholds(n_max, format, out);
    if (*sim_cmd) {
      sim.config.seed = seed;
      return cmd_simulate(sim, format, out);
    }
    if (*sweep_cmd) {
      sweep.seed = seed;
      return cmd_sweep(sweep, format, out);
    }
    return cmd_verify(verify, format, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace ghzbell::cli
