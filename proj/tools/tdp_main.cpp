// Copyright 2026 The temporal-dp Authors
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

// Command-line front end: quantify leakage traces, compute suprema,
// allocate budgets, generate correlation matrices, release noisy counts,
// and benchmark the quantification core. Data goes to --out (or stdout),
// diagnostics to stderr. Exit codes: 0 ok, 2 invalid input, 3 infeasible
// target, 4 internal guard.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tdp/allocate.hpp"
#include "tdp/correlate.hpp"
#include "tdp/csv.hpp"
#include "tdp/error.hpp"
#include "tdp/leakage.hpp"
#include "tdp/lfp.hpp"
#include "tdp/release.hpp"
#include "tdp/supremum.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

// Matrix sources are either CSV paths or generator expressions:
//   identity(n=2)  uniform(n=4)  strongest(n=50)
//   smoothed(n=50,s=0.005)  random(n=12,seed=7)
// Generated strongest/smoothed matrices use the single-cycle permutation.
tdp::TransitionMatrix load_matrix_source(const std::string& spec,
                                         std::uint64_t default_seed) {
  const std::size_t open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')') {
    return tdp::csv::load_matrix(std::filesystem::path(spec));
  }
  const std::string kind = spec.substr(0, open);
  std::map<std::string, double> args;
  std::string body = spec.substr(open + 1, spec.size() - open - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw tdp::ValidationError("matrix expression argument '" + item +
                                 "' must look like key=value");
    }
    try {
      args[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw tdp::ValidationError("matrix expression argument '" + item +
                                 "' has a non-numeric value");
    }
  }
  const auto arg = [&](const char* key, std::optional<double> fallback =
                                            std::nullopt) -> double {
    auto it = args.find(key);
    if (it != args.end()) return it->second;
    if (fallback) return *fallback;
    throw tdp::ValidationError("matrix expression '" + spec + "' needs " + key);
  };
  const int n = static_cast<int>(arg("n"));
  if (kind == "identity") {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    return tdp::strongest_matrix(n, perm);
  }
  if (kind == "uniform") {
    std::vector<std::vector<double>> grid(
        static_cast<std::size_t>(n),
        std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
    return tdp::validate_matrix(grid);
  }
  if (kind == "strongest") {
    return tdp::strongest_matrix(n, tdp::cycle_permutation(n));
  }
  if (kind == "smoothed") {
    return tdp::smooth(tdp::strongest_matrix(n, tdp::cycle_permutation(n)),
                       arg("s"));
  }
  if (kind == "random") {
    return tdp::random_stochastic(
        n, static_cast<std::uint64_t>(
               arg("seed", static_cast<double>(default_seed))));
  }
  throw tdp::ValidationError("unknown matrix kind '" + kind + "'");
}

std::optional<tdp::TransitionMatrix> optional_matrix(const std::string& spec,
                                                     std::uint64_t seed) {
  if (spec.empty() || spec == "none") {
    return std::nullopt;
  }
  return load_matrix_source(spec, seed);
}

// Every emitted CSV starts with a manifest comment so runs can be
// reproduced from the artifact alone.
std::string make_manifest(const std::string& args) {
  return "tdp " + args + " version=" + kVersion;
}

// Writes through a std::ostream chosen by --out ("" = stdout).
void with_output(const std::string& out_path,
                 const std::function<void(std::ostream&)>& writer) {
  if (out_path.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream file(out_path);
  if (!file) {
    throw tdp::ValidationError("cannot open " + out_path + " for writing");
  }
  writer(file);
}

std::vector<tdp::AdversaryModel> build_models(
    const std::vector<std::string>& pb_specs,
    const std::vector<std::string>& pf_specs, std::uint64_t seed) {
  const std::size_t users = std::max(pb_specs.size(), pf_specs.size());
  if (!pb_specs.empty() && !pf_specs.empty() &&
      pb_specs.size() != pf_specs.size()) {
    throw tdp::ValidationError(
        "--pb and --pf must be given once per user (use 'none' for a missing "
        "direction)");
  }
  if (users == 0) {
    throw tdp::ValidationError("at least one --pb or --pf is required");
  }
  std::vector<tdp::AdversaryModel> models;
  for (std::size_t i = 0; i < users; ++i) {
    models.emplace_back(
        "user" + std::to_string(i + 1),
        i < pb_specs.size() ? optional_matrix(pb_specs[i], seed) : std::nullopt,
        i < pf_specs.size() ? optional_matrix(pf_specs[i], seed) : std::nullopt);
  }
  return models;
}

struct QuantifyArgs {
  std::string pb, pf, out;
  double eps = 0.0;
  int T = 0;
  std::uint64_t seed = 42;
};

int cmd_quantify(const QuantifyArgs& a) {
  const auto backward = optional_matrix(a.pb, a.seed);
  const auto forward = optional_matrix(a.pf, a.seed);
  const tdp::AdversaryModel model("user1", backward, forward);
  const std::vector<double> eps(static_cast<std::size_t>(a.T), a.eps);
  const tdp::LeakageTrace trace = tdp::tpl_trace(model, eps);

  std::ostringstream flags;
  flags << "quantify --pb " << (a.pb.empty() ? "none" : a.pb) << " --pf "
        << (a.pf.empty() ? "none" : a.pf) << " --eps " << a.eps << " --T " << a.T
        << " --seed " << a.seed;
  with_output(a.out, [&](std::ostream& os) {
    tdp::csv::save_trace(trace, os, make_manifest(flags.str()));
  });
  return 0;
}

struct SupremumArgs {
  std::string p;
  double eps = 0.0;
  std::uint64_t seed = 42;
};

int cmd_supremum(const SupremumArgs& a) {
  const tdp::TransitionMatrix m = load_matrix_source(a.p, a.seed);
  const tdp::SupremumResult r = tdp::leakage_supremum(m, a.eps);
  std::cout << "# "
            << make_manifest("supremum --p " + a.p + " --eps " +
                             tdp::csv::format_double(a.eps))
            << "\n";
  std::cout << "case,q,d,supremum\n";
  std::cout << r.case_id << ',' << tdp::csv::format_double(r.q) << ','
            << tdp::csv::format_double(r.d) << ','
            << (r.exists ? tdp::csv::format_double(r.value) : "not_exist")
            << "\n";
  return 0;
}

struct AllocateArgs {
  int alg = 2;
  double alpha = 0.0;
  int T = 0;
  std::vector<std::string> pb, pf;
  std::string out;
  std::uint64_t seed = 42;
};

int cmd_allocate(const AllocateArgs& a) {
  const auto models = build_models(a.pb, a.pf, a.seed);
  tdp::AllocationResult result =
      a.alg == 2 ? tdp::allocate_by_upper_bound(models, a.alpha)
                 : tdp::allocate_by_quantification(models, a.alpha, a.T);
  // A uniform allocation is horizon-free; materialize it to T steps for
  // the artifact (10 if no horizon was given).
  const tdp::BudgetSchedule to_save =
      result.schedule.unbounded()
          ? tdp::BudgetSchedule::uniform(result.schedule.eps_mid(),
                                         a.T > 0 ? a.T : 10)
          : result.schedule;

  std::ostringstream flags;
  flags << "allocate --alg " << a.alg << " --alpha " << a.alpha;
  if (a.T > 0) flags << " --T " << a.T;
  for (const auto& s : a.pb) flags << " --pb " << s;
  for (const auto& s : a.pf) flags << " --pf " << s;
  flags << " --seed " << a.seed;

  with_output(a.out, [&](std::ostream& os) {
    tdp::csv::save_schedule(to_save, os, make_manifest(flags.str()));
  });
  for (const auto& u : result.per_user) {
    std::cerr << u.user_id << ": eps_first=" << u.eps_first
              << " eps_mid=" << u.eps_mid << " eps_last=" << u.eps_last << "\n";
  }
  return 0;
}

struct GenerateArgs {
  std::string kind = "random";
  int n = 2;
  double s = 1.0;
  std::uint64_t seed = 42;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  tdp::TransitionMatrix m = [&] {
    if (a.kind == "strongest") {
      return tdp::strongest_matrix(a.n, tdp::cycle_permutation(a.n));
    }
    if (a.kind == "smoothed") {
      return tdp::smooth(tdp::strongest_matrix(a.n, tdp::cycle_permutation(a.n)),
                         a.s);
    }
    return tdp::random_stochastic(a.n, a.seed);
  }();

  std::ostringstream flags;
  flags << "generate --kind " << a.kind << " --n " << a.n;
  if (a.kind == "smoothed") flags << " --s " << a.s;
  flags << " --seed " << a.seed;
  with_output(a.out, [&](std::ostream& os) {
    tdp::csv::save_matrix(m, os, make_manifest(flags.str()));
  });
  return 0;
}

struct ReleaseArgs {
  std::string counts, schedule, out;
  std::uint64_t seed = 42;
};

int cmd_release(const ReleaseArgs& a) {
  std::ifstream counts_in(a.counts);
  if (!counts_in) {
    throw tdp::ValidationError("cannot open " + a.counts + " for reading");
  }
  auto snapshots = tdp::ingest_counts(counts_in);
  const tdp::BudgetSchedule schedule =
      tdp::csv::load_schedule(std::filesystem::path(a.schedule));
  auto noisy = tdp::release_sequence(std::move(snapshots), schedule, a.seed);

  std::ostringstream flags;
  flags << "release --counts " << a.counts << " --schedule " << a.schedule
        << " --seed " << a.seed;
  with_output(a.out, [&](std::ostream& os) {
    tdp::csv::save_release(noisy, os, make_manifest(flags.str()));
  });
  return 0;
}

struct BenchArgs {
  int n = 150;
  double alpha = 10.0;
  int reps = 30;
  std::string sweep = "n";
  std::uint64_t seed = 42;
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  std::vector<std::pair<int, double>> configs;
  if (a.sweep == "n") {
    for (int n = 10; n <= a.n; n += 10) configs.emplace_back(n, a.alpha);
  } else if (a.sweep == "alpha") {
    for (double alpha : {0.5, 1.0, 2.0, 5.0, 10.0, 15.0, 20.0}) {
      if (alpha <= a.alpha) configs.emplace_back(a.n, alpha);
    }
  } else if (a.sweep == "none") {
    configs.emplace_back(a.n, a.alpha);
  } else {
    throw tdp::ValidationError("--sweep must be n, alpha or none");
  }

  std::ostringstream flags;
  flags << "bench --n " << a.n << " --alpha " << a.alpha << " --reps " << a.reps
        << " --sweep " << a.sweep << " --seed " << a.seed;
  with_output(a.out, [&](std::ostream& os) {
    os << "# " << make_manifest(flags.str()) << "\n";
    os << "n,alpha,mean_runtime_ms\n";
    for (const auto& [n, alpha] : configs) {
      double total_ms = 0.0;
      double checksum = 0.0;
      for (int rep = 0; rep < a.reps; ++rep) {
        const tdp::TransitionMatrix m =
            tdp::random_stochastic(n, a.seed + static_cast<std::uint64_t>(rep));
        const auto start = std::chrono::steady_clock::now();
        checksum += tdp::loss_increment(m, alpha).value;
        const auto stop = std::chrono::steady_clock::now();
        total_ms +=
            std::chrono::duration<double, std::milli>(stop - start).count();
      }
      os << n << ',' << alpha << ','
         << tdp::csv::format_double(total_ms / a.reps) << "\n";
      std::cerr << "n=" << n << " alpha=" << alpha
                << " mean_increment=" << checksum / a.reps << "\n";
    }
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"temporal-dp: leakage accounting for correlated release streams"};
  app.require_subcommand(1);

  QuantifyArgs qa;
  CLI::App* quantify =
      app.add_subcommand("quantify", "Per-timestep leakage trace for one user");
  quantify->add_option("--pb", qa.pb, "backward matrix (CSV path or expression)");
  quantify->add_option("--pf", qa.pf, "forward matrix (CSV path or expression)");
  quantify->add_option("--eps", qa.eps, "per-step budget")->required();
  quantify->add_option("--T", qa.T, "horizon")->required()->check(
      CLI::PositiveNumber);
  quantify->add_option("--out", qa.out, "output CSV (default stdout)");
  quantify->add_option("--seed", qa.seed, "seed for generated matrices");

  SupremumArgs sa;
  CLI::App* supremum = app.add_subcommand(
      "supremum", "Unbounded-horizon leakage limit for one matrix");
  supremum->add_option("--p", sa.p, "matrix (CSV path or expression)")->required();
  supremum->add_option("--eps", sa.eps, "per-step budget")->required();
  supremum->add_option("--seed", sa.seed, "seed for generated matrices");

  AllocateArgs aa;
  CLI::App* allocate = app.add_subcommand(
      "allocate", "Per-timestep budgets meeting a leakage target");
  allocate->add_option("--alg", aa.alg, "2 = uniform bound, 3 = exact schedule")
      ->check(CLI::IsMember({2, 3}));
  allocate->add_option("--alpha", aa.alpha, "leakage target")->required();
  allocate->add_option("--T", aa.T, "horizon (required for --alg 3)");
  allocate->add_option("--pb", aa.pb,
                       "backward matrix per user ('none' for absent)");
  allocate->add_option("--pf", aa.pf,
                       "forward matrix per user ('none' for absent)");
  allocate->add_option("--out", aa.out, "output CSV (default stdout)");
  allocate->add_option("--seed", aa.seed, "seed for generated matrices");

  GenerateArgs ga;
  CLI::App* generate =
      app.add_subcommand("generate", "Write a correlation matrix CSV");
  generate->add_option("--kind", ga.kind, "strongest | smoothed | random")
      ->check(CLI::IsMember({"strongest", "smoothed", "random"}));
  generate->add_option("--n", ga.n, "domain size")
      ->required()
      ->check(CLI::PositiveNumber);
  generate->add_option("--s", ga.s, "smoothing strength (smoothed only)");
  generate->add_option("--seed", ga.seed, "seed (random only)");
  generate->add_option("--out", ga.out, "output CSV (default stdout)");

  ReleaseArgs ra;
  CLI::App* release =
      app.add_subcommand("release", "Laplace-perturb a counts stream");
  release->add_option("--counts", ra.counts, "input counts CSV")->required();
  release->add_option("--schedule", ra.schedule, "budget schedule CSV")
      ->required();
  release->add_option("--seed", ra.seed, "noise seed");
  release->add_option("--out", ra.out, "output CSV (default stdout)");

  BenchArgs ba;
  CLI::App* bench = app.add_subcommand("bench", "Time the quantification core");
  bench->add_option("--n", ba.n, "max (sweep) or fixed matrix size");
  bench->add_option("--alpha", ba.alpha, "accumulated level input");
  bench->add_option("--reps", ba.reps, "repetitions per configuration")
      ->check(CLI::PositiveNumber);
  bench->add_option("--sweep", ba.sweep, "n | alpha | none");
  bench->add_option("--seed", ba.seed, "matrix seed");
  bench->add_option("--out", ba.out, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (quantify->parsed()) return cmd_quantify(qa);
    if (supremum->parsed()) return cmd_supremum(sa);
    if (allocate->parsed()) {
      if (aa.alg == 3 && aa.T < 2) {
        throw tdp::HorizonTooShortError("--alg 3 requires --T >= 2");
      }
      return cmd_allocate(aa);
    }
    if (generate->parsed()) return cmd_generate(ga);
    if (release->parsed()) return cmd_release(ra);
    if (bench->parsed()) return cmd_bench(ba);
  } catch (const tdp::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const tdp::InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const tdp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
