// Copyright 2026 The FTFP Authors
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

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ftfp/errors.h"
#include "ftfp/frlp.h"
#include "ftfp/generators.h"
#include "ftfp/harness.h"
#include "ftfp/instance_io.h"
#include "ftfp/integrality_gap.h"
#include "ftfp/lower_bound.h"
#include "ftfp/relaxation.h"

namespace ftfp {
namespace {

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

void WriteFile(const std::string& dir, const std::string& name, const std::string& content) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = std::filesystem::path(dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path.string());
  f << content;
}

Instance LoadValid(const std::string& path) {
  Instance inst = LoadInstance(path);
  const ValidationReport report = ValidateInstance(inst);
  if (!report.ok()) {
    std::string msg = "invalid instance:";
    for (const Violation& v : report.violations) msg += "\n  " + v.message;
    throw InputError(msg);
  }
  return inst;
}

// "0 1;1 2" -> {{0, 1}, {1, 2}}
std::vector<std::vector<int>> ParseSets(const std::string& text) {
  std::vector<std::vector<int>> sets;
  std::stringstream all(text);
  std::string part;
  while (std::getline(all, part, ';')) {
    std::replace(part.begin(), part.end(), ',', ' ');
    std::stringstream ss(part);
    std::vector<int> set;
    std::string tok;
    while (ss >> tok) {
      try {
        size_t used = 0;
        set.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw InputError("bad element '" + tok + "' in --sets");
      }
    }
    if (!set.empty()) sets.push_back(std::move(set));
  }
  return sets;
}

VolumeModel ParseVolume(const std::string& s) {
  if (s == "normalized") return VolumeModel::kNormalized;
  if (s == "scaled") return VolumeModel::kScaled;
  throw InputError("unknown volume model '" + s + "'");
}

BackupBound ParseBackup(const std::string& s) {
  if (s == "auto") return BackupBound::kAuto;
  if (s == "three-hop") return BackupBound::kThreeHop;
  if (s == "averaged") return BackupBound::kAveraged;
  throw InputError("unknown backup bound '" + s + "'");
}

std::string GapRow(const GapEval& e) {
  return std::to_string(e.params.r) + "," + FormatReal(e.ratio) + "," + FormatReal(e.params.alpha) + "," +
         FormatReal(e.params.fc) + "," + std::to_string(e.params.l) + "\n";
}

std::string BoundRow(double gamma, double c, double beta, double bound) {
  return FormatReal(gamma) + "," + FormatReal(c) + "," + FormatReal(beta) + "," + FormatReal(bound) + "\n";
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fault-tolerant facility placement: LP rounding and analysis tools", "ftfp"};
  app.require_subcommand(1);

  uint64_t seed = 1;
  std::string output = ".";
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed")->capture_default_str();
    sub->add_option("--output", output, "Output directory")->capture_default_str();
  };

  // solve
  std::string input;
  int grid = 100, trials = 1, rbar = 0;
  CLI::App* solve = app.add_subcommand("solve", "Run the rounding algorithm on an instance file");
  solve->add_option("--input", input, "Instance file")->required();
  solve->add_option("--grid", grid, "Gamma grid size n")->capture_default_str();
  solve->add_option("--trials", trials, "Runs per grid point")->capture_default_str();
  solve->add_option("--rbar", rbar, "Demand-reduction threshold (0 = off)")->capture_default_str();
  common(solve);

  // frlp
  int r = 1, n = 1000, r_max = 10;
  bool uniform = false, table = false;
  std::string volume = "normalized", backup = "auto";
  CLI::App* frlp = app.add_subcommand("frlp", "Solve the factor-revealing LP");
  frlp->add_option("--r", r, "Minimum requirement")->capture_default_str();
  frlp->add_option("--n", n, "Grid resolution")->capture_default_str();
  frlp->add_flag("--uniform", uniform, "Add the 1.11 f + 1.78 c >= lambda row");
  frlp->add_flag("--table", table, "Compute both variants for r = 1..--r-max");
  frlp->add_option("--r-max", r_max, "Largest r for --table")->capture_default_str();
  frlp->add_option("--volume", volume, "normalized | scaled")->capture_default_str();
  frlp->add_option("--backup", backup, "auto | three-hop | averaged")->capture_default_str();
  common(frlp);

  // gap
  int gap_r = 1, gap_l = 1000;
  double alpha = 0, fc = 0;
  bool search = false, gap_table = false;
  CLI::App* gap = app.add_subcommand("gap", "Integrality-gap family: evaluate or search");
  gap->add_option("--r", gap_r, "Requirement")->capture_default_str();
  gap->add_option("--l", gap_l, "Client subset size")->capture_default_str();
  CLI::Option* alpha_opt = gap->add_option("--alpha", alpha, "Open fraction");
  CLI::Option* fc_opt = gap->add_option("--fc", fc, "Facility cost scale");
  alpha_opt->needs(fc_opt);
  fc_opt->needs(alpha_opt);
  gap->add_flag("--search", search, "Maximize over f_c of the minimum over alpha");
  gap->add_flag("--table", gap_table, "Search every r = 1..10");
  common(gap);

  // bound
  double b_gamma = BoundParams{}.gamma, b_c = BoundParams{}.c;
  bool optimize = false;
  CLI::App* bound = app.add_subcommand("bound", "FTFL lower-bound expression");
  bound->add_option("--gamma", b_gamma, "Cost parameter")->capture_default_str();
  bound->add_option("--c", b_c, "Cover fraction parameter")->capture_default_str();
  bound->add_flag("--optimize", optimize, "Maximize the bound over gamma");
  common(bound);

  // gen
  std::string kind;
  int facilities = 10, clients = 20, rmin = 1, rmax = 1;
  GapInstanceParams gp;
  SetCoverInput sc;
  std::string sets_text;
  bool to_file = false;
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", kind, "euclidean | gap | setcover")->required();
  gen->add_option("--facilities", facilities, "Euclidean: facility count")->capture_default_str();
  gen->add_option("--clients", clients, "Euclidean: client count")->capture_default_str();
  gen->add_option("--rmin", rmin, "Euclidean: smallest requirement")->capture_default_str();
  gen->add_option("--rmax", rmax, "Euclidean: largest requirement")->capture_default_str();
  gen->add_option("--n", gp.n, "Gap: locations")->capture_default_str();
  gen->add_option("--l", gp.l, "Gap: client subset size")->capture_default_str();
  gen->add_option("--fc", gp.fc, "Gap: facility cost scale")->capture_default_str();
  gen->add_option("--r", gp.r, "Gap or setcover: requirement")->capture_default_str();
  gen->add_option("--ground", sc.ground_set_size, "Setcover: ground set size");
  gen->add_option("--sets", sets_text, "Setcover: sets as \"0 1;1 2\"");
  gen->add_option("--k", sc.k, "Setcover: cover size guess")->capture_default_str();
  gen->add_option("--gamma", sc.gamma, "Setcover: cost parameter")->capture_default_str();
  gen->add_flag("--write", to_file, "Write instance.ftfp into --output instead of stdout");
  common(gen);

  // oracle
  int cap = -1;
  CLI::App* oracle = app.add_subcommand("oracle", "Exact optimum of a tiny instance by enumeration");
  oracle->add_option("--input", input, "Instance file")->required();
  oracle->add_option("--cap", cap, "Copies per location (-1 = max requirement)")->capture_default_str();
  common(oracle);

  // drtest
  int samples = 100000;
  std::vector<int> sizes = {2, 3, 5, 10};
  CLI::App* drtest = app.add_subcommand("drtest", "Statistical checks of dependent rounding");
  drtest->add_option("--samples", samples, "Samples per vector")->capture_default_str();
  drtest->add_option("--sizes", sizes, "Vector sizes")->capture_default_str();
  common(drtest);

  try {
    // CLI11 takes the arguments in reverse order, without the program name.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    if (solve->parsed()) {
      const Instance inst = LoadValid(input);
      MonteCarloOptions opts;
      opts.grid = grid;
      opts.trials = trials;
      opts.seed = seed;
      opts.reduce_rbar = rbar;
      const ExperimentReport rep = MonteCarloEval(inst, opts, std::filesystem::path(input).stem().string());
      if (auto e = CheckIntegralFeasibility(inst, rep.best)) throw NumericalError("infeasible result: " + *e);
      out << "lp " << FormatReal(rep.lp_value) << "\n"
          << "best_cost " << FormatReal(rep.best_cost) << "\n"
          << "ratio " << FormatReal(rep.ratio) << "\n"
          << "best_gamma " << FormatReal(rep.best_gamma) << "\n"
          << "runs " << rep.total_runs << "\n"
          << "repaired_runs " << rep.repaired_runs << "\n";
      WriteFile(output, "report.csv", ReportSummaryCsv(rep));
      WriteFile(output, "gamma_stats.csv", ReportGammaCsv(rep));
      WriteFile(output, "solution.txt", FormatSolution(rep.best));
      return 0;
    }
    if (frlp->parsed()) {
      FrlpConfig cfg;
      cfg.n = n;
      cfg.volume = ParseVolume(volume);
      cfg.backup = ParseBackup(backup);
      if (table) {
        std::string csv = "r,lambda_nonuniform,lambda_uniform\n";
        for (int k = 1; k <= r_max; ++k) {
          cfg.r = k;
          cfg.uniform = false;
          const FrlpResult plain = ComputeLambda(cfg);
          cfg.uniform = true;
          const FrlpResult jms = ComputeLambda(cfg);
          out << "r " << k << " lambda " << Fixed(plain.lambda, 5) << " uniform " << Fixed(jms.lambda, 5) << "\n";
          csv += std::to_string(k) + "," + FormatReal(plain.lambda) + "," + FormatReal(jms.lambda) + "\n";
          WriteFile(output, "frlp_profile_r" + std::to_string(k) + ".csv", FrlpProfileCsv(plain));
        }
        WriteFile(output, "lambda_table.csv", csv);
        return 0;
      }
      cfg.r = r;
      cfg.uniform = uniform;
      const FrlpResult res = ComputeLambda(cfg);
      out << "lambda " << Fixed(res.lambda, 5) << "\n"
          << "f " << FormatReal(res.f) << "\n"
          << "c " << FormatReal(res.c) << "\n"
          << "tight_executions " << res.tight_executions.size() << "\n";
      WriteFile(output, "frlp_profile_r" + std::to_string(r) + (uniform ? "_uniform" : "") + ".csv",
                FrlpProfileCsv(res));
      return 0;
    }
    if (gap->parsed()) {
      const std::string header = "r,IG,alpha,f_c,l\n";
      if (gap_table) {
        std::string csv = header;
        for (int k = 1; k <= 10; ++k) {
          const GapEval e = GapSearch(k, gap_l);
          out << "r " << k << " IG " << Fixed(e.ratio, 5) << " alpha " << FormatReal(e.params.alpha) << " f_c "
              << FormatReal(e.params.fc) << "\n";
          csv += GapRow(e);
        }
        WriteFile(output, "gap_table.csv", csv);
        return 0;
      }
      GapEval e;
      if (search) {
        e = GapSearch(gap_r, gap_l);
      } else if (alpha_opt->count() > 0) {
        GapInstanceParams p;
        p.r = gap_r;
        p.l = gap_l;
        p.n = gap_l / std::max(gap_r, 1);
        p.fc = fc;
        p.alpha = alpha;
        e = GapCosts(p);
      } else {
        throw InputError("gap needs --alpha and --fc, --search, or --table");
      }
      out << "z_lp " << FormatReal(e.z_lp) << "\n"
          << "z_int " << FormatReal(e.z_int) << "\n"
          << "ratio " << Fixed(e.ratio, 5) << "\n"
          << "alpha " << FormatReal(e.params.alpha) << "\n"
          << "f_c " << FormatReal(e.params.fc) << "\n";
      WriteFile(output, "gap_table.csv", header + GapRow(e));
      return 0;
    }
    if (bound->parsed()) {
      std::string csv = "gamma,c,beta,bound\n";
      if (optimize) {
        const OptimizedBound ob = OptimizeBound(b_c);
        out << "gamma " << Fixed(ob.gamma, 6) << "\n"
            << "bound " << Fixed(ob.bound, 6) << "\n"
            << "beta " << Fixed(ob.beta, 6) << "\n";
        csv += BoundRow(ob.gamma, b_c, ob.beta, ob.bound);
      } else {
        const BoundParams bp{b_gamma, b_c};
        const double value = FtflLowerBound(bp);
        out << "bound " << Fixed(value, 6) << "\n"
            << "beta " << Fixed(WorstBeta(bp), 6) << "\n";
        csv += BoundRow(b_gamma, b_c, WorstBeta(bp), value);
      }
      WriteFile(output, "bounds.csv", csv);
      return 0;
    }
    if (gen->parsed()) {
      Instance inst;
      if (kind == "euclidean") {
        inst = GenerateEuclidean({facilities, clients, rmin, rmax, seed});
      } else if (kind == "gap") {
        inst = GenerateGapInstance(gp);
      } else if (kind == "setcover") {
        sc.sets = ParseSets(sets_text);
        sc.r = gp.r;
        inst = GenerateSetCoverInstance(sc);
      } else {
        throw InputError("unknown --kind '" + kind + "'");
      }
      if (to_file) {
        WriteFile(output, "instance.ftfp", FormatInstance(inst));
      } else {
        out << FormatInstance(inst);
      }
      return 0;
    }
    if (oracle->parsed()) {
      const Instance inst = LoadValid(input);
      const OracleResult res = BruteForceOptimal(inst, cap);
      const FractionalSolution fs = SolveFtfpRelaxation(inst);
      out << "lp " << FormatReal(fs.total()) << "\n"
          << "opt " << FormatReal(res.cost) << "\n"
          << "nodes " << res.nodes << "\n"
          << FormatSolution(res.solution);
      return 0;
    }
    if (drtest->parsed()) {
      DrSuiteOptions opts;
      opts.sizes = sizes;
      opts.samples = samples;
      opts.seed = seed;
      opts.fixed = {{0.5, 0.5}, {0.3, 0.3, 0.4}};
      const DrSuiteReport rep = DrPropertySuite(opts);
      int failed = 0;
      for (const DrCaseResult& c : rep.cases) failed += !c.ok();
      out << "cases " << rep.cases.size() << "\n"
          << "failed " << failed << "\n"
          << (rep.ok() ? "all properties hold\n" : "some properties failed\n");
      WriteFile(output, "drtest.csv", rep.Csv());
      return 0;
    }
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace ftfp
