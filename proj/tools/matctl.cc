// Copyright 2026 The Authors.
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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "inputsel/constraints.h"
#include "inputsel/errors.h"
#include "inputsel/experiment.h"
#include "inputsel/json_io.h"
#include "inputsel/metrics.h"
#include "inputsel/select.h"
#include "inputsel/sysmodel.h"

namespace {

using namespace inputsel;

enum ExitCode {
  kOk = 0,
  kCertificateFail = 1,
  kUsage = 2,
  kGeneration = 3,
  kUnsolvable = 4,
  kInfeasibleK = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void Emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

DescriptorSystem LoadSystem(const std::string& path, const std::string& kind) {
  const Json j = ReadJsonFile(path);
  if (j.contains("A")) return SystemFromJson(j);
  // A bare graph.
  const Graph g = GraphFromJson(j);
  switch (ParseKind(kind)) {
    case SystemKind::kDoubleIntegrator: return DoubleIntegratorSystem(g);
    case SystemKind::kFree: return FreeParameterSystem(g);
    case SystemKind::kConsensus: return ConsensusSystem(g);
    default: throw UsageError("a bare graph needs a constructor kind");
  }
}

std::string ResultText(const SelectionResult& r, const std::string& format) {
  if (format == "csv") {
    std::ostringstream out;
    out << "algorithm,size,objective,passed,S\n" << r.algorithm << ","
        << r.ground.size() << "," << r.objective << ","
        << (r.certificate && r.certificate->passed() ? 1 : 0) << ",";
    for (size_t i = 0; i < r.states.size(); ++i)
      out << (i ? " " : "") << r.states[i];
    out << "\n";
    return out.str();
  }
  return ToJson(r).dump(2) + "\n";
}

std::vector<int> ParseList(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<double> ParseWeights(const std::string& text) {
  std::ifstream f(text);
  if (f) {
    const Json j = Json::parse(f);
    return j.get<std::vector<double>>();
  }
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

SubmodularObjective MetricObjective(const DescriptorSystem& sys,
                                    const std::string& metric,
                                    const MetricConfig& mcfg, uint64_t seed) {
  if (!sys.graph) throw UsageError("metric objectives need a network graph");
  if (sys.graph->n != sys.ground_size())
    throw UsageError("metric objectives need one candidate per network node");
  const WeightedGraph wg = RandomWeights(*sys.graph, seed);
  return AsObjective(wg, metric == "coherence" ? MetricKind::kCoherence
                                               : MetricKind::kConvergence,
                     mcfg);
}

uint64_t DefaultSeed() {
  const char* env = std::getenv("MATCTL_SEED");
  if (!env || !*env) return 1;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Input selection for structured descriptor systems"};
  app.require_subcommand(1);
  app.fallthrough();
  uint64_t seed = DefaultSeed();
  std::string out;
  std::string format = "json";
  app.add_option("--seed", seed, "Random seed (default: MATCTL_SEED or 1)");
  app.add_option("--out", out, "Output path (default: stdout)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random geometric network");
  int gen_n = 20;
  double gen_degree = 3.0;
  double gen_range = 600.0;
  std::string gen_kind = "graph";
  std::string gen_sym = "mutual";
  gen->add_option("--n", gen_n, "Number of nodes")->check(CLI::Range(2, 100000));
  gen->add_option("--degree", gen_degree, "Target mean degree")
      ->check(CLI::PositiveNumber);
  gen->add_option("--range-max", gen_range, "Maximum communication range")
      ->check(CLI::PositiveNumber);
  gen->add_option("--kind", gen_kind, "Output kind")
      ->check(CLI::IsMember({"graph", "consensus", "double_integrator", "free"}));
  gen->add_option("--symmetrize", gen_sym, "Edge symmetrization")
      ->check(CLI::IsMember({"none", "mutual"}));

  // Shared system options.
  std::string system_path;
  std::string system_kind = "consensus";
  int trials = 3;
  int z_count = 20;
  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--system", system_path, "System or graph JSON")->required();
    cmd->add_option("--kind", system_kind, "Constructor for a bare graph")
        ->check(CLI::IsMember({"consensus", "double_integrator", "free"}));
    cmd->add_option("--trials", trials, "Certificate trials")->check(CLI::Range(1, 100));
    cmd->add_option("--z-count", z_count, "Pencil sample points")
        ->check(CLI::Range(0, 10000));
  };

  auto* mins = app.add_subcommand("min-inputs", "Minimum controlling input set");
  add_system(mins);
  bool assume_strong = false;
  std::string baseline;
  mins->add_flag("--assume-strong", assume_strong, "Use the strongly connected path");
  mins->add_option("--baseline", baseline, "Heuristic baseline")
      ->check(CLI::IsMember({"degree", "random"}));

  std::string metric = "convergence";
  double t = 1.0, p = 2.0;
  int k = 0;
  auto add_metric = [&](CLI::App* cmd) {
    cmd->add_option("--metric", metric, "Performance metric")
        ->check(CLI::IsMember({"convergence", "coherence"}));
    cmd->add_option("--t", t, "Evaluation time")->check(CLI::PositiveNumber);
    cmd->add_option("--p", p, "Norm order")->check(CLI::Range(1.0, 1e9));
    cmd->add_option("--k", k, "Number of inputs")->required()->check(CLI::NonNegativeNumber);
  };

  auto* sel = app.add_subcommand("select", "Joint performance and controllability");
  add_system(sel);
  add_metric(sel);
  std::string modular;
  int samples = 0;
  bool single = false;
  sel->add_option("--modular-weights", modular, "Weights file or comma list");
  sel->add_option("--samples", samples, "Samples per marginal estimate")
      ->check(CLI::NonNegativeNumber);
  sel->add_flag("--assume-strong", single, "Use the single-matroid path");

  auto* trade = app.add_subcommand("tradeoff", "Greedy performance/controllability trade-off");
  add_system(trade);
  add_metric(trade);
  double eta = 0.0;
  bool strong = false;
  trade->add_option("--eta", eta, "Trade-off weight")->required()->check(CLI::NonNegativeNumber);
  trade->add_flag("--strong", strong, "Use the strongly connected index");

  auto* verify = app.add_subcommand("verify", "Certify an input set");
  add_system(verify);
  std::string inputs;
  verify->add_option("--inputs", inputs, "Result JSON, state array JSON, or comma list")
      ->required();

  auto* exp = app.add_subcommand("experiment", "Reproduce the benchmark figures");
  std::string exp_id = "fig1";
  std::string exp_n, exp_k;
  double exp_degree = 0;
  int exp_trials = 20;
  int exp_samples = -1;
  std::string exp_metric = "convergence";
  double exp_t = 1.0;
  exp->add_option("--id", exp_id, "Experiment")->check(CLI::IsMember({"fig1", "fig2"}));
  exp->add_option("--n", exp_n, "Comma-separated network sizes");
  exp->add_option("--k", exp_k, "Comma-separated k values");
  exp->add_option("--degree", exp_degree, "Target mean degree")->check(CLI::PositiveNumber);
  exp->add_option("--trials", exp_trials, "Trials per point")->check(CLI::Range(1, 100000));
  exp->add_option("--samples", exp_samples, "Samples per marginal estimate");
  exp->add_option("--metric", exp_metric, "Performance metric")
      ->check(CLI::IsMember({"convergence", "coherence"}));
  exp->add_option("--t", exp_t, "Evaluation time")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  auto cert_cfg = [&] {
    CertificateConfig cc;
    cc.field.seed = seed;
    cc.field.trials = trials;
    cc.z_count = z_count;
    return cc;
  };
  auto select_cfg = [&] {
    SelectConfig cfg;
    cfg.seed = seed;
    cfg.field.seed = seed;
    cfg.field.trials = trials;
    cfg.certificate = cert_cfg();
    cfg.samples_per_estimate = samples;
    cfg.single_matroid = single;
    return cfg;
  };
  MetricConfig mcfg;
  mcfg.t = t;
  mcfg.p = p;
  mcfg.seed = seed + 1;

  try {
    if (*gen) {
      GeometricConfig cfg;
      cfg.n = gen_n;
      cfg.target_degree = gen_degree;
      cfg.range_max = gen_range;
      cfg.seed = seed;
      cfg.symmetrize = gen_sym == "mutual" ? Symmetrization::kMutual : Symmetrization::kNone;
      const GeometricNetwork net = RandomGeometricNetwork(cfg);
      Json j;
      if (gen_kind == "graph") {
        j = ToJson(net.graph);
      } else {
        const SystemKind kind = ParseKind(gen_kind);
        j = ToJson(kind == SystemKind::kConsensus ? ConsensusSystem(net.graph)
                   : kind == SystemKind::kDoubleIntegrator
                       ? DoubleIntegratorSystem(net.graph)
                       : FreeParameterSystem(net.graph));
      }
      Emit(out, j.dump(2) + "\n");
      std::cerr << "mean degree " << net.achieved_degree << "\n";
      return kOk;
    }
    if (*exp) {
      ExperimentSpec spec = exp_id == "fig1" ? ExperimentSpec::Fig1() : ExperimentSpec::Fig2();
      spec.seed = seed;
      spec.trials = exp_trials;
      if (!exp_n.empty()) spec.n_values = ParseList(exp_n);
      if (!exp_k.empty()) spec.k_values = ParseList(exp_k);
      if (exp_degree > 0) spec.degree = exp_degree;
      if (exp_samples >= 0) spec.samples_per_estimate = exp_samples;
      spec.metric.t = exp_t;
      spec.metric_kind = exp_metric == "coherence" ? MetricKind::kCoherence
                                                   : MetricKind::kConvergence;
      spec.out_dir = out.empty() ? "." : out;
      try {
        spec.Validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const ExperimentResult result = RunExperiment(spec);
      WriteArtifacts(result);
      for (const auto& [key, mean] : Means(result.rows))
        std::cout << key.first << " " << key.second << " " << mean << "\n";
      return kOk;
    }

    const DescriptorSystem sys = LoadSystem(system_path, system_kind);
    if (*mins) {
      if (!baseline.empty()) {
        if (!sys.graph) throw UsageError("baselines need a network graph");
        const std::vector<int> order = baseline == "degree"
                                           ? DegreeOrder(*sys.graph)
                                           : RandomOrder(sys.graph->n, seed);
        std::vector<int> states;
        for (int v : order) states.push_back(sys.eligible.at(v));
        const int len = BaselinePrefix(sys, states, cert_cfg());
        SelectionResult r;
        r.algorithm = "baseline_" + baseline;
        r.seed = seed;
        if (len >= 0) {
          r.states.assign(states.begin(), states.begin() + len);
          std::sort(r.states.begin(), r.states.end());
          r.ground = sys.ToGround(r.states);
          r.certificate = ControllabilityCertificate(AugmentWithInputs(sys, r.states),
                                                     cert_cfg());
        }
        r.objective = static_cast<double>(r.states.size());
        Emit(out, ResultText(r, format));
        return len >= 0 ? kOk : kCertificateFail;
      }
      const ControllabilityModel model(sys, select_cfg().field);
      const SelectionResult r = assume_strong ? MinInputSetStrong(model, select_cfg())
                                              : MinInputSet(model, select_cfg());
      Emit(out, ResultText(r, format));
      return r.certificate->passed() ? kOk : kCertificateFail;
    }
    if (*sel) {
      const ControllabilityModel model(sys, select_cfg().field);
      if (k > sys.ground_size()) throw UsageError("k exceeds the number of candidates");
      SelectionResult r;
      if (!modular.empty()) {
        r = SelectJointModular(model, ParseWeights(modular), k, select_cfg());
      } else {
        r = SelectJoint(model, MetricObjective(sys, metric, mcfg, seed), k, select_cfg());
      }
      Emit(out, ResultText(r, format));
      return r.certificate->passed() ? kOk : kCertificateFail;
    }
    if (*trade) {
      const ControllabilityModel model(sys, select_cfg().field);
      const SelectionResult r = SelectTradeoff(
          model, MetricObjective(sys, metric, mcfg, seed), eta, k, strong, select_cfg());
      Emit(out, ResultText(r, format));
      return kOk;
    }
    if (*verify) {
      std::vector<int> states;
      std::ifstream f(inputs);
      if (f || (!inputs.empty() && inputs.front() == '[')) {
        const Json j = f ? Json::parse(f) : Json::parse(inputs);
        states = j.is_array() ? j.get<std::vector<int>>() : j.at("S").get<std::vector<int>>();
      } else {
        states = ParseList(inputs);
      }
      const Certificate c =
          ControllabilityCertificate(AugmentWithInputs(sys, states), cert_cfg());
      Emit(out, ToJson(c).dump(2) + "\n");
      return c.passed() ? kOk : kCertificateFail;
    }
  } catch (const KTooSmall& e) {
    std::cerr << "error: " << e.what() << "; minimum feasible k is " << e.min_k() << "\n";
    return kInfeasibleK;
  } catch (const GenerationError& e) {
    std::cerr << "error: " << e.what() << " (achieved degree " << e.achieved() << ")\n";
    return kGeneration;
  } catch (const UnsolvableSystem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsolvable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
