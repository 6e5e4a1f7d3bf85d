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

#include "inputsel/experiment.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "inputsel/constraints.h"
#include "inputsel/errors.h"

namespace inputsel {
namespace {

uint64_t SplitMix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string Format(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string Hex(uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

const char* kMethods[] = {"submodular", "degree", "random"};

}  // namespace

void ExperimentSpec::Validate() const {
  if (id != "fig1" && id != "fig2") throw std::invalid_argument("unknown experiment id");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (n_values.empty()) throw std::invalid_argument("no network sizes");
  for (int n : n_values)
    if (n < 2) throw std::invalid_argument("network size must be at least 2");
  if (!(degree > 0)) throw std::invalid_argument("degree must be positive");
  if (id == "fig2" && k_values.empty()) throw std::invalid_argument("no k values");
  for (int k : k_values)
    if (k < 1) throw std::invalid_argument("k must be positive");
  metric.Validate();
}

Json ExperimentSpec::ToJson() const {
  return {{"id", id},
          {"n_values", n_values},
          {"degree", degree},
          {"k_values", k_values},
          {"trials", trials},
          {"seed", seed},
          {"t", metric.t},
          {"p", metric.p},
          {"x_star", metric.x_star},
          {"metric", metric_kind == MetricKind::kCoherence ? "coherence" : "convergence"},
          {"samples_per_estimate", samples_per_estimate}};
}

uint64_t ExperimentSpec::ConfigHash() const { return Fnv1a(ToJson().dump()); }

ExperimentSpec ExperimentSpec::Fig1() { return ExperimentSpec(); }

ExperimentSpec ExperimentSpec::Fig2() {
  ExperimentSpec s;
  s.id = "fig2";
  s.n_values = {20};
  s.degree = 2.0;
  s.samples_per_estimate = 8;
  return s;
}

uint64_t Fnv1a(const std::string& text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t TrialSeed(uint64_t seed, int x, int trial) {
  return SplitMix(SplitMix(seed) ^ (static_cast<uint64_t>(x) << 32) ^
                  static_cast<uint64_t>(trial));
}

std::vector<int> DegreeOrder(const Graph& g) {
  const std::vector<int> deg = g.Degrees();
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a] > deg[b]; });
  return order;
}

std::vector<int> RandomOrder(int n, uint64_t seed) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(order[i], order[pick(rng)]);
  }
  return order;
}

int BaselinePrefix(const DescriptorSystem& sys, const std::vector<int>& order,
                   const CertificateConfig& cfg) {
  auto passes = [&](int len) {
    std::vector<int> states(order.begin(), order.begin() + len);
    std::sort(states.begin(), states.end());
    return ControllabilityCertificate(AugmentWithInputs(sys, states), cfg).passed();
  };
  int hi = static_cast<int>(order.size());
  if (!passes(hi)) return -1;
  int lo = 0;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (passes(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

GeometricConfig ExperimentNetworkConfig(int n, double degree, uint64_t seed) {
  GeometricConfig cfg;
  cfg.n = n;
  cfg.target_degree = degree;
  cfg.seed = seed;
  cfg.symmetrize = Symmetrization::kMutual;
  return cfg;
}

ExperimentResult RunFig1(const ExperimentSpec& spec) {
  spec.Validate();
  ExperimentResult result{spec, {}};
  for (int n : spec.n_values) {
    for (int trial = 0; trial < spec.trials; ++trial) {
      const uint64_t ts = TrialSeed(spec.seed, n, trial);
      auto row = [&](const std::string& method, double value,
                     const std::string& status) {
        result.rows.push_back({n, method, trial, value, status, ts});
      };
      DescriptorSystem sys;
      Graph graph;
      try {
        graph = RandomGeometricNetwork(ExperimentNetworkConfig(n, spec.degree, ts)).graph;
        sys = ConsensusSystem(graph);
      } catch (const std::exception&) {
        for (const char* m : kMethods) row(m, 0, "generation_error");
        continue;
      }
      SelectConfig cfg;
      cfg.seed = ts;
      cfg.field.seed = ts;
      CertificateConfig cc;
      cc.field.seed = ts;
      const SelectionResult r = MinInputSet(sys, cfg);
      row("submodular", double(r.ground.size()),
          r.certificate->passed() ? "ok" : "certificate_fail");
      const int by_degree = BaselinePrefix(sys, DegreeOrder(graph), cc);
      row("degree", by_degree, by_degree < 0 ? "certificate_fail" : "ok");
      const int by_random = BaselinePrefix(sys, RandomOrder(n, ts + 1), cc);
      row("random", by_random, by_random < 0 ? "certificate_fail" : "ok");
    }
  }
  return result;
}

ExperimentResult RunFig2(const ExperimentSpec& spec) {
  spec.Validate();
  ExperimentResult result{spec, {}};
  const bool coherence = spec.metric_kind == MetricKind::kCoherence;
  for (int n : spec.n_values) {
    for (int trial = 0; trial < spec.trials; ++trial) {
      const uint64_t ts = TrialSeed(spec.seed, n, trial);
      auto row = [&](int k, const std::string& method, double value,
                     const std::string& status) {
        result.rows.push_back({k, method, trial, value, status, ts});
      };
      Graph graph;
      DescriptorSystem sys;
      try {
        graph = RandomGeometricNetwork(ExperimentNetworkConfig(n, spec.degree, ts)).graph;
        sys = ConsensusSystem(graph);
      } catch (const std::exception&) {
        for (int k : spec.k_values)
          for (const char* m : kMethods) row(k, m, 0, "generation_error");
        continue;
      }
      FieldConfig field;
      field.seed = ts;
      const ControllabilityModel model(sys, field);
      const WeightedGraph wg = RandomWeights(graph, ts + 2);
      MetricConfig mcfg = spec.metric;
      mcfg.seed = ts + 3;
      const SubmodularObjective f = AsObjective(wg, spec.metric_kind, mcfg);
      const int min_k = MinimumFeasibleK(model, false);
      auto measure = [&](const std::vector<int>& s, std::string& status) {
        try {
          return coherence ? Coherence(wg, s) : ConvergenceError(wg, s, mcfg);
        } catch (const UnboundedVariance&) {
          status = "unbounded";
          return 0.0;
        }
      };
      const std::vector<int> by_degree = DegreeOrder(graph);
      const std::vector<int> by_random = RandomOrder(n, ts + 1);
      for (int k : spec.k_values) {
        if (k > n) continue;
        std::string status = "ok";
        if (k < min_k) {
          row(k, "submodular", 0, "infeasible");
        } else {
          SelectConfig cfg;
          cfg.seed = ts + static_cast<uint64_t>(k);
          cfg.field = field;
          cfg.samples_per_estimate = spec.samples_per_estimate;
          const SelectionResult r = SelectJoint(model, f, k, cfg);
          if (!r.certificate->passed()) status = "certificate_fail";
          const double v = measure(r.states, status);
          row(k, "submodular", v, status);
        }
        for (int which = 0; which < 2; ++which) {
          const std::vector<int>& order = which == 0 ? by_degree : by_random;
          std::vector<int> s(order.begin(), order.begin() + k);
          std::sort(s.begin(), s.end());
          status = "ok";
          const double v = measure(s, status);
          row(k, which == 0 ? "degree" : "random", v, status);
        }
      }
    }
  }
  return result;
}

ExperimentResult RunExperiment(const ExperimentSpec& spec) {
  return spec.id == "fig1" ? RunFig1(spec) : RunFig2(spec);
}

std::map<std::pair<int, std::string>, double> Means(
    const std::vector<ExperimentRow>& rows) {
  std::map<std::pair<int, int>, bool> group_ok;
  for (const auto& r : rows) {
    auto [it, fresh] = group_ok.emplace(std::make_pair(r.x, r.trial), true);
    it->second = it->second && r.status == "ok";
  }
  std::map<std::pair<int, std::string>, std::pair<double, int>> acc;
  for (const auto& r : rows) {
    if (!group_ok[{r.x, r.trial}]) continue;
    auto& a = acc[{r.x, r.method}];
    a.first += r.value;
    ++a.second;
  }
  std::map<std::pair<int, std::string>, double> out;
  for (const auto& [key, a] : acc) out[key] = a.first / a.second;
  return out;
}

std::string ToCsv(const ExperimentResult& result) {
  const bool fig1 = result.spec.id == "fig1";
  std::ostringstream out;
  out << "# id=" << result.spec.id << " seed=" << result.spec.seed
      << " config_hash=" << Hex(result.spec.ConfigHash())
      << " version=" << kVersion << "\n";
  out << (fig1 ? "n" : "k") << ",method,trial," << (fig1 ? "size" : "error")
      << ",status,trial_seed\n";
  for (const auto& r : result.rows)
    out << r.x << "," << r.method << "," << r.trial << "," << Format(r.value)
        << "," << r.status << "," << r.trial_seed << "\n";
  return out.str();
}

std::vector<ExperimentRow> RowsFromCsv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::vector<ExperimentRow> rows;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) throw std::runtime_error("malformed CSV row: " + line);
    ExperimentRow r;
    r.x = std::stoi(cells[0]);
    r.method = cells[1];
    r.trial = std::stoi(cells[2]);
    r.value = std::stod(cells[3]);
    r.status = cells[4];
    r.trial_seed = std::stoull(cells[5]);
    rows.push_back(r);
  }
  return rows;
}

std::string SvgFromCsv(const std::string& csv) {
  std::string meta, x_name = "x", y_name = "value";
  {
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("#", 0) == 0) {
        meta = line.substr(1);
        continue;
      }
      const auto c1 = line.find(',');
      x_name = line.substr(0, c1);
      const auto c3 = line.find(',', line.find(',', c1 + 1) + 1);
      y_name = line.substr(c3 + 1, line.find(',', c3 + 1) - c3 - 1);
      break;
    }
  }
  const auto means = Means(RowsFromCsv(csv));
  std::set<int> xs;
  std::vector<std::string> methods;
  double y_max = 0;
  for (const auto& [key, v] : means) {
    xs.insert(key.first);
    if (std::find(methods.begin(), methods.end(), key.second) == methods.end())
      methods.push_back(key.second);
    y_max = std::max(y_max, v);
  }
  if (y_max <= 0) y_max = 1;
  y_max *= 1.1;
  const double w = 640, h = 420, left = 70, right = 150, top = 40, bottom = 60;
  const double pw = w - left - right, ph = h - top - bottom;
  const int x_lo = xs.empty() ? 0 : *xs.begin();
  const int x_hi = xs.empty() ? 1 : *xs.rbegin();
  auto px = [&](double x) {
    return left + (x_hi == x_lo ? pw / 2 : (x - x_lo) / (x_hi - x_lo) * pw);
  };
  auto py = [&](double y) { return top + ph - y / y_max * ph; };
  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<!--" << meta << " -->\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\"" << left + pw
      << "\" y2=\"" << top + ph << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
      << "\" y2=\"" << top + ph << "\" stroke=\"black\"/>\n";
  for (int x : xs)
    out << "<text x=\"" << px(x) << "\" y=\"" << top + ph + 18
        << "\" text-anchor=\"middle\">" << x << "</text>\n";
  for (int i = 0; i <= 5; ++i) {
    const double y = y_max * i / 5;
    out << "<text x=\"" << left - 8 << "\" y=\"" << py(y) + 4
        << "\" text-anchor=\"end\">" << Format(std::round(y * 1000) / 1000)
        << "</text>\n";
  }
  out << "<text x=\"" << left + pw / 2 << "\" y=\"" << h - 15
      << "\" text-anchor=\"middle\">" << x_name << "</text>\n";
  out << "<text x=\"15\" y=\"" << top + ph / 2 << "\" transform=\"rotate(-90 15 "
      << top + ph / 2 << ")\" text-anchor=\"middle\">mean " << y_name << "</text>\n";
  for (size_t m = 0; m < methods.size(); ++m) {
    const char* color = colors[m % 5];
    std::ostringstream pts;
    for (int x : xs) {
      auto it = means.find({x, methods[m]});
      if (it == means.end()) continue;
      pts << px(x) << "," << py(it->second) << " ";
      out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(it->second)
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\""
        << pts.str() << "\"/>\n";
    out << "<text x=\"" << left + pw + 15 << "\" y=\"" << top + 20 + 18 * m
        << "\" fill=\"" << color << "\">" << methods[m] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

Json Metadata(const ExperimentResult& result) {
  return {{"seed", result.spec.seed},
          {"config_hash", Hex(result.spec.ConfigHash())},
          {"version", kVersion},
          {"spec", result.spec.ToJson()},
          {"rows", result.rows.size()}};
}

void WriteArtifacts(const ExperimentResult& result) {
  namespace fs = std::filesystem;
  const fs::path dir(result.spec.out_dir);
  fs::create_directories(dir);
  const std::string csv = ToCsv(result);
  std::ofstream(dir / (result.spec.id + ".csv")) << csv;
  std::ofstream(dir / (result.spec.id + ".svg")) << SvgFromCsv(csv);
  WriteJsonFile((dir / (result.spec.id + ".meta.json")).string(), Metadata(result));
}

}  // namespace inputsel
