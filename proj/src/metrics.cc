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

#include "inputsel/metrics.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "inputsel/errors.h"
#include "inputsel/structmat.h"

namespace inputsel {
namespace {

std::vector<int> Followers(int n, const std::vector<int>& s) {
  std::vector<char> pinned(n, 0);
  for (int v : s) {
    if (v < 0 || v >= n) throw std::out_of_range("input node out of range");
    pinned[v] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (!pinned[v]) out.push_back(v);
  return out;
}

Eigen::MatrixXd Block(const Eigen::MatrixXd& m, const std::vector<int>& idx) {
  const int k = static_cast<int>(idx.size());
  Eigen::MatrixXd out(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) out(a, b) = m(idx[a], idx[b]);
  return out;
}

WeightedGraph Restrict(const WeightedGraph& g, const std::vector<int>& nodes) {
  std::vector<int> local(g.n(), -1);
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) local[nodes[i]] = i;
  WeightedGraph out;
  out.base = Graph(static_cast<int>(nodes.size()), g.base.undirected);
  for (const auto& [arc, w] : g.weights) {
    const int a = local[arc.first], b = local[arc.second];
    if (a < 0 || b < 0) continue;
    out.base.edges.insert({a, b});
    out.weights[{a, b}] = w;
  }
  return out;
}

}  // namespace

double WeightedGraph::Weight(int i, int j) const {
  auto it = weights.find({i, j});
  return it == weights.end() ? 0.0 : it->second;
}

void WeightedGraph::SetWeight(int i, int j, double w) {
  if (!(w > 0)) throw std::invalid_argument("edge weights must be positive");
  if (!base.edges.count({i, j})) throw std::invalid_argument("no such edge");
  weights[{i, j}] = w;
  if (base.undirected) weights[{j, i}] = w;
}

Eigen::MatrixXd WeightedGraph::Laplacian() const {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n(), n());
  for (const auto& [i, j] : base.edges) {
    const double w = Weight(i, j);
    l(i, i) += w;
    l(i, j) -= w;
  }
  return l;
}

WeightedGraph RandomWeights(const Graph& g, uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  WeightedGraph out;
  out.base = g;
  if (g.undirected) {
    for (const auto& [i, j] : g.UndirectedEdges()) out.SetWeight(i, j, 1.0 - unit(rng));
  } else {
    for (const auto& [i, j] : g.edges) out.SetWeight(i, j, 1.0 - unit(rng));
  }
  return out;
}

WeightedGraph UnitWeights(const Graph& g) {
  WeightedGraph out;
  out.base = g;
  for (const auto& arc : g.edges) out.weights[arc] = 1.0;
  return out;
}

void MetricConfig::Validate() const {
  if (!(t > 0)) throw std::invalid_argument("t must be positive");
  if (!(p >= 1) || std::isinf(p)) throw std::invalid_argument("p must lie in [1, inf)");
}

Eigen::VectorXd MetricConfig::InitialState(int n) const {
  if (x0) {
    if (x0->size() != n) throw std::invalid_argument("x0 has the wrong size");
    return *x0;
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = unit(rng);
  return x;
}

Eigen::VectorXd SimulateConsensus(const WeightedGraph& g,
                                  const std::vector<int>& s,
                                  const Eigen::VectorXd& x0, double t,
                                  double x_star) {
  const int n = g.n();
  if (x0.size() != n) throw std::invalid_argument("x0 has the wrong size");
  const Eigen::MatrixXd l = g.Laplacian();
  if (s.empty()) return (-t * l).exp() * x0;
  const std::vector<int> f = Followers(n, s);
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, x_star);
  if (f.empty()) return x;
  Eigen::VectorXd dev(f.size());
  for (size_t a = 0; a < f.size(); ++a) dev(a) = x0(f[a]) - x_star;
  const Eigen::VectorXd evolved = (-t * Block(l, f)).exp() * dev;
  for (size_t a = 0; a < f.size(); ++a) x(f[a]) = x_star + evolved(a);
  return x;
}

double ConvergenceErrorPower(const WeightedGraph& g, const std::vector<int>& s,
                             const MetricConfig& cfg) {
  cfg.Validate();
  const Eigen::VectorXd x =
      SimulateConsensus(g, s, cfg.InitialState(g.n()), cfg.t, cfg.x_star);
  double total = 0;
  for (int i = 0; i < x.size(); ++i) total += std::pow(std::abs(x(i) - cfg.x_star), cfg.p);
  return total;
}

double ConvergenceError(const WeightedGraph& g, const std::vector<int>& s,
                        const MetricConfig& cfg) {
  return std::pow(ConvergenceErrorPower(g, s, cfg), 1.0 / cfg.p);
}

double Coherence(const WeightedGraph& g, const std::vector<int>& s) {
  const int n = g.n();
  const std::vector<int> f = Followers(n, s);
  if (f.empty()) return 0.0;
  const Eigen::MatrixXd lff = Block(g.Laplacian(), f);
  Eigen::LDLT<Eigen::MatrixXd> ldlt(lff);
  const Eigen::VectorXd d = ldlt.vectorD();
  const double scale = std::max(1.0, lff.cwiseAbs().maxCoeff());
  if (ldlt.info() != Eigen::Success || d.minCoeff() <= 1e-12 * scale)
    throw UnboundedVariance("followers disconnected from every input");
  const Eigen::MatrixXd inv =
      ldlt.solve(Eigen::MatrixXd::Identity(lff.rows(), lff.cols()));
  return inv.trace() / (2.0 * n);
}

SubmodularObjective AsObjective(const WeightedGraph& g, MetricKind kind,
                                const MetricConfig& cfg) {
  cfg.Validate();
  const std::vector<std::vector<int>> comps = Components(g.base);
  const Eigen::VectorXd x0 = cfg.InitialState(g.n());
  struct Part {
    std::vector<int> nodes;
    WeightedGraph graph;
    std::vector<int> local;
    double c = 0;
  };
  std::vector<Part> parts;
  std::vector<int> local(g.n(), -1);
  for (const auto& comp : comps) {
    Part part;
    part.nodes = comp;
    part.graph = Restrict(g, comp);
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) local[comp[i]] = i;
    parts.push_back(std::move(part));
  }
  const double total_n = g.n();
  auto metric = [kind, cfg, x0, total_n](const Part& part,
                                         const std::vector<int>& s) {
    if (kind == MetricKind::kCoherence) {
      // Rescale so the normalization matches the whole network.
      return Coherence(part.graph, s) * part.nodes.size() / total_n;
    }
    MetricConfig local_cfg = cfg;
    Eigen::VectorXd x(part.nodes.size());
    for (size_t i = 0; i < part.nodes.size(); ++i) x(i) = x0(part.nodes[i]);
    local_cfg.x0 = x;
    return ConvergenceErrorPower(part.graph, s, local_cfg);
  };
  for (Part& part : parts) {
    if (kind == MetricKind::kCoherence) {
      double worst = 0;
      for (int v = 0; v < static_cast<int>(part.nodes.size()); ++v)
        worst = std::max(worst, metric(part, {v}));
      part.c = 2.0 * worst;
    } else {
      part.c = metric(part, {});
    }
  }
  SubmodularObjective f;
  f.ground_size = g.n();
  f.monotone = true;
  f.name = kind == MetricKind::kCoherence ? "coherence" : "convergence";
  for (const Part& part : parts) f.components.push_back(part.nodes);
  f.evaluate = [parts, local, metric](const ElementSet& s) {
    std::vector<std::vector<int>> split(parts.size());
    std::vector<int> owner(local.size(), -1);
    for (size_t c = 0; c < parts.size(); ++c)
      for (int v : parts[c].nodes) owner[v] = static_cast<int>(c);
    for (int v : s) split[owner[v]].push_back(local[v]);
    double total = 0;
    for (size_t c = 0; c < parts.size(); ++c) {
      if (split[c].empty()) continue;
      total += parts[c].c - metric(parts[c], split[c]);
    }
    return total;
  };
  return f;
}

}  // namespace inputsel
