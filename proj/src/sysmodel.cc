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

#include "inputsel/sysmodel.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "inputsel/errors.h"

namespace inputsel {

Graph::Graph(int n_nodes, bool is_undirected)
    : n(n_nodes), undirected(is_undirected) {
  if (n_nodes < 0) throw std::invalid_argument("negative node count");
}

void Graph::AddEdge(int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (i == j) throw std::invalid_argument("self-loops are not allowed");
  edges.insert({i, j});
  if (undirected) edges.insert({j, i});
}

std::vector<std::pair<int, int>> Graph::UndirectedEdges() const {
  std::set<std::pair<int, int>> pairs;
  for (const auto& [i, j] : edges) pairs.insert({std::min(i, j), std::max(i, j)});
  return {pairs.begin(), pairs.end()};
}

std::vector<std::vector<int>> Graph::OutNeighbors() const {
  std::vector<std::vector<int>> out(n);
  for (const auto& [i, j] : edges) out[i].push_back(j);
  return out;
}

std::vector<std::vector<int>> Graph::InNeighbors() const {
  std::vector<std::vector<int>> in(n);
  for (const auto& [i, j] : edges) in[j].push_back(i);
  return in;
}

std::vector<int> Graph::Degrees() const {
  std::vector<int> deg(n, 0);
  if (undirected) {
    for (const auto& [i, j] : UndirectedEdges()) {
      ++deg[i];
      ++deg[j];
    }
  } else {
    for (const auto& [i, j] : edges) {
      ++deg[i];
      ++deg[j];
    }
  }
  return deg;
}

double Graph::MeanDegree() const {
  return n == 0 ? 0.0 : static_cast<double>(edges.size()) / n;
}

namespace {

std::vector<char> Reach(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<char> seen(adj.size(), 0);
  std::deque<int> queue = {start};
  seen[start] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool IsStronglyConnected(const Graph& g) {
  if (g.n <= 1) return true;
  const auto fwd = Reach(g.OutNeighbors(), 0);
  const auto bwd = Reach(g.InNeighbors(), 0);
  return std::all_of(fwd.begin(), fwd.end(), [](char c) { return c; }) &&
         std::all_of(bwd.begin(), bwd.end(), [](char c) { return c; });
}

std::vector<std::vector<int>> Components(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<int> comp(g.n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    const auto seen = Reach(adj, s);
    out.emplace_back();
    for (int v = 0; v < g.n; ++v) {
      if (seen[v]) {
        comp[v] = static_cast<int>(out.size()) - 1;
        out.back().push_back(v);
      }
    }
  }
  return out;
}

std::string KindName(SystemKind kind) {
  switch (kind) {
    case SystemKind::kConsensus:
      return "consensus";
    case SystemKind::kDoubleIntegrator:
      return "double_integrator";
    case SystemKind::kFree:
      return "free";
    case SystemKind::kCustom:
      return "custom";
  }
  return "custom";
}

SystemKind ParseKind(const std::string& name) {
  if (name == "consensus") return SystemKind::kConsensus;
  if (name == "double_integrator") return SystemKind::kDoubleIntegrator;
  if (name == "free") return SystemKind::kFree;
  if (name == "custom") return SystemKind::kCustom;
  throw std::invalid_argument("unknown system kind: " + name);
}

std::vector<int> DescriptorSystem::ToStates(const ElementSet& ground) const {
  std::vector<int> states;
  for (int g : ground) {
    if (g < 0 || g >= ground_size()) {
      throw std::out_of_range("ground element out of range");
    }
    states.push_back(eligible[g]);
  }
  std::sort(states.begin(), states.end());
  return states;
}

ElementSet DescriptorSystem::ToGround(const std::vector<int>& states) const {
  ElementSet ground;
  for (int s : states) {
    auto it = std::lower_bound(eligible.begin(), eligible.end(), s);
    if (it == eligible.end() || *it != s) {
      throw std::invalid_argument("state " + std::to_string(s) +
                                  " is not an eligible input");
    }
    ground.push_back(static_cast<int>(it - eligible.begin()));
  }
  return Normalize(ground);
}

bool IsSolvable(const DescriptorSystem& sys, const FieldConfig& cfg) {
  Rng draw(cfg.seed);
  const uint64_t p = cfg.prime;
  for (int t = 0; t < cfg.trials; ++t) {
    const DenseFieldMatrix f = Substitute(sys.F, p, draw);
    DenseFieldMatrix m = Substitute(sys.A, p, draw);
    const uint64_t z = DrawNonzero(p, draw);
    for (int i = 0; i < sys.n; ++i) {
      for (int j = 0; j < sys.n; ++j) {
        m.at(i, j) = SubMod(m.at(i, j), MulMod(z, f.at(i, j), p), p);
      }
    }
    if (RankGf(m) == sys.n) return true;
  }
  return false;
}

DescriptorSystem CustomSystem(StructuredMatrix f, StructuredMatrix a,
                              std::optional<std::vector<int>> eligible) {
  if (f.rows() != f.cols() || a.rows() != a.cols() || f.rows() != a.rows()) {
    throw std::invalid_argument("F and A must be square of equal size");
  }
  DescriptorSystem sys;
  sys.n = a.rows();
  sys.F = std::move(f);
  sys.A = std::move(a);
  sys.kind = SystemKind::kCustom;
  if (eligible) {
    std::vector<int> e = *eligible;
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (int s : e) {
      if (s < 0 || s >= sys.n) throw std::out_of_range("eligible state");
    }
    sys.eligible = e;
  } else {
    sys.eligible.resize(sys.n);
    std::iota(sys.eligible.begin(), sys.eligible.end(), 0);
  }
  if (!IsSolvable(sys)) {
    throw UnsolvableSystem("det(A - zF) vanishes identically");
  }
  return sys;
}

DescriptorSystem ConsensusSystem(const Graph& g) {
  if (!g.undirected) throw std::invalid_argument("consensus needs undirected");
  const auto edge_list = g.UndirectedEdges();
  if (edge_list.empty()) throw std::invalid_argument("graph has no edges");
  const int nodes = g.n;
  const int m = static_cast<int>(edge_list.size());
  DescriptorSystem sys;
  sys.n = nodes + m;
  sys.F = StructuredMatrix(sys.n, sys.n);
  sys.A = StructuredMatrix(sys.n, sys.n);
  for (int i = 0; i < nodes; ++i) sys.F.SetFixed(i, i, 1);
  for (int e = 0; e < m; ++e) {
    const auto [a, b] = edge_list[e];
    sys.A.SetFixed(nodes + e, a, 1);
    sys.A.SetFixed(nodes + e, b, -1);
    sys.A.SetFixed(a, nodes + e, 1);
    sys.A.SetFixed(b, nodes + e, -1);
    sys.A.AddFree(nodes + e, nodes + e);
  }
  sys.kind = SystemKind::kConsensus;
  sys.eligible.resize(nodes);
  std::iota(sys.eligible.begin(), sys.eligible.end(), 0);
  sys.graph = g;
  return sys;
}

DescriptorSystem DoubleIntegratorSystem(const Graph& g) {
  const int nodes = g.n;
  DescriptorSystem sys;
  sys.n = 2 * nodes;
  sys.F = StructuredMatrix(sys.n, sys.n);
  sys.A = StructuredMatrix(sys.n, sys.n);
  for (int i = 0; i < sys.n; ++i) sys.F.SetFixed(i, i, 1);
  for (int i = 0; i < nodes; ++i) sys.A.SetFixed(i, nodes + i, 1);
  for (const auto& [a, b] : g.edges) {
    sys.A.AddFree(nodes + b, a);
    sys.A.AddFree(nodes + b, nodes + a);
  }
  sys.kind = SystemKind::kDoubleIntegrator;
  for (int i = 0; i < nodes; ++i) sys.eligible.push_back(nodes + i);
  sys.graph = g;
  return sys;
}

DescriptorSystem FreeParameterSystem(const Graph& g) {
  DescriptorSystem sys;
  sys.n = g.n;
  sys.F = StructuredMatrix(sys.n, sys.n);
  sys.A = StructuredMatrix(sys.n, sys.n);
  for (int i = 0; i < sys.n; ++i) sys.F.SetFixed(i, i, 1);
  for (const auto& [a, b] : g.edges) sys.A.AddFree(b, a);
  sys.kind = SystemKind::kFree;
  sys.eligible.resize(sys.n);
  std::iota(sys.eligible.begin(), sys.eligible.end(), 0);
  sys.graph = g;
  return sys;
}

Graph StateGraph(const DescriptorSystem& sys) {
  Graph g(sys.n, false);
  auto add = [&](const Position& pos) {
    if (pos.first != pos.second) g.AddEdge(pos.second, pos.first);
  };
  for (const auto& [pos, v] : sys.A.fixed()) add(pos);
  for (const auto& pos : sys.A.free()) add(pos);
  for (const auto& [pos, v] : sys.F.fixed()) add(pos);
  for (const auto& pos : sys.F.free()) add(pos);
  return g;
}

AugmentedSystem AugmentWithInputs(const DescriptorSystem& sys,
                                  std::vector<int> states) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  AugmentedSystem aug;
  aug.base = sys;
  aug.B = StructuredMatrix(sys.n, sys.n);
  for (int s : states) {
    if (s < 0 || s >= sys.n) throw std::out_of_range("input state");
    aug.B.AddFree(s, s);
  }
  aug.inputs = std::move(states);
  return aug;
}

GeometricNetwork RandomGeometricNetwork(const GeometricConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("geometric network needs n >= 2");
  if (cfg.target_degree <= 0 || cfg.range_max <= 0) {
    throw std::invalid_argument("target degree and range must be positive");
  }
  Rng draw(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(cfg.n), y(cfg.n), range(cfg.n);
  for (int i = 0; i < cfg.n; ++i) {
    x[i] = unit(draw);
    y[i] = unit(draw);
    range[i] = cfg.range_max * unit(draw);
  }
  auto build = [&](double side) {
    Graph g(cfg.n, cfg.symmetrize == Symmetrization::kMutual);
    for (int i = 0; i < cfg.n; ++i) {
      for (int j = 0; j < cfg.n; ++j) {
        if (i == j) continue;
        const double d = side * std::hypot(x[i] - x[j], y[i] - y[j]);
        const bool arc = d <= range[j];
        if (cfg.symmetrize == Symmetrization::kMutual) {
          if (i < j && arc && d <= range[i]) g.AddEdge(i, j);
        } else if (arc) {
          g.AddEdge(i, j);
        }
      }
    }
    return g;
  };
  const double lo_ok = cfg.target_degree * (1.0 - cfg.tolerance);
  const double hi_ok = cfg.target_degree * (1.0 + cfg.tolerance);
  GeometricNetwork best;
  double best_gap = -1.0;
  auto consider = [&](double side, int iter) {
    GeometricNetwork net{build(side), side, 0.0, iter};
    net.achieved_degree = net.graph.MeanDegree();
    const double gap = std::abs(net.achieved_degree - cfg.target_degree);
    if (best_gap < 0 || gap < best_gap) {
      best = net;
      best_gap = gap;
    }
    return net;
  };
  // A target above the densest reachable graph saturates at side zero.
  GeometricNetwork dense = consider(0.0, 0);
  if (dense.achieved_degree <= hi_ok) return dense;
  double lo = 0.0;
  double hi = 2.0 * cfg.range_max;
  while (consider(hi, 0).achieved_degree > cfg.target_degree) hi *= 2.0;
  for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
    const double mid = 0.5 * (lo + hi);
    GeometricNetwork net = consider(mid, iter);
    if (net.achieved_degree >= lo_ok && net.achieved_degree <= hi_ok) {
      return net;
    }
    if (net.achieved_degree > cfg.target_degree) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw GenerationError("no side length reaches the target degree; closest " +
                            std::to_string(best.achieved_degree),
                        best.achieved_degree);
}

}  // namespace inputsel
