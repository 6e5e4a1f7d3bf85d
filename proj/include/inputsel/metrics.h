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

#ifndef INPUTSEL_METRICS_H_
#define INPUTSEL_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "inputsel/select.h"
#include "inputsel/sysmodel.h"

namespace inputsel {

struct WeightedGraph {
  Graph base;
  // Keyed by the ordered arc; undirected graphs store both directions.
  std::map<std::pair<int, int>, double> weights;

  int n() const { return base.n; }
  double Weight(int i, int j) const;
  void SetWeight(int i, int j, double w);
  // L_ii = sum of incident weights, L_ij = -W_ij.
  Eigen::MatrixXd Laplacian() const;
};

// Weights uniform on (0, 1].
WeightedGraph RandomWeights(const Graph& g, uint64_t seed);
WeightedGraph UnitWeights(const Graph& g);

struct MetricConfig {
  double t = 1.0;
  double p = 2.0;
  double x_star = 0.0;
  uint64_t seed = 1;
  // Uniform on [0, 1] from seed when absent.
  std::optional<Eigen::VectorXd> x0;

  void Validate() const;
  Eigen::VectorXd InitialState(int n) const;
};

// Nodes in s are held at x_star; an empty s evolves freely.
Eigen::VectorXd SimulateConsensus(const WeightedGraph& g,
                                  const std::vector<int>& s,
                                  const Eigen::VectorXd& x0, double t,
                                  double x_star = 0.0);

// ||x(t) - x_star 1||_p.
double ConvergenceError(const WeightedGraph& g, const std::vector<int>& s,
                        const MetricConfig& cfg = {});
// sum_i |x_i(t) - x_star|^p.
double ConvergenceErrorPower(const WeightedGraph& g, const std::vector<int>& s,
                             const MetricConfig& cfg = {});

// tr(L_FF^-1) / (2 n). Throws UnboundedVariance.
double Coherence(const WeightedGraph& g, const std::vector<int>& s);

enum class MetricKind { kConvergence, kCoherence };

// f(S) = C - metric(S) summed over connected components, f(empty) = 0.
SubmodularObjective AsObjective(const WeightedGraph& g, MetricKind kind,
                                const MetricConfig& cfg = {});

}  // namespace inputsel

#endif  // INPUTSEL_METRICS_H_
