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

#include <gtest/gtest.h>

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "inputsel/errors.h"
#include "test_util.h"

namespace inputsel {
namespace {

using testing::AllSubsets;

WeightedGraph TwoNode(double w) {
  Graph g(2, true);
  g.AddEdge(0, 1);
  WeightedGraph wg = UnitWeights(g);
  wg.SetWeight(0, 1, w);
  return wg;
}

TEST(WeightsTest, RandomWeightsAreSymmetricAndInRange) {
  const Graph g = testing::RandomGraph(8, 0.4, true, 3);
  const WeightedGraph wg = RandomWeights(g, 7);
  for (const auto& [a, b] : g.UndirectedEdges()) {
    EXPECT_GT(wg.Weight(a, b), 0.0);
    EXPECT_LE(wg.Weight(a, b), 1.0);
    EXPECT_EQ(wg.Weight(a, b), wg.Weight(b, a));
  }
  const Eigen::MatrixXd l = wg.Laplacian();
  EXPECT_NEAR((l * Eigen::VectorXd::Ones(8)).norm(), 0.0, 1e-12);
  EXPECT_NEAR((l - l.transpose()).norm(), 0.0, 1e-15);
  EXPECT_EQ(RandomWeights(g, 7).weights, wg.weights);
}

TEST(SimulateTest, TwoNodeClosedForm) {
  for (double w : {0.3, 1.0, 2.5}) {
    for (double t : {0.1, 1.0, 4.0}) {
      const WeightedGraph g = TwoNode(w);
      Eigen::VectorXd x0(2);
      x0 << 0.7, -1.3;
      const double x_star = 0.25;
      const Eigen::VectorXd x = SimulateConsensus(g, {0}, x0, t, x_star);
      EXPECT_NEAR(x(0), x_star, 1e-12);
      EXPECT_NEAR(x(1), x_star + std::exp(-w * t) * (x0(1) - x_star), 1e-10);
      MetricConfig cfg;
      cfg.t = t;
      cfg.x_star = x_star;
      cfg.x0 = x0;
      EXPECT_NEAR(ConvergenceError(g, {0}, cfg), std::abs(std::exp(-w * t) * (x0(1) - x_star)),
                  1e-10);
      EXPECT_NEAR(ConvergenceErrorPower(g, {0}, cfg),
                  std::pow(std::exp(-w * t) * (x0(1) - x_star), 2), 1e-10);
    }
  }
}

TEST(SimulateTest, EquilibriumAndLongRun) {
  const WeightedGraph g = RandomWeights(testing::RandomGraph(7, 0.5, true, 1, true), 2);
  const Eigen::VectorXd fixed = Eigen::VectorXd::Constant(7, 0.4);
  EXPECT_NEAR((SimulateConsensus(g, {2}, fixed, 3.0, 0.4) - fixed).norm(), 0.0, 1e-12);
  Graph path(5, true);
  for (int i = 0; i + 1 < 5; ++i) path.AddEdge(i, i + 1);
  const Eigen::VectorXd x = SimulateConsensus(UnitWeights(path), {0},
                                              Eigen::VectorXd::LinSpaced(5, 0, 1), 200.0, -1.0);
  EXPECT_NEAR((x - Eigen::VectorXd::Constant(5, -1.0)).lpNorm<Eigen::Infinity>(), 0.0, 1e-6);
}

TEST(ConvergenceTest, AllInputsGiveZeroAndEmptySetEvolvesFreely) {
  const Graph base = testing::RandomGraph(6, 0.5, true, 4, true);
  const WeightedGraph g = RandomWeights(base, 5);
  MetricConfig cfg;
  cfg.seed = 9;
  std::vector<int> all(6);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_NEAR(ConvergenceError(g, all, cfg), 0.0, 1e-12);
  EXPECT_NEAR(Coherence(g, all), 0.0, 1e-12);
  const Eigen::VectorXd x0 = cfg.InitialState(6);
  const Eigen::MatrixXd l = g.Laplacian();
  const Eigen::MatrixXd step = (-l * cfg.t).eval();
  const Eigen::VectorXd free = step.exp() * x0;
  EXPECT_NEAR(ConvergenceError(g, {}, cfg), free.norm(), 1e-10);
  MetricConfig p3 = cfg;
  p3.p = 3;
  EXPECT_NEAR(ConvergenceError(g, {}, p3), free.lpNorm<3>(), 1e-10);
  EXPECT_NEAR(ConvergenceErrorPower(g, {}, p3), std::pow(free.lpNorm<3>(), 3), 1e-10);
}

TEST(ConfigTest, Validation) {
  MetricConfig cfg;
  cfg.t = 0;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  cfg.t = 1;
  cfg.p = 0.5;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  cfg.p = 1;
  EXPECT_NO_THROW(cfg.Validate());
  const Eigen::VectorXd x0 = cfg.InitialState(10);
  EXPECT_GE(x0.minCoeff(), 0.0);
  EXPECT_LE(x0.maxCoeff(), 1.0);
  EXPECT_EQ(x0, cfg.InitialState(10));
}

TEST(CoherenceTest, SingleFollowerAndUnbounded) {
  for (double w : {0.5, 2.0}) EXPECT_NEAR(Coherence(TwoNode(w), {0}), 1.0 / (4 * w), 1e-12);
  Graph split(3, true);
  split.AddEdge(0, 1);
  EXPECT_THROW(Coherence(UnitWeights(split), {0}), UnboundedVariance);
  EXPECT_NO_THROW(Coherence(UnitWeights(split), {0, 2}));
}

// 1000 random (G, S, v) triples per metric.
TEST(MonotonicityTest, MetricsNonincreasing) {
  Rng rng(12);
  for (int t = 0; t < 1000; ++t) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const WeightedGraph g = RandomWeights(testing::RandomGraph(n, 0.4, true, rng()), rng());
    const bool connected = Components(g.base).size() == 1;
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (rng() % 3 == 0) s.push_back(v);
    if (s.empty()) s.push_back(static_cast<int>(rng() % n));
    const int v = static_cast<int>(rng() % n);
    std::vector<int> sv = WithElement(s, v);
    MetricConfig cfg;
    cfg.seed = rng();
    cfg.t = 0.5 + (rng() % 4);
    EXPECT_LE(ConvergenceError(g, sv, cfg), ConvergenceError(g, s, cfg) + 1e-12);
    if (connected) EXPECT_LE(Coherence(g, sv), Coherence(g, s) + 1e-12);
  }
}

void ExpectSubmodular(const SubmodularObjective& f) {
  const int n = f.ground_size;
  std::map<ElementSet, double> value;
  for (const auto& s : AllSubsets(n)) value[s] = f.evaluate(s);
  for (const auto& [s, v] : value) {
    for (int e = 0; e < n; ++e) {
      if (Contains(s, e)) continue;
      const double gain = value[WithElement(s, e)] - v;
      EXPECT_GE(gain, -1e-10);
      for (int x = 0; x < n; ++x) {
        if (x == e || Contains(s, x)) continue;
        const ElementSet bigger = WithElement(s, x);
        EXPECT_GE(gain + 1e-10, value[WithElement(bigger, e)] - value[bigger]);
      }
    }
  }
}

TEST(ObjectiveTest, NormalizationAndSubmodularity) {
  Rng rng(21);
  for (int t = 0; t < 12; ++t) {
    const int n = 3 + t % 4;
    const Graph base = testing::RandomGraph(n, 0.45, true, rng());
    const WeightedGraph g = RandomWeights(base, rng());
    MetricConfig cfg;
    cfg.seed = rng();
    for (MetricKind kind : {MetricKind::kConvergence, MetricKind::kCoherence}) {
      const SubmodularObjective f = AsObjective(g, kind, cfg);
      EXPECT_EQ(f.ground_size, n);
      EXPECT_EQ(f.components.size(), Components(base).size());
      EXPECT_DOUBLE_EQ(f.evaluate({}), 0.0);
      ExpectSubmodular(f);
    }
    if (Components(base).size() == 1) {
      const SubmodularObjective f = AsObjective(g, MetricKind::kConvergence, cfg);
      EXPECT_NEAR(f.evaluate(FullSet(n)), ConvergenceErrorPower(g, {}, cfg), 1e-12);
    }
  }
}

}  // namespace
}  // namespace inputsel
