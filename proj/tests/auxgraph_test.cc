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

#include "inputsel/auxgraph.h"

#include <gtest/gtest.h>

#include "inputsel/errors.h"
#include "test_util.h"

namespace inputsel {
namespace {

using Arcs = std::set<std::pair<int, int>>;
using Adj = std::vector<std::vector<int>>;

std::vector<std::vector<char>> Closure(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int s = 0; s < n; ++s) {
    std::vector<int> stack = {s};
    reach[s][s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!reach[s][w]) {
          reach[s][w] = 1;
          stack.push_back(w);
        }
    }
  }
  return reach;
}

// Nodes reachable from s along the arcs of g.
std::vector<char> ReachedFrom(const Graph& g, const std::vector<int>& s) {
  const auto out = g.OutNeighbors();
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack = s;
  for (int v : s) seen[v] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : out[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return seen;
}

TEST(OmegaTest, FreeParameterLayout) {
  const DescriptorSystem sys = FreeParameterSystem(testing::Chain(3));
  const OmegaMatrix omega = BuildOmega(AugmentWithInputs(sys, {1}));
  EXPECT_EQ(omega.entries.rows(), 7);
  EXPECT_EQ(omega.entries.cols(), 4);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(omega.entries.FixedAt(i, i), Rational(-1));
    EXPECT_EQ(omega.entries.FixedAt(3 + i, i), Rational(1));
  }
  EXPECT_EQ(omega.entries.FixedAt(6, 3), Rational(1));
  EXPECT_EQ(omega.entries.fixed().size(), 7u);
  EXPECT_EQ(omega.entries.free(), (std::set<Position>{{1, 0}, {2, 1}}));
}

TEST(OmegaTest, DoubleIntegratorSingleNode) {
  const OmegaMatrix omega =
      BuildOmega(AugmentWithInputs(DoubleIntegratorSystem(Graph(1, false)), {}));
  EXPECT_EQ(omega.entries.FixedAt(0, 0), Rational(-1));
  EXPECT_EQ(omega.entries.FixedAt(0, 1), Rational(1));
  EXPECT_EQ(omega.entries.FixedAt(1, 0), Rational(0));
  EXPECT_EQ(omega.entries.FixedAt(1, 1), Rational(-1));
}

// Rows w, x; columns follow J (w rows of nodes, then x rows of edges).
TEST(CompletionTest, ConsensusClosedForm) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = testing::RandomGraph(5, 0.5, true, seed);
    const DescriptorSystem sys = ConsensusSystem(g);
    const int nodes = g.n, n = sys.n, m = n - nodes;
    const OmegaMatrix omega = BuildOmega(AugmentWithInputs(sys, {}));
    const auto known = KnownMatching(sys);
    ASSERT_TRUE(known);
    EXPECT_TRUE(IsValidMatching(omega, sys, known->partner));
    const Completion c = CompleteAndInvert(omega, known->J);
    ASSERT_TRUE(c.exact);
    // K[i][e] = A[i][nodes + e]; K_I = K^T.
    auto k = [&](int i, int e) { return sys.A.FixedAt(i, nodes + e); };
    StructuredMatrix expected(2 * n, n);
    for (int i = 0; i < nodes; ++i) expected.SetFixed(i, i, Rational(1));
    for (int e = 0; e < m; ++e) {
      for (int i = 0; i < nodes; ++i) expected.SetFixed(nodes + e, i, -k(i, e));
      for (int f = 0; f < m; ++f) {
        Rational v(0);
        for (int i = 0; i < nodes; ++i) v += k(i, e) * k(i, f);
        expected.SetFixed(nodes + e, nodes + f, v);
      }
    }
    for (int i = 0; i < nodes; ++i) {
      expected.SetFixed(n + i, i, Rational(-1));
      for (int e = 0; e < m; ++e) expected.SetFixed(n + i, nodes + e, k(i, e));
    }
    for (int e = 0; e < m; ++e) expected.SetFixed(n + nodes + e, nodes + e, Rational(1));
    EXPECT_EQ(c.omega_tilde, expected);
  }
}

TEST(CompletionTest, DoubleIntegratorClosedForm) {
  const Graph g = testing::RandomGraph(4, 0.5, false, 3);
  const DescriptorSystem sys = DoubleIntegratorSystem(g);
  const int nn = g.n, n = sys.n;
  const OmegaMatrix omega = BuildOmega(AugmentWithInputs(sys, {}));
  const MatchingResult match = FindIndependentMatching(omega, sys);
  EXPECT_EQ(match.partner, std::vector<int>(n, -1));
  const Completion c = CompleteAndInvert(omega, match.J);
  ASSERT_TRUE(c.exact);
  StructuredMatrix expected(2 * n, n);
  for (int i = 0; i < n; ++i) expected.SetFixed(i, i, Rational(1));
  for (int i = 0; i < nn; ++i) {
    expected.SetFixed(n + i, i, Rational(-1));
    expected.SetFixed(n + i, nn + i, Rational(-1));
    expected.SetFixed(n + nn + i, nn + i, Rational(-1));
  }
  EXPECT_EQ(c.omega_tilde, expected);
}

TEST(CompletionTest, FreeParameterClosedFormWithInputs) {
  const DescriptorSystem sys = FreeParameterSystem(testing::RandomGraph(5, 0.4, false, 8));
  const int n = sys.n;
  const OmegaMatrix omega = BuildOmega(AugmentWithInputs(sys, {0, 3}));
  const MatchingResult match = FindIndependentMatching(omega, sys);
  const Completion c = CompleteAndInvert(omega, match.J);
  ASSERT_TRUE(c.exact);
  EXPECT_EQ(c.J1, (std::vector<int>{2 * n, 2 * n + 1}));
  StructuredMatrix expected(2 * n + 2, n + 2);
  for (int i = 0; i < n; ++i) {
    expected.SetFixed(i, i, Rational(1));
    expected.SetFixed(n + i, i, Rational(-1));
  }
  expected.SetFixed(2 * n, n, Rational(1));
  expected.SetFixed(2 * n + 1, n + 1, Rational(1));
  EXPECT_EQ(c.omega_tilde, expected);
}

TEST(MatchingTest, RecoversIndependentMatchingOnCustomSystems) {
  Rng rng(21);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    StructuredMatrix f(n, n), a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int r = static_cast<int>(rng() % 6);
        if (r == 0) a.AddFree(i, j);
        if (r == 1) a.SetFixed(i, j, Rational(static_cast<long long>(rng() % 3) + 1));
        if (r == 2 && i == j) f.SetFixed(i, i, Rational(1));
      }
    DescriptorSystem sys;
    try {
      sys = CustomSystem(f, a);
    } catch (const UnsolvableSystem&) {
      continue;
    }
    const OmegaMatrix omega = BuildOmega(AugmentWithInputs(sys, {}));
    const MatchingResult match = FindIndependentMatching(omega, sys);
    EXPECT_TRUE(IsValidMatching(omega, sys, match.partner));
    const Completion c = CompleteAndInvert(omega, match.J);
    // Omega tilde restricted to J is the identity.
    DenseFieldMatrix sub =
        Substitute(c.omega_tilde, FieldConfig{}, rng).SelectRows(c.columns);
    EXPECT_EQ(sub, DenseFieldMatrix::Identity(n, kDefaultPrime));
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(BaseGraphTest, FreeParameterArcs) {
  const Graph g = testing::RandomGraph(5, 0.4, false, 12);
  const DescriptorSystem sys = FreeParameterSystem(g);
  const AuxGraph aux = BuildBaseGraph(sys);
  Arcs expected;
  for (int i = 0; i < g.n; ++i) {
    expected.insert({aux.WQ(i), aux.WT(i)});
    expected.insert({aux.XT(i), aux.XQ(i)});
    expected.insert({aux.XQ(i), aux.WQ(i)});
  }
  for (const auto& [r, c] : sys.A.free()) expected.insert({aux.WT(r), aux.XT(c)});
  EXPECT_EQ(aux.arcs, expected);
}

TEST(BaseGraphTest, DoubleIntegratorArcs) {
  const Graph g = testing::RandomGraph(4, 0.5, false, 5);
  const DescriptorSystem sys = DoubleIntegratorSystem(g);
  const AuxGraph aux = BuildBaseGraph(sys);
  const int nn = g.n;
  Arcs expected;
  for (int s = 0; s < sys.n; ++s) {
    expected.insert({aux.WQ(s), aux.WT(s)});
    expected.insert({aux.XT(s), aux.XQ(s)});
  }
  for (const auto& [a, b] : g.edges) {
    expected.insert({aux.WT(nn + b), aux.XT(a)});
    expected.insert({aux.WT(nn + b), aux.XT(nn + a)});
  }
  for (int i = 0; i < nn; ++i) {
    expected.insert({aux.XQ(i), aux.WQ(i)});
    expected.insert({aux.XQ(i), aux.WQ(nn + i)});
    expected.insert({aux.XQ(nn + i), aux.WQ(nn + i)});
  }
  EXPECT_EQ(aux.arcs, expected);
}

TEST(BaseGraphTest, ConsensusArcs) {
  const Graph g = testing::RandomGraph(5, 0.5, true, 6);
  const DescriptorSystem sys = ConsensusSystem(g);
  const AuxGraph aux = BuildBaseGraph(sys);
  const int nodes = g.n;
  const auto edges = g.UndirectedEdges();
  const int m = static_cast<int>(edges.size());
  auto incident = [&](int e, int i) { return edges[e].first == i || edges[e].second == i; };
  Arcs expected;
  for (int e = 0; e < m; ++e) {
    const int s = nodes + e;
    for (int i = 0; i < nodes; ++i) {
      if (!incident(e, i)) continue;
      expected.insert({aux.WQ(s), aux.WQ(i)});
      expected.insert({aux.XQ(i), aux.XQ(s)});
    }
    for (int f = 0; f < m; ++f) {
      const bool share = incident(f, edges[e].first) || incident(f, edges[e].second);
      if (share) expected.insert({aux.WQ(s), aux.XQ(nodes + f)});
    }
    expected.insert({aux.XQ(s), aux.XT(s)});
    expected.insert({aux.WT(s), aux.WQ(s)});
    expected.insert({aux.XT(s), aux.WT(s)});
  }
  for (int i = 0; i < nodes; ++i) {
    expected.insert({aux.WQ(i), aux.WT(i)});
    expected.insert({aux.XT(i), aux.XQ(i)});
    expected.insert({aux.XQ(i), aux.WQ(i)});
  }
  EXPECT_EQ(aux.arcs, expected);
  // Node vertices lie on no cycle.
  const auto on_cycle = CycleVertices(aux.Adjacency());
  for (int i = 0; i < nodes; ++i) {
    EXPECT_FALSE(on_cycle[aux.XT(i)]);
    EXPECT_FALSE(on_cycle[aux.WT(i)]);
    EXPECT_FALSE(on_cycle[aux.WQ(i)]);
  }
}

TEST(InputEdgesTest, AddsTwoArcsPerInput) {
  const DescriptorSystem sys = FreeParameterSystem(testing::Chain(4));
  const AuxGraph base = BuildBaseGraph(sys);
  EXPECT_EQ(AddInputEdges(base, {}).arcs, base.arcs);
  const AuxGraph one = AddInputEdges(base, {2});
  EXPECT_EQ(one.arcs.size(), base.arcs.size() + 2);
  EXPECT_TRUE(one.arcs.count({one.WT(2), one.UT(0)}));
  EXPECT_TRUE(one.arcs.count({one.UT(0), one.UQ(0)}));
  EXPECT_EQ(one.s_minus, (std::vector<int>{one.UQ(0)}));
  EXPECT_EQ(AddInputEdges(base, {0, 1, 3}).arcs.size(), base.arcs.size() + 6);
  EXPECT_EQ(one.Name(one.UT(0)), "u2^T");
  EXPECT_EQ(one.Name(one.XQ(1)), "x1^Q");
}

TEST(CondenseTest, SmallCases) {
  // Two disjoint cycles.
  const Condensation two = Condense(Adj{{1}, {0}, {3}, {2}});
  EXPECT_EQ(two.members.size(), 2u);
  EXPECT_EQ(two.source_classes.size(), 2u);
  const Condensation chain = Condense(Adj{{1}, {2}, {}});
  EXPECT_EQ(chain.members.size(), 3u);
  ASSERT_EQ(chain.source_classes.size(), 1u);
  EXPECT_EQ(chain.class_of[0], chain.source_classes[0]);
  EXPECT_EQ(chain.sink_classes, (std::vector<int>{chain.class_of[2]}));
  EXPECT_EQ(CycleVertices(Adj{{0}, {}}), (std::vector<char>{1, 0}));
}

TEST(CondenseTest, MatchesMutualReachability) {
  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && rng() % 5 == 0) adj[i].push_back(j);
    const auto reach = Closure(adj);
    const Condensation c = Condense(adj);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        EXPECT_EQ(c.class_of[i] == c.class_of[j], reach[i][j] && reach[j][i]);
    for (const auto& [a, b] : c.dag_arcs) {
      EXPECT_NE(a, b);
      // Arcs point to smaller ids.
      EXPECT_GT(a, b);
    }
    std::vector<int> indeg(c.members.size(), 0);
    for (const auto& [a, b] : c.dag_arcs) ++indeg[b];
    for (size_t k = 0; k < c.members.size(); ++k)
      EXPECT_EQ(indeg[k] == 0, std::count(c.source_classes.begin(), c.source_classes.end(),
                                          static_cast<int>(k)) == 1);
    const std::vector<int> targets = {static_cast<int>(rng() % n)};
    const auto hits = ReachesSet(adj, targets);
    for (int v = 0; v < n; ++v) EXPECT_EQ(hits[v] != 0, reach[v][targets[0]] != 0);
  }
}

// Exhaustive S on graphs with n <= 6 and no isolated nodes.
TEST(ConnectivityEquivalenceTest, Consensus) {
  for (uint64_t seed = 0; seed < 12; ++seed) {
    const Graph g = testing::RandomGraph(3 + seed % 4, 0.35, true, seed, true);
    const DescriptorSystem sys = ConsensusSystem(g);
    const AuxGraph base = BuildBaseGraph(sys);
    const auto comps = Components(g);
    for (const auto& s : testing::AllSubsets(g.n)) {
      bool expected = true;
      for (const auto& comp : comps) {
        bool hit = false;
        for (int v : comp) hit = hit || Contains(s, v);
        expected = expected && hit;
      }
      const auto states = sys.ToStates(s);
      EXPECT_EQ(ReachabilitySatisfied(AddInputEdges(base, states), states), expected)
          << "seed " << seed;
    }
  }
}

// Node i is input-connected in G' when the w^T vertex of its state reaches
// an input vertex; this matches reachability from S in G.
void CheckNodeEquivalence(const Graph& g, const DescriptorSystem& sys, uint64_t seed) {
  const AuxGraph base = BuildBaseGraph(sys);
  const bool strong = IsStronglyConnected(g);
  for (const auto& s : testing::AllSubsets(g.n)) {
    const auto reached = ReachedFrom(g, s);
    const auto states = sys.ToStates(s);
    const AuxGraph g_hat = AddInputEdges(base, states);
    std::vector<int> targets;
    for (int k = 0; k < static_cast<int>(states.size()); ++k)
      targets.push_back(g_hat.UQ(k));
    const auto hits = ReachesSet(g_hat.Adjacency(), targets);
    for (int i = 0; i < g.n; ++i)
      EXPECT_EQ(hits[g_hat.WT(sys.ToStates({i})[0])] != 0, reached[i] != 0)
          << "seed " << seed << " node " << i;
    const bool all = std::count(reached.begin(), reached.end(), 0) == 0;
    if (all) EXPECT_TRUE(ReachabilitySatisfied(g_hat, states));
    if (strong) EXPECT_EQ(ReachabilitySatisfied(g_hat, states), all) << "seed " << seed;
  }
}

TEST(ConnectivityEquivalenceTest, DoubleIntegrator) {
  int strong = 0;
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = testing::RandomGraph(2 + seed % 5, 0.45, false, seed, true);
    strong += IsStronglyConnected(g);
    CheckNodeEquivalence(g, DoubleIntegratorSystem(g), seed);
  }
  CheckNodeEquivalence(testing::Cycle(5, false), DoubleIntegratorSystem(testing::Cycle(5, false)), 99);
  EXPECT_GT(strong, 0);
}

TEST(ConnectivityEquivalenceTest, FreeParameter) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = testing::RandomGraph(2 + seed % 5, 0.45, false, seed, true);
    CheckNodeEquivalence(g, FreeParameterSystem(g), seed);
  }
  CheckNodeEquivalence(testing::Cycle(6, false), FreeParameterSystem(testing::Cycle(6, false)), 99);
}

TEST(ReachabilityTest, MonotoneInInputs) {
  const Graph g = testing::RandomGraph(5, 0.3, false, 31);
  const DescriptorSystem sys = FreeParameterSystem(g);
  const AuxGraph base = BuildBaseGraph(sys);
  for (const auto& s : testing::AllSubsets(5)) {
    if (!ReachabilitySatisfied(AddInputEdges(base, s), s)) continue;
    for (int v = 0; v < 5; ++v) {
      const ElementSet t = WithElement(s, v);
      EXPECT_TRUE(ReachabilitySatisfied(AddInputEdges(base, t), t));
    }
  }
}

TEST(GammaTest, CaseTable) {
  const DescriptorSystem sys = ConsensusSystem([] {
    Graph g(2, true);
    g.AddEdge(0, 1);
    return g;
  }());
  const AuxGraph aux = BuildBaseGraph(sys);
  const GammaAssignment gamma = GammaCoefficients(aux);
  const int n = sys.n;
  auto at = [&](int a, int b) {
    auto it = gamma.find({std::min(a, b), std::max(a, b)});
    return it == gamma.end() ? FormalSum() : it->second;
  };
  // Unmatched w pair (node 0): -r_0.
  EXPECT_EQ(at(aux.WT(0), aux.WQ(0)).coeffs, (std::map<int, long long>{{0, -1}}));
  // Matched w pair (edge state 2): +r_2.
  EXPECT_EQ(at(aux.WT(2), aux.WQ(2)).coeffs, (std::map<int, long long>{{2, 1}}));
  // x pair in J: -c_2; outside J: +c_0.
  EXPECT_EQ(at(aux.XT(2), aux.XQ(2)).coeffs, (std::map<int, long long>{{n + 2, -1}}));
  EXPECT_EQ(at(aux.XT(0), aux.XQ(0)).coeffs, (std::map<int, long long>{{n + 0, 1}}));
  // Matched T arc: -unit.
  EXPECT_EQ(at(aux.XT(2), aux.WT(2)).coeffs, (std::map<int, long long>{{2 * n, -1}}));
  // Omega tilde arcs carry nothing.
  EXPECT_TRUE(at(aux.XQ(0), aux.WQ(0)).IsZero());
}

TEST(CycleCheckTest, ConsensusWithControllingInputsPasses) {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = testing::RandomGraph(5, 0.5, true, seed, true);
    const DescriptorSystem sys = ConsensusSystem(g);
    std::vector<int> s;
    for (const auto& comp : Components(g)) s.push_back(comp.front());
    std::sort(s.begin(), s.end());
    const AuxGraph g_hat = AddInputEdges(BuildBaseGraph(sys), s);
    const CycleCheck check = CycleSumCheck(g_hat, GammaCoefficients(g_hat));
    EXPECT_TRUE(check.passed);
    EXPECT_EQ(check.cycles, 0);
  }
}

TEST(CycleCheckTest, HandBuiltCases) {
  // 0 -> 1 -> 2 -> 0 with a single unit coefficient.
  const std::vector<std::vector<int>> tri = {{1}, {2}, {0}};
  GammaAssignment unit;
  unit[{0, 1}] = Unit(1, 1);
  const CycleCheck bad = CycleSumCheck(tri, unit, std::vector<int>{});
  EXPECT_FALSE(bad.passed);
  EXPECT_EQ(bad.cycles, 1);
  EXPECT_EQ(bad.witness.size(), 3u);
  GammaAssignment cancel;
  cancel[{0, 1}] = SymbolR(1, 0, 1);
  cancel[{1, 2}] = SymbolR(1, 0, -1);
  EXPECT_TRUE(CycleSumCheck(tri, cancel, std::vector<int>{}).passed);
  // Vertices reaching s_minus are excluded.
  const std::vector<std::vector<int>> with_exit = {{1}, {2, 3}, {0}, {}};
  EXPECT_TRUE(CycleSumCheck(with_exit, unit, std::vector<int>{3}).passed);
  // Acyclic graphs pass vacuously.
  EXPECT_TRUE(CycleSumCheck(Adj{{1}, {2}, {}}, unit, std::vector<int>{}).passed);
}

TEST(CycleCheckTest, BudgetEnforced) {
  const int n = 9;
  std::vector<std::vector<int>> complete(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) complete[i].push_back(j);
  EXPECT_THROW(CycleSumCheck(complete, GammaAssignment{}, std::vector<int>{}, 1000), CycleBudgetExceeded);
}

TEST(DotTest, MentionsEveryVertex) {
  const AuxGraph aux = BuildBaseGraph(FreeParameterSystem(testing::Chain(2)));
  const std::string dot = ToDot(aux);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("w1^T"), std::string::npos);
}

}  // namespace
}  // namespace inputsel
