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

#ifndef INPUTSEL_AUXGRAPH_H_
#define INPUTSEL_AUXGRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "inputsel/structmat.h"
#include "inputsel/sysmodel.h"

namespace inputsel {

enum class RowKind { kW, kX, kU };

struct RowLabel {
  RowKind kind;
  int index;  // state for w and x rows, input position for u rows
};

struct OmegaMatrix {
  int n = 0;
  std::vector<int> inputs;
  // (2n + k) x (n + k); rows w_0..w_{n-1}, x_0..x_{n-1}, u_0..u_{k-1}.
  StructuredMatrix entries;
  std::vector<RowLabel> row_labels;
};

OmegaMatrix BuildOmega(const AugmentedSystem& aug);

// partner[i] < 0 matches w_i^T to w_i^Q; otherwise to x_{partner[i]}^Q.
struct MatchingResult {
  std::vector<int> partner;
  std::vector<int> J;  // omega row indices, ascending
};

std::vector<int> MatchedRows(const std::vector<int>& partner);
bool IsValidMatching(const OmegaMatrix& omega, const DescriptorSystem& sys,
                     const std::vector<int>& partner,
                     const FieldConfig& cfg = {});
// Closed-form matchings of the three network constructors.
std::optional<MatchingResult> KnownMatching(const DescriptorSystem& sys);
// Throws NoIndependentMatching.
MatchingResult FindIndependentMatching(const OmegaMatrix& omega,
                                       const DescriptorSystem& sys,
                                       const FieldConfig& cfg = {});

struct Completion {
  std::vector<int> J1;
  // Column q corresponds to omega row columns[q] (J then J1).
  std::vector<int> columns;
  // Exact rationals when every entry reconstructs consistently over two
  // primes; otherwise the generic support is stored as free entries.
  StructuredMatrix omega_tilde;
  bool exact = false;
};

Completion CompleteAndInvert(const OmegaMatrix& omega,
                             const std::vector<int>& J,
                             const FieldConfig& cfg = {});

enum class VertexType { kWT, kWQ, kXT, kXQ, kUT, kUQ };

struct AuxGraph {
  int n = 0;
  std::vector<int> inputs;  // states carrying u vertices
  std::set<std::pair<int, int>> arcs;
  std::vector<int> partner;
  std::vector<int> J;
  std::vector<int> J1;
  std::vector<int> columns;
  StructuredMatrix omega_tilde;
  bool omega_exact = false;
  std::vector<int> s_minus;

  int vertex_count() const { return 4 * n + 2 * static_cast<int>(inputs.size()); }
  int WT(int i) const { return i; }
  int WQ(int i) const { return n + i; }
  int XT(int i) const { return 2 * n + i; }
  int XQ(int i) const { return 3 * n + i; }
  int UT(int k) const { return 4 * n + 2 * k; }
  int UQ(int k) const { return 4 * n + 2 * k + 1; }

  VertexType TypeOf(int v) const;
  // State index of the vertex (input state for u vertices).
  int StateOf(int v) const;
  std::string Name(int v) const;
  std::vector<std::vector<int>> Adjacency() const;
  std::vector<std::vector<int>> ReverseAdjacency() const;
};

// G' for the system with no inputs.
AuxGraph BuildBaseGraph(const DescriptorSystem& sys,
                        const FieldConfig& cfg = {});
AuxGraph AddInputEdges(const AuxGraph& base, std::vector<int> states);

struct Condensation {
  std::vector<int> class_of;
  std::vector<std::vector<int>> members;
  std::set<std::pair<int, int>> dag_arcs;
  std::vector<int> source_classes;
  std::vector<int> sink_classes;
  std::vector<char> cyclic;
};

Condensation Condense(const std::vector<std::vector<int>>& adjacency);
Condensation Condense(const AuxGraph& g);

// Vertices of nontrivial strongly connected components or with self-loops.
std::vector<char> CycleVertices(const std::vector<std::vector<int>>& adjacency);

std::vector<char> ReachesSet(const std::vector<std::vector<int>>& adjacency,
                             const std::vector<int>& targets);

bool ReachabilitySatisfied(const AuxGraph& g_hat,
                           const std::vector<int>& states);

// Symbols r_i -> i, c_i -> n + i, unit -> 2n.
struct FormalSum {
  std::map<int, long long> coeffs;

  FormalSum& operator+=(const FormalSum& other);
  bool IsZero() const;
  std::string ToString(int n) const;
};

FormalSum SymbolR(int n, int i, long long coeff);
FormalSum SymbolC(int n, int i, long long coeff);
FormalSum Unit(int n, long long coeff);

using GammaAssignment = std::map<std::pair<int, int>, FormalSum>;

// Coefficients attach to the vertex pair irrespective of arc direction.
GammaAssignment GammaCoefficients(const AuxGraph& g);

struct CycleCheck {
  bool passed = true;
  long long cycles = 0;
  std::vector<int> witness;
};

inline constexpr long long kCycleBudget = 1000000;

// Restricts to vertices that do not reach s_minus. Throws
// CycleBudgetExceeded.
CycleCheck CycleSumCheck(const AuxGraph& g, const GammaAssignment& gamma,
                         long long budget = kCycleBudget);
// Same on an explicit graph; vertex ids index adjacency.
CycleCheck CycleSumCheck(const std::vector<std::vector<int>>& adjacency,
                         const GammaAssignment& gamma,
                         const std::vector<int>& s_minus,
                         long long budget = kCycleBudget);

std::string ToDot(const AuxGraph& g);

}  // namespace inputsel

#endif  // INPUTSEL_AUXGRAPH_H_
