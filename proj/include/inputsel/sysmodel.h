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

#ifndef INPUTSEL_SYSMODEL_H_
#define INPUTSEL_SYSMODEL_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "inputsel/matroid.h"
#include "inputsel/structmat.h"

namespace inputsel {

// Arc (i, j) means node i feeds node j.
struct Graph {
  int n = 0;
  std::set<std::pair<int, int>> edges;
  bool undirected = false;

  Graph() = default;
  Graph(int n, bool undirected);

  void AddEdge(int i, int j);
  // Pairs i < j of an undirected graph, lexicographic.
  std::vector<std::pair<int, int>> UndirectedEdges() const;
  std::vector<std::vector<int>> OutNeighbors() const;
  std::vector<std::vector<int>> InNeighbors() const;
  // Neighbor count for undirected graphs, in plus out otherwise.
  std::vector<int> Degrees() const;
  double MeanDegree() const;

  bool operator==(const Graph& other) const = default;
};

bool IsStronglyConnected(const Graph& g);
// Undirected components; every node belongs to exactly one.
std::vector<std::vector<int>> Components(const Graph& g);

enum class SystemKind { kConsensus, kDoubleIntegrator, kFree, kCustom };

std::string KindName(SystemKind kind);
SystemKind ParseKind(const std::string& name);

struct DescriptorSystem {
  int n = 0;
  StructuredMatrix F;
  StructuredMatrix A;
  SystemKind kind = SystemKind::kCustom;
  // Candidate input states, ascending. Ground element g is eligible[g].
  std::vector<int> eligible;
  std::optional<Graph> graph;

  int ground_size() const { return static_cast<int>(eligible.size()); }
  std::vector<int> ToStates(const ElementSet& ground) const;
  // Throws std::invalid_argument for ineligible states.
  ElementSet ToGround(const std::vector<int>& states) const;
};

// Checks solvability and shapes; all states eligible unless given.
DescriptorSystem CustomSystem(StructuredMatrix f, StructuredMatrix a,
                              std::optional<std::vector<int>> eligible = {});
DescriptorSystem ConsensusSystem(const Graph& g);
DescriptorSystem DoubleIntegratorSystem(const Graph& g);
DescriptorSystem FreeParameterSystem(const Graph& g);

// det(A - zF) is not identically zero, tested at random points.
bool IsSolvable(const DescriptorSystem& sys, const FieldConfig& cfg = {});

// Arc j -> i whenever A or F has a nonzero pattern at (i, j), i != j.
Graph StateGraph(const DescriptorSystem& sys);

struct AugmentedSystem {
  DescriptorSystem base;
  std::vector<int> inputs;  // state indices, ascending
  StructuredMatrix B;
};

AugmentedSystem AugmentWithInputs(const DescriptorSystem& sys,
                                  std::vector<int> states);

enum class Symmetrization { kNone, kMutual };

struct GeometricConfig {
  int n = 20;
  double target_degree = 3.0;
  double range_max = 600.0;
  uint64_t seed = 1;
  Symmetrization symmetrize = Symmetrization::kNone;
  int max_iterations = 50;
  double tolerance = 0.1;
};

struct GeometricNetwork {
  Graph graph;
  double side = 0.0;
  double achieved_degree = 0.0;
  int iterations = 0;
};

// Throws GenerationError.
GeometricNetwork RandomGeometricNetwork(const GeometricConfig& cfg);

}  // namespace inputsel

#endif  // INPUTSEL_SYSMODEL_H_
