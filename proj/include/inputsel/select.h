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

#ifndef INPUTSEL_SELECT_H_
#define INPUTSEL_SELECT_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inputsel/constraints.h"
#include "inputsel/matroid.h"
#include "inputsel/sysmodel.h"

namespace inputsel {

struct SubmodularObjective {
  std::function<double(const ElementSet&)> evaluate;
  int ground_size = 0;
  bool monotone = true;
  // Optional decomposition f(S) = sum_i f_i(S n V_i).
  std::vector<ElementSet> components;
  std::string name = "objective";
};

SubmodularObjective ModularObjective(std::vector<double> weights);
// Caches values by bitmask; ground sets up to 64 elements.
SubmodularObjective Memoize(const SubmodularObjective& f);

struct FractionalPoint {
  std::vector<double> y;
  std::vector<std::pair<ElementSet, double>> basis_trace;
};

struct TraceStep {
  std::string note;
  ElementSet set;
  double value = 0.0;
};

struct SelectionResult {
  ElementSet ground;
  std::vector<int> states;
  double objective = 0.0;
  std::optional<Certificate> certificate;
  std::string algorithm;
  std::vector<TraceStep> trace;
  uint64_t seed = 0;
  long queries = 0;
  std::map<std::string, double> decomposition;
};

struct SelectConfig {
  FieldConfig field;
  CertificateConfig certificate;
  uint64_t seed = 1;
  // Zero selects ceil(10 k^2 ln(n + 1)).
  int samples_per_estimate = 0;
  // Exact expected marginals up to this ground size.
  int exact_threshold = 12;
  // Zero selects 1 / (9 k^2).
  double delta = 0.0;
  // Use M1 hat for both constraints (strongly connected systems).
  bool single_matroid = false;
};

int DefaultSamples(int k, int n);

SelectionResult MinInputSet(const ControllabilityModel& model,
                            const SelectConfig& cfg = {});
SelectionResult MinInputSet(const DescriptorSystem& sys,
                            const SelectConfig& cfg = {});
// Throws NotStronglyConnected.
SelectionResult MinInputSetStrong(const ControllabilityModel& model,
                                  const SelectConfig& cfg = {});

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

Estimate MultilinearEstimate(const SubmodularObjective& f,
                             const std::vector<double>& y, int samples,
                             uint64_t seed);
double MultilinearExact(const SubmodularObjective& f,
                        const std::vector<double>& y);

FractionalPoint ContinuousGreedy(const SubmodularObjective& f,
                                 const Matroid& m1_hat, const Matroid& m2_hat,
                                 int k, int samples_per_estimate,
                                 uint64_t seed, int exact_threshold = 12,
                                 double delta = 0.0);

struct SwapStats {
  int swaps = 0;
  int fallbacks = 0;
};

ElementSet SwapRound(const FractionalPoint& point, const Matroid& m1_hat,
                     const Matroid& m2_hat, uint64_t seed,
                     SwapStats* stats = nullptr);

// Throws KTooSmall with the smallest feasible k.
SelectionResult SelectJoint(const ControllabilityModel& model,
                            const SubmodularObjective& f, int k,
                            const SelectConfig& cfg = {});
SelectionResult SelectJointModular(const ControllabilityModel& model,
                                   const std::vector<double>& weights, int k,
                                   const SelectConfig& cfg = {});
SelectionResult SelectTradeoff(const ControllabilityModel& model,
                               const SubmodularObjective& f, double eta, int k,
                               bool strong = false,
                               const SelectConfig& cfg = {});

// Smallest k admitting a common basis of the extensions.
int MinimumFeasibleK(const ControllabilityModel& model, bool single_matroid);

}  // namespace inputsel

#endif  // INPUTSEL_SELECT_H_
