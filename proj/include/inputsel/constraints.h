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

#ifndef INPUTSEL_CONSTRAINTS_H_
#define INPUTSEL_CONSTRAINTS_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "inputsel/auxgraph.h"
#include "inputsel/matroid.h"
#include "inputsel/structmat.h"
#include "inputsel/sysmodel.h"

namespace inputsel {

struct CertificateConfig {
  FieldConfig field;
  int z_count = 20;
};

struct Certificate {
  bool rank_AB_ok = false;
  bool pencil_ok = false;
  // Sampled points (z = 0 first) of the trial that decided the verdict.
  std::vector<uint64_t> z_samples;
  // Normal rank and gcd-of-minors test on the sampled parameters.
  bool pencil_exact_ok = false;
  double failure_bound = 1.0;
  int trials_run = 0;
  uint64_t prime = kDefaultPrime;

  bool passed() const { return rank_AB_ok && pencil_ok; }
};

// A verdict of "fail" can be wrong with probability at most failure_bound;
// "pass" is exact for the drawn parameters.
Certificate ControllabilityCertificate(const AugmentedSystem& aug,
                                       const CertificateConfig& cfg = {});

class ControllabilityModel {
 public:
  explicit ControllabilityModel(const DescriptorSystem& sys,
                                const FieldConfig& cfg = {});

  const DescriptorSystem& system() const { return sys_; }
  int ground_size() const { return sys_.ground_size(); }

  int Rho1(const ElementSet& s) const;
  // Same value through the matroid-partition union of the two column
  // matroids; slow, used for cross-checks.
  int Rho1ViaUnion(const ElementSet& s) const;
  int Rho2(const ElementSet& s) const;

  int r1() const { return r1_; }
  int r2() const { return r2_; }
  // rank(M([I|Q_A]) v M([I|T_A])).
  int zeta() const { return zeta_; }

  const MatroidPtr& m1() const { return m1_; }
  const MatroidPtr& m2() const { return m2_; }
  const MatroidPtr& m1_star() const { return m1_star_; }
  const MatroidPtr& m2_star() const { return m2_star_; }
  // Throws KTooSmall when k < max(r1, r2).
  MatroidPtr M1Hat(int k) const;
  MatroidPtr M2Hat(int k) const;

  const AuxGraph& base_graph() const { return base_graph_; }
  // Blocks of surrogates guarding terminal cyclic classes, after coloop
  // pruning, and the exclusive partition actually used by M2.
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const std::vector<int>& class_of() const { return class_of_; }
  const ElementSet& coloops() const { return coloops_; }
  // False when some block lost every element to overlaps.
  bool m2_exact() const { return m2_exact_; }

  int GciC1(const ElementSet& s) const;
  int GciC2(const ElementSet& s) const;
  int GciStrong(const ElementSet& s) const;
  // States whose vertices reach the surrogate of ground element g.
  const std::vector<std::vector<char>>& coverage() const { return coverage_; }

 private:
  DescriptorSystem sys_;
  FieldConfig cfg_;
  DenseFieldMatrix k1_;
  DenseFieldMatrix q_side_;
  DenseFieldMatrix t_side_;
  int zeta_ = 0;
  int r1_ = 0;
  int r2_ = 0;
  AuxGraph base_graph_;
  std::vector<ElementSet> blocks_;
  std::vector<int> class_of_;
  ElementSet coloops_;
  bool m2_exact_ = true;
  std::vector<std::vector<char>> coverage_;
  MatroidPtr m1_;
  MatroidPtr m2_;
  MatroidPtr m1_star_;
  MatroidPtr m2_star_;
};

}  // namespace inputsel

#endif  // INPUTSEL_CONSTRAINTS_H_
