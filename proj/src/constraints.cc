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

#include "inputsel/constraints.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "inputsel/errors.h"
#include "inputsel/field_linalg.h"

namespace inputsel {
namespace {

struct PencilRows {
  DenseFieldMatrix x;
  DenseFieldMatrix y;
};

DenseFieldMatrix RandomMatrix(int rows, int cols, uint64_t p, Rng& draw) {
  DenseFieldMatrix m(rows, cols, p);
  for (auto& e : m.mutable_entries()) e = DrawNonzero(p, draw);
  return m;
}

DenseFieldMatrix Combine(const DenseFieldMatrix& x, const DenseFieldMatrix& y,
                         uint64_t z) {
  const uint64_t p = x.prime();
  DenseFieldMatrix out = x;
  for (size_t i = 0; i < out.entries().size(); ++i) {
    out.mutable_entries()[i] =
        SubMod(x.entries()[i], MulMod(z, y.entries()[i], p), p);
  }
  return out;
}

// det(P(z0 + s) C) / det(P(z0) C) as a polynomial in s, or nullopt when
// P(z0) C is singular.
std::optional<Poly> MinorCombination(const PencilRows& rows,
                                     const DenseFieldMatrix& c, uint64_t z0) {
  const uint64_t p = rows.x.prime();
  const DenseFieldMatrix xc = Multiply(rows.x, c);
  const DenseFieldMatrix yc = Multiply(rows.y, c);
  const auto inv = Inverse(Combine(xc, yc, z0));
  if (!inv) return std::nullopt;
  const Poly chi = CharPoly(Multiply(*inv, yc));
  const int m = xc.rows();
  // det(I - s G) = s^m chi(1/s).
  Poly q(m + 1, 0);
  for (int d = 0; d <= m; ++d) q[d] = chi[m - d];
  for (auto& coeff : q) coeff %= p;
  TrimPoly(q);
  return q;
}

struct TrialOutcome {
  bool rank_ok = false;
  bool samples_ok = false;
  bool exact_ok = false;
  std::vector<uint64_t> z;
};

TrialOutcome RunTrial(const AugmentedSystem& aug, uint64_t p, int z_count,
                      Rng& draw) {
  const DescriptorSystem& sys = aug.base;
  const DenseFieldMatrix f = Substitute(sys.F, p, draw);
  const DenseFieldMatrix a = Substitute(sys.A, p, draw);
  std::vector<int> rows;
  for (int i = 0; i < sys.n; ++i) {
    if (!std::binary_search(aug.inputs.begin(), aug.inputs.end(), i)) {
      rows.push_back(i);
    }
  }
  const int m = static_cast<int>(rows.size());
  PencilRows pr{a.SelectRows(rows), f.SelectRows(rows)};
  TrialOutcome out;
  out.rank_ok = RankGf(pr.x) == m;
  out.z.push_back(0);
  for (int k = 0; k < z_count; ++k) out.z.push_back(DrawNonzero(p, draw));
  out.samples_ok = true;
  for (uint64_t z : out.z) {
    if (RankGf(Combine(pr.x, pr.y, z)) != m) {
      out.samples_ok = false;
      break;
    }
  }
  if (m == 0) {
    out.exact_ok = true;
    return out;
  }
  if (!out.samples_ok) return out;
  const DenseFieldMatrix c1 = RandomMatrix(sys.n, m, p, draw);
  const DenseFieldMatrix c2 = RandomMatrix(sys.n, m, p, draw);
  for (int attempt = 0; attempt < 3; ++attempt) {
    const uint64_t z0 = DrawNonzero(p, draw);
    const auto q1 = MinorCombination(pr, c1, z0);
    const auto q2 = MinorCombination(pr, c2, z0);
    if (!q1 || !q2) continue;
    out.exact_ok = PolyDegree(PolyGcd(*q1, *q2, p)) == 0;
    return out;
  }
  return out;
}

}  // namespace

Certificate ControllabilityCertificate(const AugmentedSystem& aug,
                                       const CertificateConfig& cfg) {
  cfg.field.Validate();
  if (cfg.z_count < 0) throw std::invalid_argument("negative z_count");
  const uint64_t p = cfg.field.prime;
  const int n = aug.base.n;
  Rng draw(cfg.field.seed);
  Certificate cert;
  cert.prime = p;
  const double m = static_cast<double>(n - static_cast<int>(aug.inputs.size()));
  const double degree = m + 2.0 * m * m + 2.0 * m + n * (cfg.z_count + 1.0);
  const double per_trial = std::min(1.0, degree / static_cast<double>(p));
  for (int t = 0; t < cfg.field.trials; ++t) {
    TrialOutcome o = RunTrial(aug, p, cfg.z_count, draw);
    ++cert.trials_run;
    cert.rank_AB_ok = cert.rank_AB_ok || o.rank_ok;
    const bool pencil = o.samples_ok && o.exact_ok;
    if (pencil || !cert.pencil_ok) {
      cert.pencil_exact_ok = cert.pencil_exact_ok || o.exact_ok;
      cert.z_samples = o.z;
    }
    cert.pencil_ok = cert.pencil_ok || pencil;
    if (cert.passed()) break;
  }
  cert.failure_bound = std::pow(per_trial, cert.trials_run);
  return cert;
}

ControllabilityModel::ControllabilityModel(const DescriptorSystem& sys,
                                           const FieldConfig& cfg)
    : sys_(sys), cfg_(cfg) {
  cfg_.Validate();
  const int n = sys_.n;
  const uint64_t p = cfg_.prime;
  Rng draw(cfg_.seed);
  StructuredMatrix t_a(n, n);
  for (const auto& pos : sys_.A.free()) t_a.AddFree(pos.first, pos.second);
  const DenseFieldMatrix ta = Substitute(t_a, p, draw);
  std::vector<uint64_t> d(n), tb(n);
  for (int i = 0; i < n; ++i) d[i] = DrawNonzero(p, draw);
  for (int i = 0; i < n; ++i) tb[i] = DrawNonzero(p, draw);
  StructuredMatrix q_a(n, n);
  for (const auto& [pos, v] : sys_.A.fixed()) q_a.SetFixed(pos.first, pos.second, v);
  const DenseFieldMatrix qa = ReduceFixed(q_a, p);

  DenseFieldMatrix base(2 * n, 2 * n, p);
  q_side_ = DenseFieldMatrix(n, 3 * n, p);
  t_side_ = DenseFieldMatrix(n, 3 * n, p);
  for (int i = 0; i < n; ++i) {
    base.at(i, i) = 1;
    base.at(n + i, i) = d[i];
    q_side_.at(i, i) = 1;
    t_side_.at(i, i) = 1;
    t_side_.at(i, 2 * n + i) = tb[i];
    for (int j = 0; j < n; ++j) {
      base.at(i, n + j) = qa.at(i, j);
      base.at(n + i, n + j) = ta.at(i, j);
      q_side_.at(i, n + j) = qa.at(i, j);
      t_side_.at(i, n + j) = ta.at(i, j);
    }
  }
  zeta_ = RankGf(base);
  const DenseFieldMatrix null = LeftNullspace(base);
  std::vector<int> cols;
  for (int s : sys_.eligible) cols.push_back(n + s);
  k1_ = null.SelectColumns(cols);
  m1_ = std::make_shared<LinearMatroid>(k1_);
  r1_ = m1_->FullRank();
  const int g = ground_size();
  for (int e = 0; e < g; ++e) {
    if (m1_->Rank(WithoutElement(FullSet(g), e)) < r1_) coloops_.push_back(e);
  }

  base_graph_ = BuildBaseGraph(sys_, cfg_);
  const auto adj = base_graph_.Adjacency();
  const Condensation cond = Condense(adj);
  const int classes = static_cast<int>(cond.members.size());
  // Tarjan numbers classes in reverse topological order.
  std::vector<std::vector<int>> succ(classes);
  for (const auto& [a, b] : cond.dag_arcs) succ[a].push_back(b);
  std::vector<char> reaches_cyclic(classes, 0);
  for (int c = 0; c < classes; ++c) {
    for (int s : succ[c]) {
      if (cond.cyclic[s] || reaches_cyclic[s]) reaches_cyclic[c] = 1;
    }
  }
  std::vector<int> surrogate_owner(base_graph_.vertex_count(), -1);
  for (int e = 0; e < g; ++e) {
    surrogate_owner[base_graph_.WT(sys_.eligible[e])] = e;
  }
  std::vector<ElementSet> raw;
  for (int c = 0; c < classes; ++c) {
    if (!cond.cyclic[c] || reaches_cyclic[c]) continue;
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> stack = cond.members[c];
    for (int v : stack) seen[v] = 1;
    ElementSet block;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (surrogate_owner[v] >= 0) block.push_back(surrogate_owner[v]);
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    block = Normalize(block);
    const bool guarded = std::any_of(block.begin(), block.end(), [&](int e) {
      return Contains(coloops_, e);
    });
    if (!guarded) raw.push_back(block);
  }
  std::vector<int> hits(g, 0);
  for (const auto& b : raw) {
    for (int e : b) ++hits[e];
  }
  class_of_.assign(g, -1);
  for (size_t k = 0; k < raw.size(); ++k) {
    ElementSet exclusive;
    for (int e : raw[k]) {
      if (hits[e] == 1) {
        exclusive.push_back(e);
        class_of_[e] = static_cast<int>(k);
      }
    }
    if (exclusive.size() != raw[k].size()) m2_exact_ = false;
    if (exclusive.empty()) continue;
    blocks_.push_back(exclusive);
  }
  m2_ = std::make_shared<PartitionMatroid>(class_of_);
  r2_ = m2_->FullRank();
  m1_star_ = MakeDual(m1_);
  m2_star_ = MakeDual(m2_);

  coverage_.assign(g, std::vector<char>(g, 0));
  std::vector<int> ground_of_state(n, -1);
  for (int e = 0; e < g; ++e) ground_of_state[sys_.eligible[e]] = e;
  for (int e = 0; e < g; ++e) {
    const auto reach = ReachesSet(adj, {base_graph_.WT(sys_.eligible[e])});
    for (int v = 0; v < base_graph_.vertex_count(); ++v) {
      if (!reach[v]) continue;
      const int owner = ground_of_state[base_graph_.StateOf(v)];
      if (owner >= 0) coverage_[e][owner] = 1;
    }
  }
}

int ControllabilityModel::Rho1(const ElementSet& s) const {
  return m1_->Rank(s);
}

int ControllabilityModel::Rho1ViaUnion(const ElementSet& s) const {
  const int n = sys_.n;
  DenseFieldMatrix t = t_side_;
  std::vector<char> keep(n, 0);
  for (int e : s) keep[sys_.eligible.at(e)] = 1;
  for (int i = 0; i < n; ++i) {
    if (!keep[i]) t.at(i, 2 * n + i) = 0;
  }
  UnionMatroid full(std::make_shared<LinearMatroid>(q_side_),
                    std::make_shared<LinearMatroid>(t));
  std::vector<int> first(2 * n);
  for (int j = 0; j < 2 * n; ++j) first[j] = j;
  UnionMatroid base(
      std::make_shared<LinearMatroid>(q_side_.SelectColumns(first)),
      std::make_shared<LinearMatroid>(t_side_.SelectColumns(first)));
  return full.FullRank() - base.FullRank();
}

int ControllabilityModel::Rho2(const ElementSet& s) const {
  return m2_->Rank(s);
}

MatroidPtr ControllabilityModel::M1Hat(int k) const {
  const int need = std::max(r1_, r2_);
  if (k < need || k > ground_size()) {
    throw KTooSmall("k = " + std::to_string(k) + " outside [" +
                        std::to_string(need) + ", " +
                        std::to_string(ground_size()) + "]",
                    need);
  }
  return MakeUnion(m1_, MakeUniform(ground_size(), k - r1_));
}

MatroidPtr ControllabilityModel::M2Hat(int k) const {
  const int need = std::max(r1_, r2_);
  if (k < need || k > ground_size()) {
    throw KTooSmall("k = " + std::to_string(k) + " outside [" +
                        std::to_string(need) + ", " +
                        std::to_string(ground_size()) + "]",
                    need);
  }
  return MakeUnion(m2_, MakeUniform(ground_size(), k - r2_));
}

int ControllabilityModel::GciC1(const ElementSet& s) const {
  return Rho1(Complement(s, ground_size())) + static_cast<int>(s.size());
}

int ControllabilityModel::GciC2(const ElementSet& s) const {
  const int g = ground_size();
  std::vector<char> covered(g, 0);
  for (int e : s) {
    for (int i = 0; i < g; ++i) covered[i] |= coverage_.at(e)[i];
  }
  return static_cast<int>(std::count(covered.begin(), covered.end(), 1));
}

int ControllabilityModel::GciStrong(const ElementSet& s) const {
  return zeta_ + Rho1(s);
}

}  // namespace inputsel
