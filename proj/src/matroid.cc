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

#include "inputsel/matroid.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "inputsel/errors.h"
#include "inputsel/field_linalg.h"

namespace inputsel {

ElementSet Normalize(ElementSet x) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

ElementSet Complement(const ElementSet& x, int ground_size) {
  ElementSet out;
  size_t j = 0;
  for (int e = 0; e < ground_size; ++e) {
    while (j < x.size() && x[j] < e) ++j;
    if (j < x.size() && x[j] == e) continue;
    out.push_back(e);
  }
  return out;
}

ElementSet FullSet(int ground_size) {
  ElementSet out(ground_size);
  for (int e = 0; e < ground_size; ++e) out[e] = e;
  return out;
}

ElementSet WithElement(const ElementSet& x, int e) {
  ElementSet out = x;
  auto it = std::lower_bound(out.begin(), out.end(), e);
  if (it == out.end() || *it != e) out.insert(it, e);
  return out;
}

ElementSet WithoutElement(const ElementSet& x, int e) {
  ElementSet out = x;
  auto it = std::lower_bound(out.begin(), out.end(), e);
  if (it != out.end() && *it == e) out.erase(it);
  return out;
}

bool Contains(const ElementSet& x, int e) {
  return std::binary_search(x.begin(), x.end(), e);
}

Matroid::Matroid(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 0) throw std::invalid_argument("negative ground size");
}

void Matroid::Check(const ElementSet& x) const {
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] >= ground_size_) {
      throw std::out_of_range("element " + std::to_string(x[i]) +
                              " outside ground set");
    }
    if (i > 0 && x[i - 1] >= x[i]) {
      throw std::invalid_argument("element set must be sorted and unique");
    }
  }
}

bool Matroid::IsIndependent(const ElementSet& x) const {
  Check(x);
  queries_.fetch_add(1);
  return DoIsIndependent(x);
}

int Matroid::Rank(const ElementSet& x) const {
  Check(x);
  return DoRank(x);
}

int Matroid::FullRank() const { return DoRank(FullSet(ground_size_)); }

int Matroid::DoRank(const ElementSet& x) const {
  ElementSet kept;
  for (int e : x) {
    kept.push_back(e);
    if (!DoIsIndependent(kept)) kept.pop_back();
  }
  return static_cast<int>(kept.size());
}

UniformMatroid::UniformMatroid(int ground_size, int k)
    : Matroid(ground_size), k_(k) {
  if (k < 0) throw std::invalid_argument("negative uniform rank");
}

bool UniformMatroid::DoIsIndependent(const ElementSet& x) const {
  return static_cast<int>(x.size()) <= k_;
}

int UniformMatroid::DoRank(const ElementSet& x) const {
  return std::min(static_cast<int>(x.size()), k_);
}

LinearMatroid::LinearMatroid(DenseFieldMatrix columns)
    : Matroid(columns.cols()), columns_(std::move(columns)) {}

std::shared_ptr<LinearMatroid> LinearMatroid::FromStructured(
    const StructuredMatrix& m, const FieldConfig& cfg) {
  cfg.Validate();
  std::vector<uint64_t> primes = {cfg.prime};
  for (uint64_t q : FallbackPrimes()) {
    if (q != cfg.prime) primes.push_back(q);
  }
  for (uint64_t prime : primes) {
    try {
      Rng draw(cfg.seed);
      return std::make_shared<LinearMatroid>(Substitute(m, prime, draw));
    } catch (const PrimeDividesDenominator&) {
    }
  }
  throw PrimeDividesDenominator("every fallback prime divides a denominator");
}

bool LinearMatroid::DoIsIndependent(const ElementSet& x) const {
  if (static_cast<int>(x.size()) > columns_.rows()) return false;
  return DoRank(x) == static_cast<int>(x.size());
}

int LinearMatroid::DoRank(const ElementSet& x) const {
  return RankGf(columns_.SelectColumns(x));
}

UnionMatroid::UnionMatroid(MatroidPtr left, MatroidPtr right)
    : Matroid(left->ground_size()), left_(std::move(left)),
      right_(std::move(right)) {
  if (left_->ground_size() != right_->ground_size()) {
    throw std::invalid_argument("union of matroids on different ground sets");
  }
  if (auto* u = dynamic_cast<const UniformMatroid*>(right_.get())) {
    uniform_ = u;
    other_ = left_.get();
  } else if (auto* u2 = dynamic_cast<const UniformMatroid*>(left_.get())) {
    uniform_ = u2;
    other_ = right_.get();
  }
}

std::pair<ElementSet, ElementSet> UnionMatroid::Partition(
    const ElementSet& x) const {
  const Matroid* parts[2] = {left_.get(), right_.get()};
  const int n = ground_size();
  std::vector<int> owner(n, -1);
  ElementSet sets[2];
  for (int s : x) {
    std::vector<int> parent(n, -1);
    std::vector<int> parent_label(n, -1);
    std::vector<char> seen(n, 0);
    std::deque<int> queue = {s};
    seen[s] = 1;
    int found = -1;
    int found_label = -1;
    while (!queue.empty() && found < 0) {
      const int v = queue.front();
      queue.pop_front();
      for (int k = 0; k < 2 && found < 0; ++k) {
        if (owner[v] == k) continue;
        if (parts[k]->DoIsIndependent(WithElement(sets[k], v))) {
          found = v;
          found_label = k;
        }
      }
      if (found >= 0) break;
      for (int k = 0; k < 2; ++k) {
        if (owner[v] == k) continue;
        const ElementSet with_v = WithElement(sets[k], v);
        for (int y : sets[k]) {
          if (seen[y]) continue;
          if (parts[k]->DoIsIndependent(WithoutElement(with_v, y))) {
            seen[y] = 1;
            parent[y] = v;
            parent_label[y] = k;
            queue.push_back(y);
          }
        }
      }
    }
    if (found < 0) continue;
    std::vector<std::pair<int, int>> moves = {{found, found_label}};
    for (int y = found; y != s; y = parent[y]) {
      moves.push_back({parent[y], parent_label[y]});
    }
    for (const auto& [e, k] : moves) {
      if (owner[e] >= 0) sets[owner[e]] = WithoutElement(sets[owner[e]], e);
    }
    for (const auto& [e, k] : moves) {
      owner[e] = k;
      sets[k] = WithElement(sets[k], e);
    }
  }
  return {sets[0], sets[1]};
}

bool UnionMatroid::DoIsIndependent(const ElementSet& x) const {
  return DoRank(x) == static_cast<int>(x.size());
}

int UnionMatroid::DoRank(const ElementSet& x) const {
  if (uniform_ != nullptr) {
    return std::min(static_cast<int>(x.size()),
                    other_->DoRank(x) + uniform_->k());
  }
  auto [a, b] = Partition(x);
  return static_cast<int>(a.size() + b.size());
}

DualMatroid::DualMatroid(MatroidPtr inner)
    : Matroid(inner->ground_size()), inner_(std::move(inner)) {
  inner_full_rank_ = inner_->FullRank();
}

bool DualMatroid::DoIsIndependent(const ElementSet& x) const {
  return inner_->DoRank(Complement(x, ground_size())) == inner_full_rank_;
}

int DualMatroid::DoRank(const ElementSet& x) const {
  return inner_->DoRank(Complement(x, ground_size())) +
         static_cast<int>(x.size()) - inner_full_rank_;
}

PartitionMatroid::PartitionMatroid(std::vector<int> class_of)
    : Matroid(static_cast<int>(class_of.size())),
      class_of_(std::move(class_of)) {}

bool PartitionMatroid::DoIsIndependent(const ElementSet& x) const {
  std::vector<int> used;
  for (int e : x) {
    if (class_of_[e] < 0) return false;
    used.push_back(class_of_[e]);
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

int PartitionMatroid::DoRank(const ElementSet& x) const {
  std::vector<int> used;
  for (int e : x) {
    if (class_of_[e] >= 0) used.push_back(class_of_[e]);
  }
  std::sort(used.begin(), used.end());
  return static_cast<int>(std::unique(used.begin(), used.end()) -
                          used.begin());
}

RankDefinedMatroid::RankDefinedMatroid(int ground_size, RankFn rank,
                                       std::string tag)
    : Matroid(ground_size), rank_(std::move(rank)), tag_(std::move(tag)) {}

bool RankDefinedMatroid::DoIsIndependent(const ElementSet& x) const {
  return rank_(x) == static_cast<int>(x.size());
}

int RankDefinedMatroid::DoRank(const ElementSet& x) const { return rank_(x); }

MatroidPtr MakeUniform(int ground_size, int k) {
  return std::make_shared<UniformMatroid>(ground_size, k);
}

MatroidPtr MakeDual(MatroidPtr inner) {
  return std::make_shared<DualMatroid>(std::move(inner));
}

MatroidPtr MakeUnion(MatroidPtr left, MatroidPtr right) {
  return std::make_shared<UnionMatroid>(std::move(left), std::move(right));
}

namespace {

struct ExchangeGraph {
  std::vector<std::vector<int>> out;
  std::vector<char> source;
  std::vector<char> sink;
};

ExchangeGraph BuildExchangeGraph(const Matroid& m1, const Matroid& m2,
                                 const ElementSet& r) {
  const int n = m1.ground_size();
  ExchangeGraph g;
  g.out.assign(n, {});
  g.source.assign(n, 0);
  g.sink.assign(n, 0);
  const ElementSet outside = Complement(r, n);
  for (int j : outside) {
    const ElementSet with_j = WithElement(r, j);
    g.source[j] = m1.IsIndependent(with_j);
    g.sink[j] = m2.IsIndependent(with_j);
    for (int i : r) {
      const ElementSet swapped = WithoutElement(with_j, i);
      if (m1.IsIndependent(swapped)) g.out[i].push_back(j);
      if (m2.IsIndependent(swapped)) g.out[j].push_back(i);
    }
  }
  for (auto& arcs : g.out) std::sort(arcs.begin(), arcs.end());
  return g;
}

std::vector<int> LexShortestPath(const ExchangeGraph& g) {
  const int n = static_cast<int>(g.out.size());
  std::vector<std::vector<int>> in(n);
  for (int u = 0; u < n; ++u) {
    for (int v : g.out[u]) in[v].push_back(u);
  }
  std::vector<int> dist(n, -1);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    if (g.sink[v]) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u : in[v]) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (g.source[v] && dist[v] >= 0 && (start < 0 || dist[v] < dist[start])) {
      start = v;
    }
  }
  if (start < 0) return {};
  std::vector<int> path = {start};
  int v = start;
  while (dist[v] > 0) {
    for (int w : g.out[v]) {
      if (dist[w] == dist[v] - 1) {
        v = w;
        break;
      }
    }
    path.push_back(v);
  }
  return path;
}

ElementSet SymmetricDifference(const ElementSet& r,
                               const std::vector<int>& path) {
  ElementSet out = r;
  for (int v : path) {
    out = Contains(out, v) ? WithoutElement(out, v) : WithElement(out, v);
  }
  return out;
}

}  // namespace

ElementSet MaxCardinalityIntersection(const Matroid& m1, const Matroid& m2,
                                      IntersectionStats* stats) {
  if (m1.ground_size() != m2.ground_size()) {
    throw std::invalid_argument("intersection on different ground sets");
  }
  ElementSet r;
  while (true) {
    const ExchangeGraph g = BuildExchangeGraph(m1, m2, r);
    const std::vector<int> path = LexShortestPath(g);
    if (path.empty()) break;
    r = SymmetricDifference(r, path);
    if (stats != nullptr) {
      ++stats->augmentations;
      stats->path_lengths.push_back(static_cast<int>(path.size()));
    }
  }
  return r;
}

ElementSet MaxWeightCommonBasis(const Matroid& m1, const Matroid& m2,
                                const std::vector<double>& weights) {
  const int n = m1.ground_size();
  if (m2.ground_size() != n || static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("weighted intersection shape mismatch");
  }
  const int rank1 = m1.FullRank();
  if (rank1 != m2.FullRank()) {
    throw NoCommonBasis("matroid ranks differ");
  }
  double scale = 1.0;
  for (double w : weights) scale = std::max(scale, std::abs(w));
  const double tol = 1e-12 * scale * (n + 1);
  ElementSet r;
  while (true) {
    const ExchangeGraph g = BuildExchangeGraph(m1, m2, r);
    std::vector<double> length(n);
    for (int v = 0; v < n; ++v) {
      length[v] = Contains(r, v) ? weights[v] : -weights[v];
    }
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, inf);
    std::vector<int> hops(n, 0);
    std::vector<int> parent(n, -1);
    for (int v = 0; v < n; ++v) {
      if (g.source[v]) dist[v] = length[v];
    }
    auto better = [&](double d, int h, int v) {
      if (dist[v] == inf) return true;
      if (d < dist[v] - tol) return true;
      return d <= dist[v] + tol && h < hops[v];
    };
    for (int round = 0; round < n; ++round) {
      bool changed = false;
      for (int u = 0; u < n; ++u) {
        if (dist[u] == inf) continue;
        for (int v : g.out[u]) {
          const double d = dist[u] + length[v];
          if (better(d, hops[u] + 1, v)) {
            dist[v] = d;
            hops[v] = hops[u] + 1;
            parent[v] = u;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    int target = -1;
    for (int v = 0; v < n; ++v) {
      if (!g.sink[v] || dist[v] == inf) continue;
      if (target < 0 || dist[v] < dist[target] - tol ||
          (dist[v] <= dist[target] + tol && hops[v] < hops[target])) {
        target = v;
      }
    }
    if (target < 0) break;
    std::vector<int> path;
    for (int v = target; v >= 0; v = parent[v]) {
      path.push_back(v);
      if (static_cast<int>(path.size()) > n) {
        throw std::logic_error("cycle in augmenting path");
      }
    }
    r = SymmetricDifference(r, path);
  }
  if (static_cast<int>(r.size()) != rank1) {
    throw NoCommonBasis("largest common independent set has size " +
                        std::to_string(r.size()) + ", ranks are " +
                        std::to_string(rank1));
  }
  return r;
}

bool IsCommonBasis(const Matroid& m1, const Matroid& m2, const ElementSet& x) {
  return static_cast<int>(x.size()) == m1.FullRank() &&
         static_cast<int>(x.size()) == m2.FullRank() && m1.IsIndependent(x) &&
         m2.IsIndependent(x);
}

}  // namespace inputsel
