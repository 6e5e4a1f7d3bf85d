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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "inputsel/errors.h"
#include "inputsel/field_linalg.h"
#include "inputsel/matroid.h"

namespace inputsel {
namespace {

std::set<Position> FreeSupport(const DescriptorSystem& sys) {
  std::set<Position> support = sys.A.free();
  support.insert(sys.F.free().begin(), sys.F.free().end());
  return support;
}

// Fixed part of the w and x rows, first n columns.
DenseFieldMatrix FixedRows(const OmegaMatrix& omega, uint64_t p) {
  const int n = omega.n;
  DenseFieldMatrix d(2 * n, n, p);
  for (const auto& [pos, value] : omega.entries.fixed()) {
    if (pos.first < 2 * n && pos.second < n) {
      d.at(pos.first, pos.second) = ReduceRational(value, p);
    }
  }
  return d;
}

std::optional<Rational> Reconstruct(uint64_t a, uint64_t p) {
  const long long bound =
      static_cast<long long>(std::floor(std::sqrt(static_cast<double>(p) / 2)));
  long long r0 = static_cast<long long>(p);
  long long r1 = static_cast<long long>(a);
  long long t0 = 0;
  long long t1 = 1;
  while (r1 > bound) {
    const long long q = r0 / r1;
    const long long r2 = r0 - q * r1;
    const long long t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || std::llabs(t1) > bound) return std::nullopt;
  return Rational(r1, t1);
}

int KuhnMatching(const std::vector<std::vector<int>>& candidates, int right,
                 std::vector<int>* match_of_right) {
  std::vector<int> owner(right, -1);
  int size = 0;
  for (size_t l = 0; l < candidates.size(); ++l) {
    std::vector<char> seen(right, 0);
    std::function<bool(int)> augment = [&](int u) {
      for (int r : candidates[u]) {
        if (seen[r]) continue;
        seen[r] = 1;
        if (owner[r] < 0 || augment(owner[r])) {
          owner[r] = u;
          return true;
        }
      }
      return false;
    };
    if (augment(static_cast<int>(l))) ++size;
  }
  if (match_of_right != nullptr) *match_of_right = owner;
  return size;
}

// Candidate w^T rows for each omega row label (w_i or x_j).
std::vector<std::vector<int>> LabelCandidates(const DescriptorSystem& sys) {
  const int n = sys.n;
  std::vector<std::vector<int>> cand(2 * n);
  for (int i = 0; i < n; ++i) cand[i].push_back(i);
  for (const auto& [r, c] : FreeSupport(sys)) cand[n + c].push_back(r);
  for (auto& c : cand) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  return cand;
}

}  // namespace

OmegaMatrix BuildOmega(const AugmentedSystem& aug) {
  const DescriptorSystem& sys = aug.base;
  const int n = sys.n;
  const int k = static_cast<int>(aug.inputs.size());
  OmegaMatrix omega;
  omega.n = n;
  omega.inputs = aug.inputs;
  omega.entries = StructuredMatrix(2 * n + k, n + k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational v = sys.A.FixedAt(i, j) - sys.F.FixedAt(i, j);
      if (v.numerator() != 0) omega.entries.SetFixed(i, j, v);
    }
  }
  for (const auto& [r, c] : FreeSupport(sys)) omega.entries.AddFree(r, c);
  for (int i = 0; i < n; ++i) omega.entries.SetFixed(n + i, i, 1);
  for (int q = 0; q < k; ++q) omega.entries.SetFixed(2 * n + q, n + q, 1);
  for (int i = 0; i < n; ++i) omega.row_labels.push_back({RowKind::kW, i});
  for (int i = 0; i < n; ++i) omega.row_labels.push_back({RowKind::kX, i});
  for (int q = 0; q < k; ++q) omega.row_labels.push_back({RowKind::kU, q});
  return omega;
}

std::vector<int> MatchedRows(const std::vector<int>& partner) {
  const int n = static_cast<int>(partner.size());
  std::vector<int> rows;
  for (int i = 0; i < n; ++i) rows.push_back(partner[i] < 0 ? i : n + partner[i]);
  std::sort(rows.begin(), rows.end());
  return rows;
}

bool IsValidMatching(const OmegaMatrix& omega, const DescriptorSystem& sys,
                     const std::vector<int>& partner, const FieldConfig& cfg) {
  const int n = sys.n;
  if (static_cast<int>(partner.size()) != n) return false;
  const auto support = FreeSupport(sys);
  std::vector<char> used(n, 0);
  for (int i = 0; i < n; ++i) {
    const int j = partner[i];
    if (j < 0) continue;
    if (j >= n || used[j] || !support.count({i, j})) return false;
    used[j] = 1;
  }
  const DenseFieldMatrix rows =
      FixedRows(omega, cfg.prime).SelectRows(MatchedRows(partner));
  return RankGf(rows) == n;
}

std::optional<MatchingResult> KnownMatching(const DescriptorSystem& sys) {
  MatchingResult m;
  m.partner.assign(sys.n, -1);
  switch (sys.kind) {
    case SystemKind::kConsensus: {
      const int nodes = sys.graph ? sys.graph->n : 0;
      for (int s = nodes; s < sys.n; ++s) m.partner[s] = s;
      break;
    }
    case SystemKind::kDoubleIntegrator:
    case SystemKind::kFree:
      break;
    case SystemKind::kCustom:
      return std::nullopt;
  }
  m.J = MatchedRows(m.partner);
  return m;
}

MatchingResult FindIndependentMatching(const OmegaMatrix& omega,
                                       const DescriptorSystem& sys,
                                       const FieldConfig& cfg) {
  const int n = sys.n;
  MatchingResult result;
  result.partner.assign(n, -1);
  if (IsValidMatching(omega, sys, result.partner, cfg)) {
    result.J = MatchedRows(result.partner);
    return result;
  }
  const auto candidates = LabelCandidates(sys);
  auto transversal = std::make_shared<RankDefinedMatroid>(
      2 * n,
      [candidates, n](const ElementSet& x) {
        std::vector<std::vector<int>> sub;
        for (int e : x) sub.push_back(candidates[e]);
        return KuhnMatching(sub, n, nullptr);
      },
      "transversal");
  auto rows = std::make_shared<LinearMatroid>(
      Transpose(FixedRows(omega, cfg.prime)));
  const ElementSet common = MaxCardinalityIntersection(*transversal, *rows);
  if (static_cast<int>(common.size()) < n) {
    throw NoIndependentMatching("largest independent matching has size " +
                                std::to_string(common.size()));
  }
  std::vector<std::vector<int>> sub;
  for (int e : common) sub.push_back(candidates[e]);
  std::vector<int> owner;
  KuhnMatching(sub, n, &owner);
  for (int i = 0; i < n; ++i) {
    const int label = common[owner[i]];
    result.partner[i] = label < n ? -1 : label - n;
  }
  result.J = MatchedRows(result.partner);
  return result;
}

Completion CompleteAndInvert(const OmegaMatrix& omega,
                             const std::vector<int>& J,
                             const FieldConfig& cfg) {
  const int n = omega.n;
  const int k = static_cast<int>(omega.inputs.size());
  if (static_cast<int>(J.size()) != n) {
    throw std::invalid_argument("J must contain n rows");
  }
  Completion out;
  for (int q = 0; q < k; ++q) out.J1.push_back(2 * n + q);
  out.columns = J;
  out.columns.insert(out.columns.end(), out.J1.begin(), out.J1.end());
  std::vector<uint64_t> primes = {cfg.prime};
  for (uint64_t q : FallbackPrimes()) {
    if (q != cfg.prime && primes.size() < 2) primes.push_back(q);
  }
  std::vector<DenseFieldMatrix> tilde;
  for (uint64_t p : primes) {
    const DenseFieldMatrix rows = FixedRows(omega, p);
    auto inv = Inverse(rows.SelectRows(J));
    if (!inv) throw NoIndependentMatching("J rows are dependent");
    tilde.push_back(Multiply(rows, *inv));
  }
  out.omega_tilde = StructuredMatrix(2 * n + k, n + k);
  out.exact = true;
  for (int r = 0; r < 2 * n && out.exact; ++r) {
    for (int c = 0; c < n; ++c) {
      const uint64_t a = tilde[0].at(r, c);
      if (a == 0 && tilde[1].at(r, c) == 0) continue;
      const auto value = Reconstruct(a, primes[0]);
      if (!value || ReduceRational(*value, primes[1]) != tilde[1].at(r, c)) {
        out.exact = false;
        break;
      }
      out.omega_tilde.SetFixed(r, c, *value);
    }
  }
  if (!out.exact) {
    out.omega_tilde = StructuredMatrix(2 * n + k, n + k);
    for (int r = 0; r < 2 * n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (tilde[0].at(r, c) != 0 || tilde[1].at(r, c) != 0) {
          out.omega_tilde.AddFree(r, c);
        }
      }
    }
  }
  for (int q = 0; q < k; ++q) out.omega_tilde.SetFixed(2 * n + q, n + q, 1);
  return out;
}

VertexType AuxGraph::TypeOf(int v) const {
  if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex id");
  if (v < 4 * n) return static_cast<VertexType>(v / n);
  return (v - 4 * n) % 2 == 0 ? VertexType::kUT : VertexType::kUQ;
}

int AuxGraph::StateOf(int v) const {
  if (v < 4 * n) return v % n;
  return inputs.at((v - 4 * n) / 2);
}

std::string AuxGraph::Name(int v) const {
  static const char* kNames[] = {"w%d^T", "w%d^Q", "x%d^T",
                                 "x%d^Q", "u%d^T", "u%d^Q"};
  char buf[32];
  std::snprintf(buf, sizeof(buf), kNames[static_cast<int>(TypeOf(v))],
                StateOf(v));
  return buf;
}

std::vector<std::vector<int>> AuxGraph::Adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count());
  for (const auto& [u, v] : arcs) adj[u].push_back(v);
  return adj;
}

std::vector<std::vector<int>> AuxGraph::ReverseAdjacency() const {
  std::vector<std::vector<int>> adj(vertex_count());
  for (const auto& [u, v] : arcs) adj[v].push_back(u);
  return adj;
}

AuxGraph BuildBaseGraph(const DescriptorSystem& sys, const FieldConfig& cfg) {
  const int n = sys.n;
  const OmegaMatrix omega = BuildOmega(AugmentWithInputs(sys, {}));
  std::optional<MatchingResult> matching = KnownMatching(sys);
  if (!matching || !IsValidMatching(omega, sys, matching->partner, cfg)) {
    matching = FindIndependentMatching(omega, sys, cfg);
  }
  const Completion completion = CompleteAndInvert(omega, matching->J, cfg);
  AuxGraph g;
  g.n = n;
  g.partner = matching->partner;
  g.J = matching->J;
  g.J1 = completion.J1;
  g.columns = completion.columns;
  g.omega_tilde = completion.omega_tilde;
  g.omega_exact = completion.exact;
  std::vector<char> x_in_j(n, 0);
  for (int i = 0; i < n; ++i) {
    if (g.partner[i] >= 0) x_in_j[g.partner[i]] = 1;
  }
  for (int i = 0; i < n; ++i) {
    if (g.partner[i] < 0) {
      g.arcs.insert({g.WQ(i), g.WT(i)});
    } else {
      g.arcs.insert({g.WT(i), g.WQ(i)});
    }
    if (x_in_j[i]) {
      g.arcs.insert({g.XQ(i), g.XT(i)});
    } else {
      g.arcs.insert({g.XT(i), g.XQ(i)});
    }
  }
  for (const auto& [r, c] : FreeSupport(sys)) {
    if (g.partner[r] == c) {
      g.arcs.insert({g.XT(c), g.WT(r)});
    } else {
      g.arcs.insert({g.WT(r), g.XT(c)});
    }
  }
  std::vector<char> in_j(2 * n, 0);
  for (int row : g.J) in_j[row] = 1;
  auto q_vertex = [&](int row) { return row < n ? g.WQ(row) : g.XQ(row - n); };
  for (int row = 0; row < 2 * n; ++row) {
    if (in_j[row]) continue;
    for (int q = 0; q < n; ++q) {
      if (g.omega_tilde.IsNonzeroPattern(row, q)) {
        g.arcs.insert({q_vertex(row), q_vertex(g.columns[q])});
      }
    }
  }
  return g;
}

AuxGraph AddInputEdges(const AuxGraph& base, std::vector<int> states) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  if (!base.inputs.empty()) {
    throw std::invalid_argument("base graph already carries inputs");
  }
  AuxGraph g = base;
  g.inputs = states;
  const int k = static_cast<int>(states.size());
  const int n = base.n;
  g.J1.clear();
  g.columns = base.J;
  StructuredMatrix tilde(2 * n + k, n + k);
  for (const auto& [pos, v] : base.omega_tilde.fixed()) {
    if (pos.first < 2 * n && pos.second < n) tilde.SetFixed(pos.first, pos.second, v);
  }
  for (const auto& pos : base.omega_tilde.free()) {
    if (pos.first < 2 * n && pos.second < n) tilde.AddFree(pos.first, pos.second);
  }
  for (int q = 0; q < k; ++q) {
    const int s = states[q];
    if (s < 0 || s >= n) throw std::out_of_range("input state");
    g.arcs.insert({g.WT(s), g.UT(q)});
    g.arcs.insert({g.UT(q), g.UQ(q)});
    g.J1.push_back(2 * n + q);
    g.columns.push_back(2 * n + q);
    tilde.SetFixed(2 * n + q, n + q, 1);
    g.s_minus.push_back(g.UQ(q));
  }
  g.omega_tilde = tilde;
  return g;
}

Condensation Condense(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  Condensation c;
  c.class_of.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int counter = 0;
  std::vector<std::pair<int, size_t>> call;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < adj[v].size()) {
        const int w = adj[v][next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        const int id = static_cast<int>(c.members.size());
        c.members.emplace_back();
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          c.class_of[w] = id;
          c.members.back().push_back(w);
        } while (w != v);
        std::sort(c.members.back().begin(), c.members.back().end());
      }
      const int finished = v;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().first] = std::min(low[call.back().first], low[finished]);
      }
    }
  }
  const int classes = static_cast<int>(c.members.size());
  c.cyclic.assign(classes, 0);
  std::vector<int> in_deg(classes, 0), out_deg(classes, 0);
  for (int u = 0; u < n; ++u) {
    for (int v : adj[u]) {
      const int cu = c.class_of[u];
      const int cv = c.class_of[v];
      if (cu == cv) {
        c.cyclic[cu] = 1;
      } else if (c.dag_arcs.insert({cu, cv}).second) {
        ++out_deg[cu];
        ++in_deg[cv];
      }
    }
  }
  for (int k = 0; k < classes; ++k) {
    if (in_deg[k] == 0) c.source_classes.push_back(k);
    if (out_deg[k] == 0) c.sink_classes.push_back(k);
  }
  return c;
}

Condensation Condense(const AuxGraph& g) { return Condense(g.Adjacency()); }

std::vector<char> CycleVertices(const std::vector<std::vector<int>>& adj) {
  const Condensation c = Condense(adj);
  std::vector<char> out(adj.size(), 0);
  for (size_t v = 0; v < adj.size(); ++v) out[v] = c.cyclic[c.class_of[v]];
  return out;
}

std::vector<char> ReachesSet(const std::vector<std::vector<int>>& adj,
                             const std::vector<int>& targets) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> rev(n);
  for (int u = 0; u < n; ++u) {
    for (int v : adj[u]) rev[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::deque<int> queue;
  for (int t : targets) {
    if (!seen[t]) {
      seen[t] = 1;
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u : rev[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
    }
  }
  return seen;
}

bool ReachabilitySatisfied(const AuxGraph& g_hat,
                           const std::vector<int>& states) {
  const auto adj = g_hat.Adjacency();
  std::vector<int> targets;
  for (int s : states) targets.push_back(g_hat.WT(s));
  const auto reach = ReachesSet(adj, targets);
  const auto cyc = CycleVertices(adj);
  for (size_t v = 0; v < adj.size(); ++v) {
    if (cyc[v] && !reach[v]) return false;
  }
  return true;
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [sym, c] : other.coeffs) {
    coeffs[sym] += c;
    if (coeffs[sym] == 0) coeffs.erase(sym);
  }
  return *this;
}

bool FormalSum::IsZero() const { return coeffs.empty(); }

std::string FormalSum::ToString(int n) const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [sym, c] : coeffs) {
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << "-";
    first = false;
    const long long a = std::llabs(c);
    if (sym == 2 * n) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << (sym < n ? "r" : "c") << (sym < n ? sym : sym - n);
  }
  return os.str();
}

FormalSum SymbolR(int /*n*/, int i, long long coeff) {
  FormalSum f;
  f.coeffs[i] = coeff;
  return f;
}

FormalSum SymbolC(int n, int i, long long coeff) {
  FormalSum f;
  f.coeffs[n + i] = coeff;
  return f;
}

FormalSum Unit(int n, long long coeff) {
  FormalSum f;
  f.coeffs[2 * n] = coeff;
  return f;
}

namespace {

std::pair<int, int> PairKey(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

GammaAssignment GammaCoefficients(const AuxGraph& g) {
  const int n = g.n;
  std::vector<char> x_in_j(n, 0);
  for (int i = 0; i < n; ++i) {
    if (g.partner[i] >= 0) x_in_j[g.partner[i]] = 1;
  }
  GammaAssignment gamma;
  for (const auto& [u, v] : g.arcs) {
    const auto key = PairKey(u, v);
    const VertexType tu = g.TypeOf(key.first);
    const VertexType tv = g.TypeOf(key.second);
    const int a = g.StateOf(key.first);
    const int b = g.StateOf(key.second);
    FormalSum value;
    if (tu == VertexType::kWT && tv == VertexType::kWQ && a == b) {
      value = SymbolR(n, a, g.partner[a] < 0 ? -1 : 1);
    } else if (tu == VertexType::kXT && tv == VertexType::kXQ && a == b) {
      value = SymbolC(n, a, x_in_j[a] ? -1 : 1);
    } else if (tu == VertexType::kWT && tv == VertexType::kXT) {
      value = Unit(n, g.partner[a] == b ? -1 : 1);
    }
    if (!value.IsZero()) gamma[key] = value;
  }
  return gamma;
}

namespace {

class JohnsonCycles {
 public:
  JohnsonCycles(const std::vector<std::vector<int>>& adj,
                const GammaAssignment& gamma, long long budget)
      : adj_(adj), gamma_(gamma), budget_(budget) {}

  CycleCheck Run() {
    const int n = static_cast<int>(adj_.size());
    blocked_.assign(n, 0);
    block_map_.assign(n, {});
    for (int s = 0; s < n && result_.passed; ++s) {
      // Strongly connected component of s within vertices >= s.
      std::vector<std::vector<int>> sub(n);
      for (int u = s; u < n; ++u) {
        for (int v : adj_[u]) {
          if (v >= s) sub[u].push_back(v);
        }
      }
      const Condensation c = Condense(sub);
      if (!c.cyclic[c.class_of[s]]) continue;
      allowed_.assign(n, 0);
      for (int v : c.members[c.class_of[s]]) allowed_[v] = 1;
      for (int v : c.members[c.class_of[s]]) {
        blocked_[v] = 0;
        block_map_[v].clear();
      }
      start_ = s;
      Circuit(s);
    }
    return result_;
  }

 private:
  bool Circuit(int v) {
    bool found = false;
    stack_.push_back(v);
    blocked_[v] = 1;
    for (int w : adj_[v]) {
      if (!allowed_[w] || !result_.passed) continue;
      if (w == start_) {
        Record();
        found = true;
      } else if (!blocked_[w]) {
        if (Circuit(w)) found = true;
      }
    }
    if (found) {
      Unblock(v);
    } else {
      for (int w : adj_[v]) {
        if (!allowed_[w]) continue;
        auto& list = block_map_[w];
        if (std::find(list.begin(), list.end(), v) == list.end()) {
          list.push_back(v);
        }
      }
    }
    stack_.pop_back();
    return found;
  }

  void Unblock(int u) {
    blocked_[u] = 0;
    std::vector<int> pending;
    pending.swap(block_map_[u]);
    for (int w : pending) {
      if (blocked_[w]) Unblock(w);
    }
  }

  void Record() {
    if (++result_.cycles > budget_) {
      throw CycleBudgetExceeded("more than " + std::to_string(budget_) +
                                " simple cycles");
    }
    FormalSum sum;
    for (size_t i = 0; i < stack_.size(); ++i) {
      const int u = stack_[i];
      const int v = stack_[(i + 1) % stack_.size()];
      auto it = gamma_.find(PairKey(u, v));
      if (it != gamma_.end()) sum += it->second;
    }
    if (!sum.IsZero()) {
      result_.passed = false;
      result_.witness = stack_;
    }
  }

  const std::vector<std::vector<int>>& adj_;
  const GammaAssignment& gamma_;
  long long budget_;
  int start_ = 0;
  std::vector<char> blocked_;
  std::vector<char> allowed_;
  std::vector<std::vector<int>> block_map_;
  std::vector<int> stack_;
  CycleCheck result_;
};

}  // namespace

CycleCheck CycleSumCheck(const std::vector<std::vector<int>>& adjacency,
                         const GammaAssignment& gamma,
                         const std::vector<int>& s_minus, long long budget) {
  const auto reach = ReachesSet(adjacency, s_minus);
  std::vector<std::vector<int>> sub(adjacency.size());
  for (size_t u = 0; u < adjacency.size(); ++u) {
    if (reach[u]) continue;
    for (int v : adjacency[u]) {
      if (!reach[v]) sub[u].push_back(v);
    }
  }
  return JohnsonCycles(sub, gamma, budget).Run();
}

CycleCheck CycleSumCheck(const AuxGraph& g, const GammaAssignment& gamma,
                         long long budget) {
  return CycleSumCheck(g.Adjacency(), gamma, g.s_minus, budget);
}

std::string ToDot(const AuxGraph& g) {
  static const char* kColors[] = {"lightblue", "steelblue", "lightpink",
                                  "indianred", "palegreen", "forestgreen"};
  const Condensation c = Condense(g);
  std::ostringstream os;
  os << "digraph aux {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << g.Name(v) << "\\nclass "
       << c.class_of[v] << "\", style=filled, fillcolor="
       << kColors[static_cast<int>(g.TypeOf(v))] << "];\n";
  }
  for (const auto& [u, v] : g.arcs) os << "  v" << u << " -> v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace inputsel
