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

#include "inputsel/select.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "inputsel/errors.h"

namespace inputsel {
namespace {

uint64_t ToMask(const ElementSet& s) {
  uint64_t mask = 0;
  for (int e : s) mask |= uint64_t{1} << e;
  return mask;
}

ElementSet FromMask(uint64_t mask, int n) {
  ElementSet s;
  for (int e = 0; e < n; ++e)
    if (mask >> e & 1) s.push_back(e);
  return s;
}

void Attach(const ControllabilityModel& model, const SelectConfig& cfg,
            SelectionResult& r) {
  r.states = model.system().ToStates(r.ground);
  CertificateConfig cc = cfg.certificate;
  cc.field = cfg.field;
  r.certificate = ControllabilityCertificate(
      AugmentWithInputs(model.system(), r.states), cc);
  r.seed = cfg.seed;
}

}  // namespace

SubmodularObjective ModularObjective(std::vector<double> weights) {
  SubmodularObjective f;
  f.ground_size = static_cast<int>(weights.size());
  f.monotone = std::all_of(weights.begin(), weights.end(),
                           [](double w) { return w >= 0; });
  f.name = "modular";
  f.evaluate = [w = std::move(weights)](const ElementSet& s) {
    double total = 0;
    for (int e : s) total += w[e];
    return total;
  };
  return f;
}

SubmodularObjective Memoize(const SubmodularObjective& f) {
  if (f.ground_size > 64) return f;
  auto cache = std::make_shared<std::unordered_map<uint64_t, double>>();
  SubmodularObjective g = f;
  g.evaluate = [cache, inner = f.evaluate](const ElementSet& s) {
    const uint64_t key = ToMask(s);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    const double v = inner(s);
    cache->emplace(key, v);
    return v;
  };
  return g;
}

int DefaultSamples(int k, int n) {
  return std::max(
      1, static_cast<int>(std::ceil(10.0 * k * k * std::log(n + 1.0))));
}

int MinimumFeasibleK(const ControllabilityModel& model, bool single_matroid) {
  if (single_matroid) return model.r1();
  const ElementSet r =
      MaxCardinalityIntersection(*model.m1_star(), *model.m2_star());
  return model.ground_size() - static_cast<int>(r.size());
}

SelectionResult MinInputSet(const ControllabilityModel& model,
                            const SelectConfig& cfg) {
  const int g = model.ground_size();
  model.m1_star()->ResetQueries();
  model.m2_star()->ResetQueries();
  IntersectionStats stats;
  const ElementSet r =
      MaxCardinalityIntersection(*model.m1_star(), *model.m2_star(), &stats);
  SelectionResult out;
  out.algorithm = "min_input_set";
  out.ground = Complement(r, g);
  out.objective = static_cast<double>(out.ground.size());
  out.queries = model.m1_star()->queries() + model.m2_star()->queries();
  for (size_t i = 0; i < stats.path_lengths.size(); ++i)
    out.trace.push_back({"augment", {}, double(stats.path_lengths[i])});
  out.trace.push_back({"complement", r, double(r.size())});
  Attach(model, cfg, out);
  return out;
}

SelectionResult MinInputSet(const DescriptorSystem& sys,
                            const SelectConfig& cfg) {
  ControllabilityModel model(sys, cfg.field);
  return MinInputSet(model, cfg);
}

SelectionResult MinInputSetStrong(const ControllabilityModel& model,
                                  const SelectConfig& cfg) {
  if (!IsStronglyConnected(StateGraph(model.system())))
    throw NotStronglyConnected("state graph is not strongly connected");
  const int g = model.ground_size();
  const Matroid& dual = *model.m1_star();
  dual.ResetQueries();
  ElementSet r;
  for (int e = 0; e < g; ++e) {
    ElementSet trial = WithElement(r, e);
    if (dual.IsIndependent(trial)) r = std::move(trial);
  }
  SelectionResult out;
  out.algorithm = "min_input_set_strong";
  out.queries = dual.queries();
  out.ground = Complement(r, g);
  if (out.ground.empty() && g > 0) {
    out.ground.push_back(0);
    out.trace.push_back({"empty basis complement, added element", {0}, 0});
  }
  out.objective = static_cast<double>(out.ground.size());
  out.trace.push_back({"dual basis", r, double(r.size())});
  Attach(model, cfg, out);
  return out;
}

Estimate MultilinearEstimate(const SubmodularObjective& f,
                             const std::vector<double>& y, int samples,
                             uint64_t seed) {
  if (samples <= 0) throw std::invalid_argument("samples must be positive");
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double sum = 0, sq = 0;
  for (int t = 0; t < samples; ++t) {
    ElementSet s;
    for (int e = 0; e < static_cast<int>(y.size()); ++e)
      if (unit(rng) < y[e]) s.push_back(e);
    const double v = f.evaluate(s);
    sum += v;
    sq += v * v;
  }
  Estimate est;
  est.mean = sum / samples;
  const double var = std::max(0.0, sq / samples - est.mean * est.mean);
  est.std_error = samples > 1 ? std::sqrt(var / (samples - 1)) : 0.0;
  return est;
}

double MultilinearExact(const SubmodularObjective& f,
                        const std::vector<double>& y) {
  const int n = static_cast<int>(y.size());
  if (n > 24) throw std::invalid_argument("ground set too large for exact sum");
  double total = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    double p = 1;
    for (int e = 0; e < n && p != 0; ++e) p *= (mask >> e & 1) ? y[e] : 1 - y[e];
    if (p != 0) total += p * f.evaluate(FromMask(mask, n));
  }
  return total;
}

FractionalPoint ContinuousGreedy(const SubmodularObjective& f,
                                 const Matroid& m1_hat, const Matroid& m2_hat,
                                 int k, int samples_per_estimate,
                                 uint64_t seed, int exact_threshold,
                                 double delta) {
  const int n = m1_hat.ground_size();
  if (m2_hat.ground_size() != n || f.ground_size != n)
    throw std::invalid_argument("ground size mismatch");
  if (k <= 0) throw std::invalid_argument("k must be positive");
  if (delta <= 0) delta = 1.0 / (9.0 * k * k);
  if (samples_per_estimate <= 0) samples_per_estimate = DefaultSamples(k, n);
  const bool exact = n <= exact_threshold && n <= 24;
  std::vector<double> table;
  SubmodularObjective cached = exact ? f : Memoize(f);
  if (exact) {
    table.resize(size_t{1} << n);
    for (uint64_t mask = 0; mask < table.size(); ++mask)
      table[mask] = f.evaluate(FromMask(mask, n));
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  FractionalPoint point;
  point.y.assign(n, 0.0);
  double t = 0;
  std::vector<double> prob;
  while (t < 1.0 - 1e-12) {
    const double step = std::min(delta, 1.0 - t);
    std::vector<double> omega(n, 0.0);
    if (exact) {
      prob.assign(table.size(), 0.0);
      for (uint64_t mask = 0; mask < table.size(); ++mask) {
        double p = 1;
        for (int e = 0; e < n && p != 0; ++e)
          p *= (mask >> e & 1) ? point.y[e] : 1 - point.y[e];
        prob[mask] = p;
      }
      for (uint64_t mask = 0; mask < table.size(); ++mask) {
        if (prob[mask] == 0) continue;
        for (int e = 0; e < n; ++e)
          if (!(mask >> e & 1))
            omega[e] += prob[mask] * (table[mask | uint64_t{1} << e] - table[mask]);
      }
    } else {
      for (int s = 0; s < samples_per_estimate; ++s) {
        ElementSet r;
        std::vector<char> in(n, 0);
        for (int e = 0; e < n; ++e)
          if (unit(rng) < point.y[e]) {
            r.push_back(e);
            in[e] = 1;
          }
        const double base = cached.evaluate(r);
        for (int e = 0; e < n; ++e)
          if (!in[e]) omega[e] += cached.evaluate(WithElement(r, e)) - base;
      }
      for (double& w : omega) w /= samples_per_estimate;
    }
    const ElementSet basis = MaxWeightCommonBasis(m1_hat, m2_hat, omega);
    for (int e : basis) point.y[e] = std::min(1.0, point.y[e] + step);
    if (!point.basis_trace.empty() && point.basis_trace.back().first == basis)
      point.basis_trace.back().second += step;
    else
      point.basis_trace.emplace_back(basis, step);
    t += step;
  }
  return point;
}

ElementSet SwapRound(const FractionalPoint& point, const Matroid& m1_hat,
                     const Matroid& m2_hat, uint64_t seed, SwapStats* stats) {
  if (point.basis_trace.empty()) throw std::invalid_argument("empty trace");
  std::vector<std::pair<ElementSet, double>> bases;
  for (const auto& [b, w] : point.basis_trace) {
    auto it = std::find_if(bases.begin(), bases.end(),
                           [&b = b](const auto& p) { return p.first == b; });
    if (it == bases.end())
      bases.emplace_back(b, w);
    else
      it->second += w;
  }
  std::stable_sort(bases.begin(), bases.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SwapStats local;
  ElementSet c = bases[0].first;
  double beta = bases[0].second;
  auto common = [&](const ElementSet& x) {
    return m1_hat.IsIndependent(x) && m2_hat.IsIndependent(x);
  };
  for (size_t idx = 1; idx < bases.size(); ++idx) {
    ElementSet b = bases[idx].first;
    const double d = bases[idx].second;
    const double keep = beta / (beta + d);
    while (c != b) {
      ElementSet only_c, only_b;
      std::set_difference(c.begin(), c.end(), b.begin(), b.end(),
                          std::back_inserter(only_c));
      std::set_difference(b.begin(), b.end(), c.begin(), c.end(),
                          std::back_inserter(only_b));
      bool found = false;
      for (int i : only_c) {
        for (int j : only_b) {
          ElementSet c2 = WithElement(WithoutElement(c, i), j);
          ElementSet b2 = WithElement(WithoutElement(b, j), i);
          if (!common(c2) || !common(b2)) continue;
          if (unit(rng) < keep)
            b = std::move(b2);
          else
            c = std::move(c2);
          ++local.swaps;
          found = true;
          break;
        }
        if (found) break;
      }
      if (!found) {
        ++local.fallbacks;
        if (unit(rng) >= keep) c = b;
        break;
      }
    }
    beta += d;
  }
  if (stats) *stats = local;
  return c;
}

SelectionResult SelectJoint(const ControllabilityModel& model,
                            const SubmodularObjective& f, int k,
                            const SelectConfig& cfg) {
  const int g = model.ground_size();
  if (k > g) throw std::invalid_argument("k exceeds ground size");
  const int min_k = MinimumFeasibleK(model, cfg.single_matroid);
  if (k < min_k) throw KTooSmall("no controllable set of size k", min_k);
  const MatroidPtr m1 = model.M1Hat(k);
  const MatroidPtr m2 = cfg.single_matroid ? m1 : model.M2Hat(k);
  m1->ResetQueries();
  m2->ResetQueries();
  const FractionalPoint point =
      ContinuousGreedy(f, *m1, *m2, k, cfg.samples_per_estimate, cfg.seed,
                       cfg.exact_threshold, cfg.delta);
  SwapStats stats;
  SelectionResult out;
  out.algorithm = cfg.single_matroid ? "select_joint_strong" : "select_joint";
  out.ground = SwapRound(point, *m1, *m2, cfg.seed + 1, &stats);
  out.objective = f.evaluate(out.ground);
  out.queries = m1->queries() + (m2 == m1 ? 0 : m2->queries());
  for (const auto& [b, w] : point.basis_trace) out.trace.push_back({"basis", b, w});
  out.trace.push_back({"swaps", {}, double(stats.swaps)});
  out.trace.push_back({"fallbacks", {}, double(stats.fallbacks)});
  out.decomposition["min_k"] = min_k;
  Attach(model, cfg, out);
  return out;
}

SelectionResult SelectJointModular(const ControllabilityModel& model,
                                   const std::vector<double>& weights, int k,
                                   const SelectConfig& cfg) {
  const int g = model.ground_size();
  if (static_cast<int>(weights.size()) != g)
    throw std::invalid_argument("weight vector size mismatch");
  if (k > g) throw std::invalid_argument("k exceeds ground size");
  const int min_k = MinimumFeasibleK(model, cfg.single_matroid);
  if (k < min_k) throw KTooSmall("no controllable set of size k", min_k);
  const MatroidPtr m1 = model.M1Hat(k);
  const MatroidPtr m2 = cfg.single_matroid ? m1 : model.M2Hat(k);
  SelectionResult out;
  out.algorithm = "select_joint_modular";
  out.ground = MaxWeightCommonBasis(*m1, *m2, weights);
  for (int e : out.ground) out.objective += weights[e];
  out.decomposition["min_k"] = min_k;
  Attach(model, cfg, out);
  return out;
}

SelectionResult SelectTradeoff(const ControllabilityModel& model,
                               const SubmodularObjective& f, double eta, int k,
                               bool strong, const SelectConfig& cfg) {
  const int g = model.ground_size();
  if (k < 0) throw std::invalid_argument("negative k");
  k = std::min(k, g);
  auto penalty = [&](const ElementSet& s) {
    return strong ? double(model.GciStrong(s))
                  : double(model.GciC1(s) + model.GciC2(s));
  };
  auto value = [&](const ElementSet& s) {
    return f.evaluate(s) + eta * penalty(s);
  };
  SelectionResult out;
  out.algorithm = strong ? "select_tradeoff_strong" : "select_tradeoff";
  ElementSet s;
  for (int step = 0; step < k; ++step) {
    int best = -1;
    double best_value = 0;
    for (int e = 0; e < g; ++e) {
      if (Contains(s, e)) continue;
      const double v = value(WithElement(s, e));
      const double tol = 1e-12 * std::max(1.0, std::abs(best_value));
      if (best < 0 || v > best_value + tol) {
        best = e;
        best_value = v;
      }
    }
    s = WithElement(s, best);
    out.trace.push_back({"add " + std::to_string(best), s, best_value});
  }
  out.ground = s;
  out.objective = value(s);
  out.decomposition["f"] = f.evaluate(s);
  if (strong) {
    out.decomposition["c"] = model.GciStrong(s);
  } else {
    out.decomposition["c1"] = model.GciC1(s);
    out.decomposition["c2"] = model.GciC2(s);
  }
  Attach(model, cfg, out);
  return out;
}

}  // namespace inputsel
