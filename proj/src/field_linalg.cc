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

#include "inputsel/field_linalg.h"

#include <stdexcept>
#include <utility>

namespace inputsel {

int EliminateInPlace(std::vector<uint64_t>& a, int rows, int cols,
                     uint64_t p) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<size_t>(r) * cols + c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    uint64_t* prow = &a[static_cast<size_t>(pivot) * cols];
    if (pivot != rank) {
      uint64_t* rrow = &a[static_cast<size_t>(rank) * cols];
      for (int k = c; k < cols; ++k) std::swap(prow[k], rrow[k]);
      prow = rrow;
    }
    const uint64_t inv = InvMod(prow[c], p);
    for (int r = rank + 1; r < rows; ++r) {
      uint64_t* row = &a[static_cast<size_t>(r) * cols];
      if (row[c] == 0) continue;
      const uint64_t factor = MulMod(row[c], inv, p);
      for (int k = c; k < cols; ++k) {
        if (prow[k] != 0) row[k] = SubMod(row[k], MulMod(factor, prow[k], p), p);
      }
    }
    ++rank;
  }
  return rank;
}

DenseFieldMatrix Multiply(const DenseFieldMatrix& a,
                          const DenseFieldMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  const uint64_t p = a.prime();
  DenseFieldMatrix out(a.rows(), b.cols(), p);
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const uint64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        out.at(i, j) = AddMod(out.at(i, j), MulMod(aik, b.at(k, j), p), p);
      }
    }
  }
  return out;
}

DenseFieldMatrix Transpose(const DenseFieldMatrix& a) {
  DenseFieldMatrix out(a.cols(), a.rows(), a.prime());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  }
  return out;
}

namespace {

// Reduced row echelon form; returns pivot columns.
std::vector<int> ReducedEchelon(DenseFieldMatrix& m) {
  const uint64_t p = m.prime();
  std::vector<int> pivots;
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (m.at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int k = 0; k < m.cols(); ++k) std::swap(m.at(pivot, k), m.at(rank, k));
    const uint64_t inv = InvMod(m.at(rank, c), p);
    for (int k = 0; k < m.cols(); ++k) m.at(rank, k) = MulMod(m.at(rank, k), inv, p);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m.at(r, c) == 0) continue;
      const uint64_t factor = m.at(r, c);
      for (int k = 0; k < m.cols(); ++k) {
        m.at(r, k) = SubMod(m.at(r, k), MulMod(factor, m.at(rank, k), p), p);
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

DenseFieldMatrix LeftNullspace(const DenseFieldMatrix& a) {
  DenseFieldMatrix t = Transpose(a);
  const uint64_t p = a.prime();
  const std::vector<int> pivots = ReducedEchelon(t);
  std::vector<bool> is_pivot(t.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  const int dim = t.cols() - static_cast<int>(pivots.size());
  DenseFieldMatrix basis(dim, t.cols(), p);
  int row = 0;
  for (int f = 0; f < t.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis.at(row, f) = 1;
    for (size_t i = 0; i < pivots.size(); ++i) {
      basis.at(row, pivots[i]) = NegMod(t.at(static_cast<int>(i), f), p);
    }
    ++row;
  }
  return basis;
}

std::optional<DenseFieldMatrix> Inverse(const DenseFieldMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("not square");
  const int n = a.rows();
  DenseFieldMatrix aug(n, 2 * n, a.prime());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const std::vector<int> pivots = ReducedEchelon(aug);
  if (static_cast<int>(pivots.size()) < n ||
      (n > 0 && pivots[n - 1] != n - 1)) {
    return std::nullopt;
  }
  DenseFieldMatrix inv(n, n, a.prime());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  }
  return inv;
}

void TrimPoly(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int PolyDegree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

Poly PolyGcd(Poly a, Poly b, uint64_t p) {
  TrimPoly(a);
  TrimPoly(b);
  while (!b.empty()) {
    const uint64_t inv = InvMod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      const uint64_t factor = MulMod(a.back(), inv, p);
      const size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = SubMod(a[shift + i], MulMod(factor, b[i], p), p);
      }
      TrimPoly(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const uint64_t inv = InvMod(a.back(), p);
    for (auto& c : a) c = MulMod(c, inv, p);
  }
  return a;
}

Poly CharPoly(const DenseFieldMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("not square");
  const int n = a.rows();
  const uint64_t p = a.prime();
  DenseFieldMatrix h = a;
  for (int j = 0; j + 2 < n; ++j) {
    if (h.at(j + 1, j) == 0) {
      int pivot = -1;
      for (int i = j + 2; i < n; ++i) {
        if (h.at(i, j) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) continue;
      for (int k = 0; k < n; ++k) std::swap(h.at(pivot, k), h.at(j + 1, k));
      for (int k = 0; k < n; ++k) std::swap(h.at(k, pivot), h.at(k, j + 1));
    }
    const uint64_t inv = InvMod(h.at(j + 1, j), p);
    for (int i = j + 2; i < n; ++i) {
      if (h.at(i, j) == 0) continue;
      const uint64_t u = MulMod(h.at(i, j), inv, p);
      for (int k = 0; k < n; ++k) {
        h.at(i, k) = SubMod(h.at(i, k), MulMod(u, h.at(j + 1, k), p), p);
      }
      for (int k = 0; k < n; ++k) {
        h.at(k, j + 1) = AddMod(h.at(k, j + 1), MulMod(u, h.at(k, i), p), p);
      }
    }
  }
  std::vector<Poly> chain(n + 1);
  chain[0] = {1};
  for (int k = 0; k < n; ++k) {
    Poly next(k + 2, 0);
    for (int d = 0; d <= k; ++d) {
      next[d + 1] = AddMod(next[d + 1], chain[k][d], p);
      next[d] = SubMod(next[d], MulMod(h.at(k, k), chain[k][d], p), p);
    }
    uint64_t sub = 1;
    for (int i = k - 1; i >= 0; --i) {
      sub = MulMod(sub, h.at(i + 1, i), p);
      if (sub == 0) break;
      const uint64_t coeff = MulMod(h.at(i, k), sub, p);
      if (coeff == 0) continue;
      for (size_t d = 0; d < chain[i].size(); ++d) {
        next[d] = SubMod(next[d], MulMod(coeff, chain[i][d], p), p);
      }
    }
    chain[k + 1] = std::move(next);
  }
  return chain[n];
}

}  // namespace inputsel
