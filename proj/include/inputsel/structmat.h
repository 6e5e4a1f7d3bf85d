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

#ifndef INPUTSEL_STRUCTMAT_H_
#define INPUTSEL_STRUCTMAT_H_

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace inputsel {

using Rational = boost::rational<long long>;
using Rng = std::mt19937_64;

Rational ParseRational(std::string_view text);
std::string FormatRational(const Rational& value);

inline constexpr uint64_t kDefaultPrime = 2147483647ULL;

// Primes above 2^30, tried in order when a denominator vanishes mod p.
const std::vector<uint64_t>& FallbackPrimes();

struct FieldConfig {
  uint64_t prime = kDefaultPrime;
  int trials = 3;
  uint64_t seed = 1;

  void Validate() const;
};

inline uint64_t AddMod(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline uint64_t SubMod(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline uint64_t MulMod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
inline uint64_t NegMod(uint64_t a, uint64_t p) { return a == 0 ? 0 : p - a; }
uint64_t PowMod(uint64_t base, uint64_t exp, uint64_t p);
uint64_t InvMod(uint64_t a, uint64_t p);
uint64_t DrawNonzero(uint64_t p, Rng& draw);

// Throws PrimeDividesDenominator.
uint64_t ReduceRational(const Rational& value, uint64_t p);

class DenseFieldMatrix {
 public:
  DenseFieldMatrix() = default;
  DenseFieldMatrix(int rows, int cols, uint64_t prime);

  static DenseFieldMatrix Identity(int n, uint64_t prime);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint64_t prime() const { return prime_; }

  uint64_t& at(int r, int c) { return entries_[r * cols_ + c]; }
  uint64_t at(int r, int c) const { return entries_[r * cols_ + c]; }
  const std::vector<uint64_t>& entries() const { return entries_; }
  std::vector<uint64_t>& mutable_entries() { return entries_; }

  DenseFieldMatrix SelectRows(const std::vector<int>& rows) const;
  DenseFieldMatrix SelectColumns(const std::vector<int>& cols) const;

  bool operator==(const DenseFieldMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  uint64_t prime_ = kDefaultPrime;
  std::vector<uint64_t> entries_;
};

using Position = std::pair<int, int>;

class StructuredMatrix {
 public:
  StructuredMatrix() = default;
  StructuredMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // A zero value removes the fixed entry.
  void SetFixed(int r, int c, const Rational& value);
  void AddFree(int r, int c);
  bool IsFree(int r, int c) const { return free_.count({r, c}) > 0; }
  Rational FixedAt(int r, int c) const;
  bool IsNonzeroPattern(int r, int c) const;

  const std::map<Position, Rational>& fixed() const { return fixed_; }
  const std::set<Position>& free() const { return free_; }

  bool operator==(const StructuredMatrix& other) const = default;

 private:
  void CheckBounds(int r, int c) const;

  int rows_ = 0;
  int cols_ = 0;
  std::map<Position, Rational> fixed_;
  std::set<Position> free_;
};

// Free positions are visited in sorted order, one draw each.
DenseFieldMatrix Substitute(const StructuredMatrix& m, uint64_t prime,
                            Rng& draw);
DenseFieldMatrix Substitute(const StructuredMatrix& m, const FieldConfig& cfg,
                            Rng& draw);
DenseFieldMatrix ReduceFixed(const StructuredMatrix& m, uint64_t prime);

int RankGf(const DenseFieldMatrix& d);

int GenericRank(const StructuredMatrix& m, const FieldConfig& cfg);

}  // namespace inputsel

#endif  // INPUTSEL_STRUCTMAT_H_
