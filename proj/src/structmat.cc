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

#include "inputsel/structmat.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "inputsel/errors.h"
#include "inputsel/field_linalg.h"

namespace inputsel {
namespace {

long long ParseInteger(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad integer: " + std::string(text));
  }
  return value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInteger(text));
  const long long num = ParseInteger(text.substr(0, slash));
  const long long den = ParseInteger(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

std::string FormatRational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

const std::vector<uint64_t>& FallbackPrimes() {
  static const std::vector<uint64_t> primes = {
      2147483647ULL, 2147483629ULL, 2147483587ULL, 2147483579ULL,
      1073741789ULL};
  return primes;
}

void FieldConfig::Validate() const {
  if (prime < (1ULL << 30)) throw std::invalid_argument("prime below 2^30");
  if (prime >= (1ULL << 62)) throw std::invalid_argument("prime too large");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
}

uint64_t PowMod(uint64_t base, uint64_t exp, uint64_t p) {
  uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, p);
    base = MulMod(base, base, p);
    exp >>= 1;
  }
  return result;
}

uint64_t InvMod(uint64_t a, uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero");
  return PowMod(a, p - 2, p);
}

uint64_t DrawNonzero(uint64_t p, Rng& draw) {
  std::uniform_int_distribution<uint64_t> dist(1, p - 1);
  return dist(draw);
}

uint64_t ReduceRational(const Rational& value, uint64_t p) {
  const long long pp = static_cast<long long>(p);
  long long num = value.numerator() % pp;
  if (num < 0) num += pp;
  long long den = value.denominator() % pp;
  if (den < 0) den += pp;
  if (den == 0) {
    throw PrimeDividesDenominator("denominator " + FormatRational(value) +
                                  " vanishes mod " + std::to_string(p));
  }
  return MulMod(static_cast<uint64_t>(num), InvMod(den, p), p);
}

DenseFieldMatrix::DenseFieldMatrix(int rows, int cols, uint64_t prime)
    : rows_(rows), cols_(cols), prime_(prime),
      entries_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative shape");
}

DenseFieldMatrix DenseFieldMatrix::Identity(int n, uint64_t prime) {
  DenseFieldMatrix m(n, n, prime);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DenseFieldMatrix DenseFieldMatrix::SelectRows(
    const std::vector<int>& rows) const {
  DenseFieldMatrix out(static_cast<int>(rows.size()), cols_, prime_);
  for (size_t i = 0; i < rows.size(); ++i) {
    std::copy_n(entries_.begin() + static_cast<size_t>(rows[i]) * cols_, cols_,
                out.entries_.begin() + i * cols_);
  }
  return out;
}

DenseFieldMatrix DenseFieldMatrix::SelectColumns(
    const std::vector<int>& cols) const {
  DenseFieldMatrix out(rows_, static_cast<int>(cols.size()), prime_);
  for (int r = 0; r < rows_; ++r) {
    for (size_t j = 0; j < cols.size(); ++j) {
      out.at(r, static_cast<int>(j)) = at(r, cols[j]);
    }
  }
  return out;
}

StructuredMatrix::StructuredMatrix(int rows, int cols)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative shape");
}

void StructuredMatrix::CheckBounds(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw std::out_of_range("position (" + std::to_string(r) + "," +
                            std::to_string(c) + ") outside matrix");
  }
}

void StructuredMatrix::SetFixed(int r, int c, const Rational& value) {
  CheckBounds(r, c);
  if (value.numerator() == 0) {
    fixed_.erase({r, c});
  } else {
    fixed_[{r, c}] = value;
  }
}

void StructuredMatrix::AddFree(int r, int c) {
  CheckBounds(r, c);
  free_.insert({r, c});
}

Rational StructuredMatrix::FixedAt(int r, int c) const {
  auto it = fixed_.find({r, c});
  return it == fixed_.end() ? Rational(0) : it->second;
}

bool StructuredMatrix::IsNonzeroPattern(int r, int c) const {
  return IsFree(r, c) || fixed_.count({r, c}) > 0;
}

DenseFieldMatrix ReduceFixed(const StructuredMatrix& m, uint64_t prime) {
  DenseFieldMatrix d(m.rows(), m.cols(), prime);
  for (const auto& [pos, value] : m.fixed()) {
    d.at(pos.first, pos.second) = ReduceRational(value, prime);
  }
  return d;
}

DenseFieldMatrix Substitute(const StructuredMatrix& m, uint64_t prime,
                            Rng& draw) {
  DenseFieldMatrix d = ReduceFixed(m, prime);
  for (const auto& pos : m.free()) {
    uint64_t& e = d.at(pos.first, pos.second);
    e = AddMod(e, DrawNonzero(prime, draw), prime);
  }
  return d;
}

DenseFieldMatrix Substitute(const StructuredMatrix& m, const FieldConfig& cfg,
                            Rng& draw) {
  cfg.Validate();
  return Substitute(m, cfg.prime, draw);
}

int RankGf(const DenseFieldMatrix& d) {
  std::vector<uint64_t> a = d.entries();
  return EliminateInPlace(a, d.rows(), d.cols(), d.prime());
}

int GenericRank(const StructuredMatrix& m, const FieldConfig& cfg) {
  cfg.Validate();
  std::vector<uint64_t> primes = {cfg.prime};
  for (uint64_t q : FallbackPrimes()) {
    if (q != cfg.prime) primes.push_back(q);
  }
  for (uint64_t prime : primes) {
    try {
      Rng draw(cfg.seed);
      int best = 0;
      for (int t = 0; t < cfg.trials; ++t) {
        best = std::max(best, RankGf(Substitute(m, prime, draw)));
      }
      return best;
    } catch (const PrimeDividesDenominator&) {
    }
  }
  throw PrimeDividesDenominator("every fallback prime divides a denominator");
}

}  // namespace inputsel
