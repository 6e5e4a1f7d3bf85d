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

#ifndef INPUTSEL_FIELD_LINALG_H_
#define INPUTSEL_FIELD_LINALG_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "inputsel/structmat.h"

namespace inputsel {

// Row echelon form in place; returns the rank.
int EliminateInPlace(std::vector<uint64_t>& a, int rows, int cols, uint64_t p);

DenseFieldMatrix Multiply(const DenseFieldMatrix& a, const DenseFieldMatrix& b);
DenseFieldMatrix Transpose(const DenseFieldMatrix& a);

// Rows form a basis of {y : y^T a = 0}.
DenseFieldMatrix LeftNullspace(const DenseFieldMatrix& a);

std::optional<DenseFieldMatrix> Inverse(const DenseFieldMatrix& a);

// Coefficients in ascending degree order.
using Poly = std::vector<uint64_t>;

void TrimPoly(Poly& f);
int PolyDegree(const Poly& f);
Poly PolyGcd(Poly a, Poly b, uint64_t p);

// det(x I - a), monic of degree a.rows().
Poly CharPoly(const DenseFieldMatrix& a);

}  // namespace inputsel

#endif  // INPUTSEL_FIELD_LINALG_H_
