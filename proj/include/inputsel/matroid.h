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

#ifndef INPUTSEL_MATROID_H_
#define INPUTSEL_MATROID_H_

#include <atomic>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "inputsel/structmat.h"

namespace inputsel {

// Sorted, duplicate free.
using ElementSet = std::vector<int>;

ElementSet Normalize(ElementSet x);
ElementSet Complement(const ElementSet& x, int ground_size);
ElementSet FullSet(int ground_size);
ElementSet WithElement(const ElementSet& x, int e);
ElementSet WithoutElement(const ElementSet& x, int e);
bool Contains(const ElementSet& x, int e);

class Matroid {
 public:
  explicit Matroid(int ground_size);
  virtual ~Matroid() = default;

  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  int ground_size() const { return ground_size_; }
  virtual std::string kind() const = 0;

  // Both validate the argument; only IsIndependent is counted as a query.
  bool IsIndependent(const ElementSet& x) const;
  int Rank(const ElementSet& x) const;
  int FullRank() const;

  long queries() const { return queries_.load(); }
  void ResetQueries() const { queries_.store(0); }

 protected:
  virtual bool DoIsIndependent(const ElementSet& x) const = 0;
  // Greedy scan in ascending index order.
  virtual int DoRank(const ElementSet& x) const;

  friend class UnionMatroid;
  friend class DualMatroid;

 private:
  void Check(const ElementSet& x) const;

  int ground_size_;
  mutable std::atomic<long> queries_{0};
};

using MatroidPtr = std::shared_ptr<const Matroid>;

class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int ground_size, int k);
  std::string kind() const override { return "uniform"; }
  int k() const { return k_; }

 protected:
  bool DoIsIndependent(const ElementSet& x) const override;
  int DoRank(const ElementSet& x) const override;

 private:
  int k_;
};

// Column matroid of a matrix over GF(p), fixed at one substitution.
class LinearMatroid : public Matroid {
 public:
  explicit LinearMatroid(DenseFieldMatrix columns);
  static std::shared_ptr<LinearMatroid> FromStructured(
      const StructuredMatrix& m, const FieldConfig& cfg);

  std::string kind() const override { return "linear"; }
  const DenseFieldMatrix& matrix() const { return columns_; }

 protected:
  bool DoIsIndependent(const ElementSet& x) const override;
  int DoRank(const ElementSet& x) const override;

 private:
  DenseFieldMatrix columns_;
};

class UnionMatroid : public Matroid {
 public:
  UnionMatroid(MatroidPtr left, MatroidPtr right);
  std::string kind() const override { return "union"; }

  // Largest partitionable subset of x, split as (left part, right part).
  std::pair<ElementSet, ElementSet> Partition(const ElementSet& x) const;

 protected:
  bool DoIsIndependent(const ElementSet& x) const override;
  int DoRank(const ElementSet& x) const override;

 private:
  MatroidPtr left_;
  MatroidPtr right_;
  const UniformMatroid* uniform_ = nullptr;
  const Matroid* other_ = nullptr;
};

class DualMatroid : public Matroid {
 public:
  explicit DualMatroid(MatroidPtr inner);
  std::string kind() const override { return "dual"; }
  const MatroidPtr& inner() const { return inner_; }

 protected:
  bool DoIsIndependent(const ElementSet& x) const override;
  int DoRank(const ElementSet& x) const override;

 private:
  MatroidPtr inner_;
  int inner_full_rank_;
};

// class_of[e] < 0 marks a loop; capacity one per class.
class PartitionMatroid : public Matroid {
 public:
  explicit PartitionMatroid(std::vector<int> class_of);
  std::string kind() const override { return "partition"; }
  const std::vector<int>& class_of() const { return class_of_; }

 protected:
  bool DoIsIndependent(const ElementSet& x) const override;
  int DoRank(const ElementSet& x) const override;

 private:
  std::vector<int> class_of_;
};

class RankDefinedMatroid : public Matroid {
 public:
  using RankFn = std::function<int(const ElementSet&)>;
  RankDefinedMatroid(int ground_size, RankFn rank, std::string tag = "rank");
  std::string kind() const override { return tag_; }

 protected:
  bool DoIsIndependent(const ElementSet& x) const override;
  int DoRank(const ElementSet& x) const override;

 private:
  RankFn rank_;
  std::string tag_;
};

MatroidPtr MakeUniform(int ground_size, int k);
MatroidPtr MakeDual(MatroidPtr inner);
MatroidPtr MakeUnion(MatroidPtr left, MatroidPtr right);

struct IntersectionStats {
  int augmentations = 0;
  std::vector<int> path_lengths;
};

// Shortest augmenting paths; ties go to the lexicographically smallest
// vertex sequence.
ElementSet MaxCardinalityIntersection(const Matroid& m1, const Matroid& m2,
                                      IntersectionStats* stats = nullptr);

// Throws NoCommonBasis.
ElementSet MaxWeightCommonBasis(const Matroid& m1, const Matroid& m2,
                                const std::vector<double>& weights);

bool IsCommonBasis(const Matroid& m1, const Matroid& m2, const ElementSet& x);

}  // namespace inputsel

#endif  // INPUTSEL_MATROID_H_
