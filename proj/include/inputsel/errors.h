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

#ifndef INPUTSEL_ERRORS_H_
#define INPUTSEL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace inputsel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PrimeDividesDenominator : public Error {
 public:
  using Error::Error;
};

class NoCommonBasis : public Error {
 public:
  using Error::Error;
};

class KTooSmall : public Error {
 public:
  KTooSmall(const std::string& what, int min_k) : Error(what), min_k_(min_k) {}
  int min_k() const { return min_k_; }

 private:
  int min_k_;
};

class NoIndependentMatching : public Error {
 public:
  using Error::Error;
};

class NotStronglyConnected : public Error {
 public:
  using Error::Error;
};

class CycleBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UnboundedVariance : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  GenerationError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

class UnsolvableSystem : public Error {
 public:
  using Error::Error;
};

}  // namespace inputsel

#endif  // INPUTSEL_ERRORS_H_
