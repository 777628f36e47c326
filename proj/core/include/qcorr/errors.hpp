// Copyright 2026 The qcorr Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

/// Base class for all qcorr errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix that should be Hermitian is not; carries the largest deviation.
class NotHermitian : public Error {
 public:
  explicit NotHermitian(double deviation)
      : Error("matrix is not Hermitian: max |m(i,j) - conj(m(j,i))| = " +
              std::to_string(deviation)),
        deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

/// A state whose trace differs from one beyond tolerance.
class TraceNotOne : public Error {
 public:
  explicit TraceNotOne(double trace)
      : Error("state trace is not one: trace = " + std::to_string(trace)),
        trace_(trace) {}
  double trace() const { return trace_; }

 private:
  double trace_;
};

/// A state with an eigenvalue below the clamping window.
class NotPositive : public Error {
 public:
  explicit NotPositive(double min_eigenvalue)
      : Error("state is not positive semidefinite: min eigenvalue = " +
              std::to_string(min_eigenvalue)),
        min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// The Jacobi eigensolver exhausted its sweep budget.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// A projector pair does not sum to the identity or is not orthogonal.
class IncompleteProjectorSet : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the documented domain of an operation.
class ParamOutOfRange : public Error {
 public:
  using Error::Error;
};

/// The integrator produced a state violating the density-matrix invariants.
class StateInvariantViolated : public Error {
 public:
  using Error::Error;
};

/// A log-linear fit was requested on data that is not strictly positive.
class NonPositiveData : public Error {
 public:
  using Error::Error;
};

/// All measurement outcomes were null (cannot happen for unit-trace states).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or value list.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcorr
