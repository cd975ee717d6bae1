// Copyright 2026 The ChannelForge Authors
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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace channelforge {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Numerical conventions used across the library. All thresholds are
// overridable at the call sites that expose them.
namespace tol {
// Rank / Kraus-magnitude cutoff: eigenvalues below this count as zero.
inline constexpr double kRank = 1e-10;
// Support cutoff for pseudo-inversion, applied to the eigenvalues of
// branch sums (squared singular values), not to the singular values
// themselves: exact-zero directions carry eigensolver noise ~1e-15,
// whose square root would otherwise pass any sane singular-value cut.
inline constexpr double kSupport = 1e-12;
// Acceptable residual when a caller hands us something claimed to be an
// isometry / CPTP map.
inline constexpr double kIsometry = 1e-8;
inline constexpr double kChannel = 1e-8;
// Branch probabilities below this are treated as exactly zero.
inline constexpr double kProbabilityFloor = 1e-14;
}  // namespace tol

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotCompletelyPositive : Error {
  NotCompletelyPositive(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue(min_eigenvalue) {}
  double min_eigenvalue;
};

struct NotIsometry : Error {
  NotIsometry(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

struct DecompositionFailure : Error {
  using Error::Error;
};

struct InvalidGenerator : Error {
  using Error::Error;
};

struct NotRelaxing : Error {
  using Error::Error;
};

struct NumericalDeadEnd : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace channelforge
