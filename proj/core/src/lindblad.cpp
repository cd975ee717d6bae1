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

#include "channelforge/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

namespace channelforge {

LindbladSpec::LindbladSpec(Index dim, Matrix hamiltonian, std::vector<Matrix> jumps,
                           Matrix coeffs)
    : dim(dim),
      hamiltonian(std::move(hamiltonian)),
      jumps(std::move(jumps)),
      coeffs(std::move(coeffs)) {
  if (this->hamiltonian.rows() != dim || this->hamiltonian.cols() != dim)
    throw DimensionMismatch("LindbladSpec: Hamiltonian must be d×d");
  for (const Matrix& jump : this->jumps)
    if (jump.rows() != dim || jump.cols() != dim)
      throw DimensionMismatch("LindbladSpec: jump operators must be d×d");
  const Index n = static_cast<Index>(this->jumps.size());
  if (this->coeffs.rows() != n || this->coeffs.cols() != n)
    throw DimensionMismatch("LindbladSpec: coefficient matrix must be n×n");
}

LindbladSpec LindbladSpec::standard(Matrix hamiltonian, std::vector<Matrix> jumps) {
  const Index d = hamiltonian.rows();
  const Index n = static_cast<Index>(jumps.size());
  return LindbladSpec(d, std::move(hamiltonian), std::move(jumps),
                      Matrix::Identity(n, n));
}

SuperOperator lindblad_superop(const LindbladSpec& spec) {
  const Index d = spec.dim;
  const Matrix eye = Matrix::Identity(d, d);

  if ((spec.hamiltonian - spec.hamiltonian.adjoint()).norm() > tol::kIsometry)
    throw InvalidGenerator("lindblad_superop: Hamiltonian is not Hermitian");
  if (!spec.jumps.empty()) {
    const EigenSystem h_eigs = hermitian_eigs(spec.coeffs);
    if ((spec.coeffs - spec.coeffs.adjoint()).norm() > tol::kIsometry ||
        h_eigs.values(h_eigs.values.size() - 1) < -tol::kIsometry)
      throw InvalidGenerator("lindblad_superop: coefficient matrix is not PSD");
  }

  // Row stacking: vec(AρB) = (A ⊗ Bᵀ) vec(ρ).
  Matrix gen = Complex(0.0, -1.0) *
               (kron(spec.hamiltonian, eye) - kron(eye, spec.hamiltonian.transpose()));
  const Index n = static_cast<Index>(spec.jumps.size());
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Complex h = spec.coeffs(a, b);
      if (h == Complex(0.0, 0.0)) continue;
      const Matrix& ln = spec.jumps[static_cast<std::size_t>(a)];
      const Matrix& lm = spec.jumps[static_cast<std::size_t>(b)];
      const Matrix lml = lm.adjoint() * ln;
      gen += h * (kron(ln, lm.conjugate()) -
                  0.5 * kron(eye, lml.transpose()) - 0.5 * kron(lml, eye));
    }
  }
  return SuperOperator(d, std::move(gen));
}

SuperOperator exp_superop(const SuperOperator& generator, double t) {
  if (t < 0.0) throw InvalidGenerator("exp_superop: time must be nonnegative");
  // Scaling and squaring at the superoperator level: bring the argument norm
  // down to O(10) before the Padé kernel, then square the resulting channel.
  // Squaring a channel matrix is stable where a single astronomical-norm
  // Padé evaluation slowly loses trace preservation.
  double norm = generator.t.norm() * t;
  int squarings = 0;
  while (norm > 32.0 && squarings < 64) {
    norm /= 2.0;
    ++squarings;
  }
  Matrix result = matrix_exp(generator.t * std::ldexp(t, -squarings));
  for (int k = 0; k < squarings; ++k) result = result * result;
  return SuperOperator(generator.dim, std::move(result));
}

namespace {

ChannelSpec validated_channel(SuperOperator superop, double threshold,
                              double validation_tolerance, std::string label) {
  ChannelSpec as_spec = ChannelSpec::from_superop(std::move(superop));
  const ValidationReport report = validate_cptp(as_spec, validation_tolerance);
  if (!report.passed)
    throw InvalidGenerator(
        "exponential is not CPTP within tolerance (completeness residual " +
        std::to_string(report.completeness_residual) + ", Choi min eigenvalue " +
        std::to_string(report.choi_min_eigenvalue) + "); bad generator or truncation artifact");
  ChannelSpec out = ChannelSpec::from_kraus(
      choi_to_kraus(as_choi(as_spec), threshold), std::move(label));
  return out;
}

}  // namespace

ChannelSpec exp_channel(const SuperOperator& generator, double t, double threshold,
                        double validation_tolerance) {
  return validated_channel(exp_superop(generator, t), threshold, validation_tolerance,
                           "exp(L t), t=" + std::to_string(t));
}

SteadyChannelResult steady_channel(const SuperOperator& generator, double convergence,
                                   int max_doublings) {
  // Start the doubling at the generator's own time scale so each step
  // squares a well-resolved channel; fast pumps (e.g. quartic jumps) would
  // otherwise begin many decades past their transients.
  double time = 1.0 / std::max(1.0, generator.t.norm());
  SuperOperator current = exp_superop(generator, time);
  double best_residual = std::numeric_limits<double>::infinity();
  double best_time = 0.0;
  for (int k = 0; k < max_doublings; ++k) {
    Matrix doubled = current.t * current.t;
    // Generators whose kernel is only approximate (any truncated problem)
    // drift indefinitely at large t and eventually overflow under squaring;
    // stop scanning once the iteration leaves the representable range.
    if (!doubled.allFinite()) break;
    const double residual = (doubled - current.t).norm();
    if (residual < best_residual) {
      best_residual = residual;
      best_time = 2.0 * time;
    }
    if (residual < convergence) {
      SteadyChannelResult result;
      // A limit accepted at `convergence` is only trustworthy at that scale.
      result.channel =
          validated_channel(SuperOperator(generator.dim, std::move(doubled)),
                            tol::kRank, std::max(tol::kChannel, convergence),
                            "relaxation limit");
      result.time = 2.0 * time;
      result.residual = residual;
      result.doublings = k + 1;
      return result;
    }
    current.t = std::move(doubled);
    time *= 2.0;
  }
  std::ostringstream what;
  what << "steady_channel: no convergence within the doubling cap (best residual "
       << best_residual << " at t = " << best_time
       << "); the channel keeps drifting at this tolerance";
  throw NotRelaxing(what.str());
}

}  // namespace channelforge
