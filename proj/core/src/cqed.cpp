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

#include "channelforge/cqed.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace channelforge {

const CqedRound& CqedCircuit::round(const BinaryLabel& label) const {
  return levels.at(static_cast<std::size_t>(label.level()))
      .at(static_cast<std::size_t>(label.index()));
}

EntanglerAngles angles_from_singulars(const RealVector& s0, const RealVector& s1,
                                      double tolerance) {
  if (s0.size() != s1.size())
    throw DimensionMismatch("angles_from_singulars: size mismatch");
  EntanglerAngles angles;
  angles.theta.reserve(static_cast<std::size_t>(s0.size()));
  for (Index i = 0; i < s0.size(); ++i) {
    if (s0(i) < 0.0 || s1(i) < 0.0)
      throw NotIsometry("angles_from_singulars: singular values must be nonnegative",
                        std::min(s0(i), s1(i)));
    const double norm = s0(i) * s0(i) + s1(i) * s1(i);
    if (std::abs(norm - 1.0) > tolerance)
      throw NotIsometry("angles_from_singulars: s0² + s1² must equal 1",
                        std::abs(norm - 1.0));
    angles.theta.push_back(2.0 * std::atan2(s1(i), s0(i)));
  }
  return angles;
}

namespace {

bool has_repeated_values(const RealVector& values, double gap) {
  for (Index i = 0; i + 1 < values.size(); ++i)
    if (std::abs(values(i) - values(i + 1)) < gap) return true;
  return false;
}

}  // namespace

CqedRound decompose_round(const TreeNode& node, double tolerance) {
  const Index d = node.block0.rows();
  const double residual = node.isometry_residual();
  if (residual > tolerance)
    throw DecompositionFailure(
        "decompose_round: node blocks are not an isometry (residual " +
        std::to_string(residual) + "), no common pre-rotation exists");

  // block0†block0 = V S₀² V† with S₀ descending; the isometry constraint
  // forces block1†block1 = V (I − S₀²) V† with the complementary singular
  // values ascending, so V serves both blocks.
  const EigenSystem gram = hermitian_eigs(node.block0.adjoint() * node.block0);

  CqedRound round;
  round.label = node.label;
  round.v = gram.vectors;

  // Sector weights of an isometry pair are at most 1, so the support floor
  // is absolute here.
  ImageFrame f0 = orthonormal_image_frame(node.block0, round.v, tol::kSupport);
  ImageFrame f1 = orthonormal_image_frame(node.block1, round.v, tol::kSupport);
  round.w0 = std::move(f0.u);
  round.w1 = std::move(f1.u);
  round.degenerate =
      f0.completed_any || f1.completed_any || has_repeated_values(gram.values, 1e-12);

  // Ascending/descending duality check for the complementary singulars,
  // on the squares to avoid sqrt noise amplification near the endpoints.
  for (Index i = 0; i < d; ++i) {
    const double sum = f0.s(i) * f0.s(i) + f1.s(i) * f1.s(i);
    if (std::abs(sum - 1.0) > tolerance)
      throw DecompositionFailure(
          "decompose_round: complementary singular values do not pair up "
          "(non-isometric input)");
  }

  round.angles = angles_from_singulars(f0.s, f1.s, tolerance);
  return round;
}

std::pair<Matrix, Matrix> reconstruct_blocks(const CqedRound& round) {
  const Index d = round.v.rows();
  RealVector cos_half(d);
  RealVector sin_half(d);
  for (Index i = 0; i < d; ++i) {
    cos_half(i) = std::cos(round.angles.theta[static_cast<std::size_t>(i)] / 2.0);
    sin_half(i) = std::sin(round.angles.theta[static_cast<std::size_t>(i)] / 2.0);
  }
  return {round.w0 * cos_half.asDiagonal() * round.v.adjoint(),
          round.w1 * sin_half.asDiagonal() * round.v.adjoint()};
}

Matrix entangler_unitary(const EntanglerAngles& angles) {
  const Index d = static_cast<Index>(angles.theta.size());
  Matrix u = Matrix::Zero(2 * d, 2 * d);
  for (Index i = 0; i < d; ++i) {
    const double c = std::cos(angles.theta[static_cast<std::size_t>(i)] / 2.0);
    const double s = std::sin(angles.theta[static_cast<std::size_t>(i)] / 2.0);
    u(i, i) = c;
    u(i, d + i) = -s;
    u(d + i, i) = s;
    u(d + i, d + i) = c;
  }
  return u;
}

Matrix round_unitary(const CqedRound& round) {
  const Index d = round.v.rows();
  const Matrix ent = entangler_unitary(round.angles);
  Matrix left = Matrix::Zero(2 * d, 2 * d);
  left.topLeftCorner(d, d) = round.w0;
  left.bottomRightCorner(d, d) = round.w1;
  Matrix right = Matrix::Zero(2 * d, 2 * d);
  right.topLeftCorner(d, d) = round.v.adjoint();
  right.bottomRightCorner(d, d) = round.v.adjoint();
  return left * ent * right;
}

CqedCircuit decompose_circuit(const AdaptiveCircuit& circuit, double tolerance) {
  CqedCircuit out;
  out.dim = circuit.dim;
  out.depth = circuit.depth;
  out.levels.reserve(circuit.levels.size());
  for (const auto& level : circuit.levels) {
    std::vector<CqedRound> rounds;
    rounds.reserve(level.size());
    for (const TreeNode& node : level) rounds.push_back(decompose_round(node, tolerance));
    out.levels.push_back(std::move(rounds));
  }
  return out;
}

}  // namespace channelforge
