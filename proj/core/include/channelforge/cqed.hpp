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

#include "channelforge/tree.hpp"

namespace channelforge {

// Rotation angles of the photon-number-selective entangler: θₙ ∈ [0, π] for
// subspace n = 0..d−1. The entangler block structure is
// [[diag cos θ/2, −diag sin θ/2], [diag sin θ/2, diag cos θ/2]].
struct EntanglerAngles {
  std::vector<double> theta;
};

// Hardware-native factorization of one round: a common system pre-rotation
// applied as V†, the entangler, and measurement-conditioned post-rotations
// W₀ / W₁, so that ⟨0|U|0⟩ = W₀ S₀ V† and ⟨1|U|0⟩ = W₁ S₁ V†.
struct CqedRound {
  BinaryLabel label;
  Matrix v;
  Matrix w0;
  Matrix w1;
  EntanglerAngles angles;
  // Set when the common-V choice was not unique (repeated singular values or
  // empty entangler sectors) and the deterministic completion kicked in.
  bool degenerate = false;
};

struct CqedCircuit {
  Index dim = 0;
  int depth = 0;
  std::vector<std::vector<CqedRound>> levels;

  const CqedRound& round(const BinaryLabel& label) const;
};

// θₙ = 2·atan2(s1ₙ, s0ₙ) for paired nonnegative singular values with
// s0ₙ² + s1ₙ² = 1. Throws NotIsometry when the normalization fails.
EntanglerAngles angles_from_singulars(const RealVector& s0, const RealVector& s1,
                                      double tolerance = tol::kIsometry);

// Factors a node with S₀ descending (hence S₁ ascending); the common V comes
// from the eigendecomposition of block0†block0 and the W columns are the
// normalized block images, completed deterministically on empty sectors.
// Throws DecompositionFailure for non-isometric input blocks.
CqedRound decompose_round(const TreeNode& node, double tolerance = tol::kIsometry);

// (W₀ diag(cos θ/2) V†, W₁ diag(sin θ/2) V†).
std::pair<Matrix, Matrix> reconstruct_blocks(const CqedRound& round);

// The 2d×2d entangler for given angles (ancilla ⊗ system ordering).
Matrix entangler_unitary(const EntanglerAngles& angles);

// diag(W₀, W₁) · U_ent · diag(V†, V†): a full joint unitary whose left
// column blocks reproduce the source node.
Matrix round_unitary(const CqedRound& round);

CqedCircuit decompose_circuit(const AdaptiveCircuit& circuit,
                              double tolerance = tol::kIsometry);

}  // namespace channelforge
