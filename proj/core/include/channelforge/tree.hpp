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

#include <optional>
#include <string>
#include <vector>

#include "channelforge/channel.hpp"

namespace channelforge {

// Measurement-record label b₁..b_l. The empty label is the tree root; a leaf
// label has length equal to the circuit depth. Leaf index (b₁..b_L)₂ selects
// the Kraus operator realized along that outcome path.
struct BinaryLabel {
  std::vector<int> bits;

  static BinaryLabel root() { return {}; }
  static BinaryLabel from_string(const std::string& s);
  static BinaryLabel from_index(Index level, Index index);

  Index level() const { return static_cast<Index>(bits.size()); }
  Index index() const;  // (b₁..b_l)₂
  BinaryLabel child(int bit) const;
  BinaryLabel prefix(Index length) const;
  std::string str() const;

  bool operator==(const BinaryLabel&) const = default;
};

// One adaptive round: the two d×d blocks ⟨0|U|0⟩ and ⟨1|U|0⟩ of the joint
// unitary applied when the measurement record equals `label`. Only the left
// half of U affects the channel; the completion is filled in lazily.
struct TreeNode {
  BinaryLabel label;
  Matrix block0;
  Matrix block1;
  std::optional<Matrix> full_unitary;

  const Matrix& block(int bit) const { return bit == 0 ? block0 : block1; }
  double isometry_residual() const;
};

// Depth-L binary tree of adaptive rounds plus the 2^L leaf operators.
// Invariants: levels[l] has 2^l nodes; the ordered block product along each
// root-to-leaf path equals the stored leaf operator.
struct AdaptiveCircuit {
  Index dim = 0;
  int depth = 0;
  std::vector<std::vector<TreeNode>> levels;
  std::vector<Matrix> leaf_ops;

  Index node_count() const;
  Index leaf_count() const { return static_cast<Index>(leaf_ops.size()); }
  const TreeNode& node(const BinaryLabel& label) const;
  TreeNode& node(const BinaryLabel& label);
  const Matrix& leaf(const BinaryLabel& label) const;
  Matrix path_product(Index leaf_index) const;
};

// Per-node working data: branch sum Σ K†K = V D² V† over the subtree, with
// support projection P, kernel projection Q = V P⊥ V†, M = V D V† and its
// pseudo-inverse M⁺ = V D⁻¹ V†. The root uses V = D = D⁻¹ = P = I, P⊥ = 0.
struct NodeScaffold {
  BinaryLabel label;
  Matrix v;
  RealVector d;
  RealVector d_inv;
  RealVector support;  // 0/1 diagonal of P
  Matrix m;
  Matrix m_plus;
  Matrix q;
};

// Pads a minimal Kraus set to 2^L operators with zero matrices,
// L = ⌈log₂N⌉ (and L = 1 for N = 1 so every circuit has one round).
KrausSet pad_kraus(const KrausSet& k);

NodeScaffold node_scaffold(const BinaryLabel& label, const KrausSet& padded);

// Block for a non-final round: M_child · M⁺_parent + (1/√2) Q_parent.
Matrix internal_block(const NodeScaffold& parent, const NodeScaffold& child);

// Block for the final round: K · M⁺_parent + (1/√2) W V† Q_parent with
// K = W diag(s) V† the deterministic SVD of the leaf operator.
Matrix leaf_block(const NodeScaffold& parent, const BinaryLabel& leaf_label,
                  const KrausSet& padded);

// Completes the 2d×d isometry [block0; block1] to a 2d×2d unitary whose left
// column block is the input; the right columns are a deterministic
// orthonormal completion. Throws NotIsometry above tolerance.
Matrix complete_unitary(const Matrix& block0, const Matrix& block1,
                        double tolerance = tol::kIsometry);

// Fills every node's full_unitary (no-op for nodes that already have one).
void attach_full_unitaries(AdaptiveCircuit& circuit,
                           double tolerance = tol::kIsometry);

// Compiles a minimal Kraus set into the adaptive circuit realizing it.
AdaptiveCircuit synthesize(const KrausSet& k);

// The circuit's own channel: leaf path products as a Kraus set.
KrausSet circuit_kraus(const AdaptiveCircuit& circuit);

struct VerificationReport {
  struct NodeResidual {
    std::string label;
    double isometry_residual;
  };
  struct LeafResidual {
    std::string label;
    double product_residual;  // ‖path product − leaf operator‖_F
  };
  std::vector<NodeResidual> nodes;
  std::vector<LeafResidual> leaves;
  double max_isometry_residual = 0.0;
  double max_leaf_residual = 0.0;
  double choi_distance = 0.0;  // circuit channel vs target, Frobenius
  double node_tolerance = 1e-9;
  double choi_tolerance = tol::kChannel;
  bool passed = false;
};

VerificationReport verify_circuit(const AdaptiveCircuit& circuit,
                                  const KrausSet& target,
                                  double node_tolerance = 1e-9,
                                  double choi_tolerance = tol::kChannel);

}  // namespace channelforge
