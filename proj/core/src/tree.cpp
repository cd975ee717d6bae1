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

#include "channelforge/tree.hpp"

#include <cmath>
#include <utility>

namespace channelforge {

BinaryLabel BinaryLabel::from_string(const std::string& s) {
  BinaryLabel label;
  label.bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw ParseError("binary label must match [01]*");
    label.bits.push_back(c - '0');
  }
  return label;
}

BinaryLabel BinaryLabel::from_index(Index level, Index index) {
  BinaryLabel label;
  label.bits.resize(static_cast<std::size_t>(level));
  for (Index i = 0; i < level; ++i)
    label.bits[static_cast<std::size_t>(i)] =
        static_cast<int>((index >> (level - 1 - i)) & 1);
  return label;
}

Index BinaryLabel::index() const {
  Index value = 0;
  for (int b : bits) value = (value << 1) | b;
  return value;
}

BinaryLabel BinaryLabel::child(int bit) const {
  BinaryLabel out = *this;
  out.bits.push_back(bit);
  return out;
}

BinaryLabel BinaryLabel::prefix(Index length) const {
  BinaryLabel out;
  out.bits.assign(bits.begin(), bits.begin() + length);
  return out;
}

std::string BinaryLabel::str() const {
  std::string s;
  s.reserve(bits.size());
  for (int b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

double TreeNode::isometry_residual() const {
  const Index d = block0.cols();
  return (block0.adjoint() * block0 + block1.adjoint() * block1 -
          Matrix::Identity(d, d))
      .norm();
}

Index AdaptiveCircuit::node_count() const {
  Index n = 0;
  for (const auto& level : levels) n += static_cast<Index>(level.size());
  return n;
}

const TreeNode& AdaptiveCircuit::node(const BinaryLabel& label) const {
  return levels.at(static_cast<std::size_t>(label.level()))
      .at(static_cast<std::size_t>(label.index()));
}

TreeNode& AdaptiveCircuit::node(const BinaryLabel& label) {
  return levels.at(static_cast<std::size_t>(label.level()))
      .at(static_cast<std::size_t>(label.index()));
}

const Matrix& AdaptiveCircuit::leaf(const BinaryLabel& label) const {
  if (label.level() != depth)
    throw DimensionMismatch("leaf label length must equal circuit depth");
  return leaf_ops.at(static_cast<std::size_t>(label.index()));
}

Matrix AdaptiveCircuit::path_product(Index leaf_index) const {
  const BinaryLabel leaf = BinaryLabel::from_index(depth, leaf_index);
  Matrix product = Matrix::Identity(dim, dim);
  for (Index l = 0; l < depth; ++l)
    product = node(leaf.prefix(l)).block(leaf.bits[static_cast<std::size_t>(l)]) * product;
  return product;
}

KrausSet pad_kraus(const KrausSet& k) {
  const Index n = k.count();
  if (n < 1) throw DimensionMismatch("pad_kraus: empty Kraus set");
  int depth = 1;
  while ((Index{1} << depth) < n) ++depth;
  std::vector<Matrix> ops = k.ops;
  ops.resize(static_cast<std::size_t>(Index{1} << depth), Matrix::Zero(k.dim, k.dim));
  return KrausSet(k.dim, std::move(ops));
}

namespace {

int padded_depth(const KrausSet& padded) {
  int depth = 0;
  while ((Index{1} << depth) < padded.count()) ++depth;
  if ((Index{1} << depth) != padded.count())
    throw DimensionMismatch("operator count must be a power of two; call pad_kraus");
  return depth;
}

}  // namespace

NodeScaffold node_scaffold(const BinaryLabel& label, const KrausSet& padded) {
  const Index d = padded.dim;
  const int depth = padded_depth(padded);
  const Index l = label.level();
  if (l > depth - 1)
    throw DimensionMismatch("node_scaffold: label is not an interior node");

  NodeScaffold sc;
  sc.label = label;
  if (l == 0) {
    sc.v = Matrix::Identity(d, d);
    sc.d = RealVector::Ones(d);
    sc.d_inv = RealVector::Ones(d);
    sc.support = RealVector::Ones(d);
    sc.m = Matrix::Identity(d, d);
    sc.m_plus = Matrix::Identity(d, d);
    sc.q = Matrix::Zero(d, d);
    return sc;
  }

  Matrix branch_sum = Matrix::Zero(d, d);
  const Index tail = Index{1} << (depth - l);
  const Index base = label.index() << (depth - l);
  for (Index rest = 0; rest < tail; ++rest) {
    const Matrix& op = padded.ops[static_cast<std::size_t>(base + rest)];
    branch_sum += op.adjoint() * op;
  }

  const EigenSystem eigs = hermitian_eigs(branch_sum);
  if (eigs.values(d - 1) < -tol::kIsometry)
    throw Error("node_scaffold: branch sum not PSD, residual " +
                std::to_string(eigs.values(d - 1)));

  sc.v = eigs.vectors;
  sc.d.resize(d);
  sc.d_inv.resize(d);
  sc.support.resize(d);
  for (Index i = 0; i < d; ++i) {
    const double value = std::max(eigs.values(i), 0.0);
    const bool on_support = value > tol::kSupport;
    sc.d(i) = on_support ? std::sqrt(value) : 0.0;
    sc.d_inv(i) = on_support ? 1.0 / sc.d(i) : 0.0;
    sc.support(i) = on_support ? 1.0 : 0.0;
  }
  sc.m = sc.v * sc.d.asDiagonal() * sc.v.adjoint();
  sc.m_plus = sc.v * sc.d_inv.asDiagonal() * sc.v.adjoint();
  sc.q = sc.v * (RealVector::Ones(d) - sc.support).asDiagonal() * sc.v.adjoint();
  return sc;
}

Matrix internal_block(const NodeScaffold& parent, const NodeScaffold& child) {
  return child.m * parent.m_plus + (1.0 / std::sqrt(2.0)) * parent.q;
}

Matrix leaf_block(const NodeScaffold& parent, const BinaryLabel& leaf_label,
                  const KrausSet& padded) {
  const Matrix& k = padded.ops[static_cast<std::size_t>(leaf_label.index())];
  const SingularSystem svd = deterministic_svd(k);
  return k * parent.m_plus +
         (1.0 / std::sqrt(2.0)) * svd.u * svd.v.adjoint() * parent.q;
}

Matrix complete_unitary(const Matrix& block0, const Matrix& block1,
                        double tolerance) {
  if (block0.rows() != block0.cols() || block1.rows() != block1.cols() ||
      block0.rows() != block1.rows())
    throw DimensionMismatch("complete_unitary: blocks must be square and equal");
  const Index d = block0.rows();
  Matrix stacked(2 * d, d);
  stacked.topRows(d) = block0;
  stacked.bottomRows(d) = block1;
  const double residual = (stacked.adjoint() * stacked - Matrix::Identity(d, d)).norm();
  if (residual > tolerance)
    throw NotIsometry("complete_unitary: stacked blocks are not an isometry", residual);
  return complete_columns(stacked, tolerance);
}

void attach_full_unitaries(AdaptiveCircuit& circuit, double tolerance) {
  for (auto& level : circuit.levels)
    for (TreeNode& node : level)
      if (!node.full_unitary)
        node.full_unitary = complete_unitary(node.block0, node.block1, tolerance);
}

AdaptiveCircuit synthesize(const KrausSet& k) {
  const KrausSet padded = pad_kraus(k);
  const int depth = padded_depth(padded);
  const Index d = padded.dim;

  AdaptiveCircuit circuit;
  circuit.dim = d;
  circuit.depth = depth;
  circuit.levels.resize(static_cast<std::size_t>(depth));
  circuit.leaf_ops = padded.ops;

  // Scaffolds for the current level; level l has 2^l of them.
  std::vector<NodeScaffold> scaffolds{node_scaffold(BinaryLabel::root(), padded)};
  for (int l = 0; l < depth; ++l) {
    const bool last_round = (l == depth - 1);
    std::vector<NodeScaffold> next;
    if (!last_round) next.reserve(scaffolds.size() * 2);
    auto& level_nodes = circuit.levels[static_cast<std::size_t>(l)];
    level_nodes.reserve(scaffolds.size());
    for (NodeScaffold& parent : scaffolds) {
      TreeNode node;
      node.label = parent.label;
      if (last_round) {
        node.block0 = leaf_block(parent, parent.label.child(0), padded);
        node.block1 = leaf_block(parent, parent.label.child(1), padded);
      } else {
        NodeScaffold child0 = node_scaffold(parent.label.child(0), padded);
        NodeScaffold child1 = node_scaffold(parent.label.child(1), padded);
        node.block0 = internal_block(parent, child0);
        node.block1 = internal_block(parent, child1);
        next.push_back(std::move(child0));
        next.push_back(std::move(child1));
      }
      level_nodes.push_back(std::move(node));
    }
    scaffolds = std::move(next);
  }
  return circuit;
}

KrausSet circuit_kraus(const AdaptiveCircuit& circuit) {
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(circuit.leaf_count()));
  for (Index i = 0; i < circuit.leaf_count(); ++i)
    ops.push_back(circuit.path_product(i));
  return KrausSet(circuit.dim, std::move(ops));
}

VerificationReport verify_circuit(const AdaptiveCircuit& circuit,
                                  const KrausSet& target,
                                  double node_tolerance, double choi_tolerance) {
  VerificationReport report;
  report.node_tolerance = node_tolerance;
  report.choi_tolerance = choi_tolerance;

  for (const auto& level : circuit.levels) {
    for (const TreeNode& node : level) {
      const double residual = node.isometry_residual();
      report.nodes.push_back({node.label.str(), residual});
      report.max_isometry_residual = std::max(report.max_isometry_residual, residual);
    }
  }

  for (Index i = 0; i < circuit.leaf_count(); ++i) {
    const double residual =
        (circuit.path_product(i) - circuit.leaf_ops[static_cast<std::size_t>(i)]).norm();
    report.leaves.push_back({BinaryLabel::from_index(circuit.depth, i).str(), residual});
    report.max_leaf_residual = std::max(report.max_leaf_residual, residual);
  }

  const ChoiMatrix circuit_choi = kraus_to_choi(circuit_kraus(circuit));
  const ChoiMatrix target_choi = kraus_to_choi(target);
  report.choi_distance = (circuit_choi.m - target_choi.m).norm();

  report.passed = report.max_isometry_residual < node_tolerance &&
                  report.max_leaf_residual < node_tolerance &&
                  report.choi_distance < choi_tolerance;
  return report;
}

}  // namespace channelforge
