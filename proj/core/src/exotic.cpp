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

#include "channelforge/exotic.hpp"

#include <cmath>
#include <utility>

namespace channelforge {

Matrix corner_transpose_apply(const Matrix& rho) {
  const Index d = rho.rows();
  if (d < 2 || rho.cols() != d)
    throw DimensionMismatch("corner_transpose_apply: need a square matrix, d >= 2");
  Matrix transposed = rho;
  std::swap(transposed(0, d - 1), transposed(d - 1, 0));
  return (transposed + Matrix::Identity(d, d) * rho.trace()) /
         (1.0 + static_cast<double>(d));
}

SuperOperator corner_transpose_superop(Index d) {
  if (d < 2) throw DimensionMismatch("corner_transpose_superop: d >= 2 required");
  Matrix t(d * d, d * d);
  for (Index m = 0; m < d; ++m) {
    for (Index n = 0; n < d; ++n) {
      Matrix unit = Matrix::Zero(d, d);
      unit(m, n) = 1.0;
      t.col(m * d + n) = vec_rowmajor(corner_transpose_apply(unit));
    }
  }
  return SuperOperator(d, std::move(t));
}

ChannelSpec corner_transpose_channel(Index d) {
  return ChannelSpec::from_superop(corner_transpose_superop(d),
                                   "partial corner transpose d=" + std::to_string(d));
}

AdaptiveCircuit corner_transpose_reference_circuit() {
  const Index d = 3;
  const double r2 = std::sqrt(2.0);

  auto diag3 = [](double a, double b, double c) {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
  };

  AdaptiveCircuit circuit;
  circuit.dim = d;
  circuit.depth = 3;
  circuit.levels.resize(3);

  auto add_node = [&](int level, Index idx, Matrix b0, Matrix b1) {
    TreeNode node;
    node.label = BinaryLabel::from_index(level, idx);
    node.block0 = std::move(b0);
    node.block1 = std::move(b1);
    circuit.levels[static_cast<std::size_t>(level)].push_back(std::move(node));
  };

  add_node(0, 0,
           diag3(std::sqrt(10.0 + r2) / 4.0, std::sqrt(2.0 + 1.0 / r2) / 2.0,
                 std::sqrt(10.0 + r2) / 4.0),
           diag3(std::sqrt(6.0 - r2) / 4.0, std::sqrt(2.0 - 1.0 / r2) / 2.0,
                 std::sqrt(6.0 - r2) / 4.0));

  add_node(1, 0,
           diag3(std::sqrt(29.0 + 2.0 * r2) / 7.0, std::sqrt((3.0 + r2) / 7.0),
                 std::sqrt(29.0 + 2.0 * r2) / 7.0),
           diag3(2.0 / std::sqrt(10.0 + r2), 1.0 / std::sqrt(2.0 + 1.0 / r2),
                 2.0 / std::sqrt(10.0 + r2)));
  add_node(1, 1,
           diag3(std::sqrt(2.0 * (6.0 + r2) / 17.0), 0.0,
                 std::sqrt(2.0 * (6.0 + r2) / 17.0)),
           diag3(std::sqrt((5.0 - 2.0 * r2) / 17.0), 1.0,
                 std::sqrt((5.0 - 2.0 * r2) / 17.0)));

  add_node(2, 0,
           diag3(std::sqrt((5.0 + 2.0 * r2) / 17.0), 1.0,
                 std::sqrt((5.0 + 2.0 * r2) / 17.0)),
           diag3(-2.0 / std::sqrt(6.0 + r2), 0.0, 2.0 / std::sqrt(6.0 + r2)));

  Matrix b0 = Matrix::Zero(3, 3);
  Matrix b1 = Matrix::Zero(3, 3);
  b0(0, 2) = 1.0;
  b0(2, 0) = 1.0;
  b1(2, 1) = 1.0;
  add_node(2, 1, b0, b1);

  b0 = Matrix::Zero(3, 3);
  b1 = Matrix::Zero(3, 3);
  b0(0, 1) = 1.0;
  b0(1, 2) = 1.0;
  b1(1, 0) = 1.0;
  add_node(2, 2, b0, b1);

  b0 = Matrix::Zero(3, 3);
  b1 = Matrix::Zero(3, 3);
  b0(0, 1) = std::sqrt((4.0 + r2) / 7.0);
  b1(0, 0) = 1.0;
  b1(1, 1) = -std::sqrt((3.0 - r2) / 7.0);
  b1(2, 2) = 1.0;
  add_node(2, 3, b0, b1);

  circuit.leaf_ops.reserve(8);
  for (Index leaf = 0; leaf < 8; ++leaf)
    circuit.leaf_ops.push_back(circuit.path_product(leaf));
  return circuit;
}

}  // namespace channelforge
