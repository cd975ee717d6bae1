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

#include "channelforge/binomial.hpp"

#include <cmath>
#include <utility>

#include "channelforge/cat.hpp"

namespace channelforge {

namespace {

void check_truncation(const BinomialCodeSpec& spec) {
  if (spec.n_c < 9)
    throw DimensionMismatch("binomial code needs n_c >= 9 to hold the codewords");
}

}  // namespace

Vector binomial_codeword_up(const BinomialCodeSpec& spec) {
  check_truncation(spec);
  Vector w = Vector::Zero(spec.dim());
  w(0) = 0.5;
  w(6) = std::sqrt(3.0) / 2.0;
  return w;
}

Vector binomial_codeword_down(const BinomialCodeSpec& spec) {
  check_truncation(spec);
  Vector w = Vector::Zero(spec.dim());
  w(3) = std::sqrt(3.0) / 2.0;
  w(9) = 0.5;
  return w;
}

Matrix fock_mod3_projector(int residue, Index dim) {
  Matrix p = Matrix::Zero(dim, dim);
  for (Index n = 0; n < dim; ++n)
    if (n % 3 == residue) p(n, n) = 1.0;
  return p;
}

Matrix codespace_projector(const BinomialCodeSpec& spec) {
  const Vector up = binomial_codeword_up(spec);
  const Vector down = binomial_codeword_down(spec);
  return up * up.adjoint() + down * down.adjoint();
}

Matrix recovery_unitary(const Matrix& error_op, const BinomialCodeSpec& spec) {
  const Index d = spec.dim();
  const Matrix pw = codespace_projector(spec);
  const Vector codewords[2] = {binomial_codeword_up(spec), binomial_codeword_down(spec)};

  Matrix error_states(d, 2);
  for (int s = 0; s < 2; ++s) {
    Vector e = error_op * codewords[s];
    e -= pw * e;  // keep only the detectable (off-code-space) component
    const double norm = e.norm();
    if (norm < tol::kSupport)
      throw DimensionMismatch("recovery_unitary: error state vanishes on the code space");
    error_states.col(s) = e / norm;
  }
  Matrix code_states(d, 2);
  code_states.col(0) = codewords[0];
  code_states.col(1) = codewords[1];

  // U = G F†: the syndrome basis F (error states + completion) is rotated
  // onto the code basis G (codewords + completion).
  const Matrix f = complete_columns(error_states);
  const Matrix g = complete_columns(code_states);
  return g * f.adjoint();
}

AdaptiveCircuit binomial_recovery_circuit(const BinomialCodeSpec& spec) {
  check_truncation(spec);
  const Index d = spec.dim();
  const Matrix eye = Matrix::Identity(d, d);
  const Matrix p_mod0 = fock_mod3_projector(0, d);
  const Matrix p_mod1 = fock_mod3_projector(1, d);
  const Matrix pw = codespace_projector(spec);

  const Matrix a = annihilation(d);
  const Matrix u_dephase = recovery_unitary(number_operator(d), spec);
  const Matrix u_one_loss = recovery_unitary(a, spec);
  const Matrix u_two_loss = recovery_unitary(a * a, spec);

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

  // Syndrome extraction: photon number mod 3, then the conditional refinement.
  add_node(0, 0, p_mod0, eye - p_mod0);
  add_node(1, 0, pw, eye - pw);
  add_node(1, 1, p_mod1, eye - p_mod1);
  // Correction round; the second outcome never fires.
  const Matrix zero = Matrix::Zero(d, d);
  add_node(2, 0, eye, zero);
  add_node(2, 1, u_dephase, zero);
  add_node(2, 2, u_two_loss, zero);
  add_node(2, 3, u_one_loss, zero);

  circuit.leaf_ops.reserve(8);
  for (Index leaf = 0; leaf < 8; ++leaf)
    circuit.leaf_ops.push_back(circuit.path_product(leaf));
  return circuit;
}

}  // namespace channelforge
