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

#include "channelforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

namespace channelforge {

namespace {

// Largest-magnitude entry made real positive. No-op for a zero column.
void fix_phase(Eigen::Ref<Vector> column) {
  Index best = 0;
  double best_mag = 0.0;
  for (Index i = 0; i < column.size(); ++i) {
    const double mag = std::abs(column(i));
    if (mag > best_mag) {
      best_mag = mag;
      best = i;
    }
  }
  if (best_mag == 0.0) return;
  column *= std::conj(column(best)) / best_mag;
}

bool magnitudes_lex_greater(const Matrix& vecs, Index a, Index b) {
  for (Index i = 0; i < vecs.rows(); ++i) {
    const double ma = std::abs(vecs(i, a));
    const double mb = std::abs(vecs(i, b));
    if (ma != mb) return ma > mb;
  }
  return false;
}

}  // namespace

Vector vec_rowmajor(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

Matrix unvec_rowmajor(const Vector& v, Index rows, Index cols) {
  if (v.size() != rows * cols)
    throw DimensionMismatch("unvec: vector length does not match shape");
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

EigenSystem hermitian_eigs(const Matrix& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("hermitian_eigs: matrix must be square");
  const Matrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw Error("hermitian_eigs: eigensolver failed to converge");

  const RealVector& raw_values = solver.eigenvalues();  // ascending
  const Matrix& raw_vectors = solver.eigenvectors();

  std::vector<Index> order(static_cast<std::size_t>(m.rows()));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (raw_values(a) != raw_values(b)) return raw_values(a) > raw_values(b);
    return magnitudes_lex_greater(raw_vectors, a, b);
  });

  EigenSystem out;
  out.values.resize(m.rows());
  out.vectors.resize(m.rows(), m.cols());
  for (Index k = 0; k < m.rows(); ++k) {
    out.values(k) = raw_values(order[static_cast<std::size_t>(k)]);
    out.vectors.col(k) = raw_vectors.col(order[static_cast<std::size_t>(k)]);
    fix_phase(out.vectors.col(k));
  }
  return out;
}

ImageFrame orthonormal_image_frame(const Matrix& block, const Matrix& basis,
                                   double floor) {
  const Index rows = block.rows();
  const Index cols = basis.cols();
  ImageFrame out;
  out.s.resize(cols);
  out.u.resize(rows, cols);

  std::vector<Index> pending;
  Matrix kept(rows, cols);
  Index n_kept = 0;
  for (Index i = 0; i < cols; ++i) {
    const Vector image = block * basis.col(i);
    const double norm = image.norm();
    if (norm <= floor) {
      out.s(i) = 0.0;
      pending.push_back(i);
      continue;
    }
    Vector w = image / norm;
    for (int pass = 0; pass < 2; ++pass)
      for (Index j = 0; j < n_kept; ++j) w -= kept.col(j) * kept.col(j).dot(w);
    const double independent = w.norm();
    if (independent < 0.5) {
      // Unresolvable direction inside a cluster of tiny singular values.
      out.s(i) = 0.0;
      pending.push_back(i);
      continue;
    }
    out.s(i) = norm;
    kept.col(n_kept++) = w / independent;
  }
  out.completed_any = !pending.empty();

  const Matrix completed = complete_columns(kept.leftCols(n_kept));
  Index next = 0;
  Index fill = n_kept;
  for (Index i = 0; i < cols; ++i) {
    if (next < static_cast<Index>(pending.size()) &&
        pending[static_cast<std::size_t>(next)] == i) {
      out.u.col(i) = completed.col(fill++);
      ++next;
    } else {
      out.u.col(i) = completed.col(i - next);
    }
  }
  return out;
}

SingularSystem deterministic_svd(const Matrix& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("deterministic_svd: only square matrices supported");
  const EigenSystem gram = hermitian_eigs(m.adjoint() * m);
  ImageFrame frame =
      orthonormal_image_frame(m, gram.vectors, tol::kSupport * m.norm());
  SingularSystem out;
  out.u = std::move(frame.u);
  out.s = std::move(frame.s);
  out.v = gram.vectors;
  return out;
}

Matrix complete_columns(const Matrix& partial, double tolerance) {
  const Index rows = partial.rows();
  const Index k = partial.cols();
  if (k > rows)
    throw DimensionMismatch("complete_columns: more columns than rows");
  const double ortho =
      k == 0 ? 0.0 : (partial.adjoint() * partial - Matrix::Identity(k, k)).norm();
  if (ortho > tolerance)
    throw NotIsometry("complete_columns: input columns are not orthonormal", ortho);

  Matrix out(rows, rows);
  out.leftCols(k) = partial;
  Index filled = k;
  for (Index cand = 0; cand < rows && filled < rows; ++cand) {
    Vector v = Vector::Zero(rows);
    v(cand) = 1.0;
    // Two orthogonalization passes keep the completion orthonormal even for
    // marginal candidates.
    for (int pass = 0; pass < 2; ++pass)
      for (Index j = 0; j < filled; ++j) v -= out.col(j) * out.col(j).dot(v);
    const double norm = v.norm();
    if (norm > 1e-4) {
      v /= norm;
      fix_phase(v);
      out.col(filled++) = v;
    }
  }
  if (filled < rows)
    throw Error("complete_columns: failed to complete an orthonormal basis");
  return out;
}

Matrix matrix_exp(const Matrix& m) { return m.exp(); }

double trace_distance(const Matrix& a, const Matrix& b) {
  const EigenSystem diff = hermitian_eigs(a - b);
  return diff.values.cwiseAbs().sum() / 2.0;
}

double state_fidelity(const Vector& psi, const Matrix& rho) {
  return std::real(psi.dot(rho * psi));
}

}  // namespace channelforge
