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

#include "channelforge/types.hpp"

namespace channelforge {

// Row-stacking vectorization: vec(m)(i*cols + j) = m(i, j).
Vector vec_rowmajor(const Matrix& m);
Matrix unvec_rowmajor(const Vector& v, Index rows, Index cols);

Matrix kron(const Matrix& a, const Matrix& b);

// Hermitian eigendecomposition with deterministic output: the input is
// symmetrized as (m + m†)/2, eigenpairs are sorted by descending eigenvalue
// (ties broken by lexicographically larger |eigenvector|), and each
// eigenvector's global phase is fixed so its largest-magnitude entry is
// real positive.
struct EigenSystem {
  RealVector values;  // descending
  Matrix vectors;     // columns, unitary
};
EigenSystem hermitian_eigs(const Matrix& m);

// Orthonormal frame of image columns block·basisᵢ with their norms: the
// workhorse behind the deterministic SVD and the common-V factor splits.
// Columns are orthonormalized in basis order; a column whose norm falls
// below `floor`, or whose direction is linearly dependent on the ones
// already taken (near-degenerate clusters of tiny singular values), is
// filled from the deterministic completion and its norm reported as zero.
struct ImageFrame {
  Matrix u;
  RealVector s;
  bool completed_any = false;
};
ImageFrame orthonormal_image_frame(const Matrix& block, const Matrix& basis,
                                   double floor);

// Deterministic SVD m = u * s.asDiagonal() * v.adjoint(), s descending.
// v and s come from hermitian_eigs(m†m) with u the orthonormalized image
// frame, so the product reconstructs m to machine precision wherever the
// singular directions are resolvable (the zero matrix gives u = v = I).
struct SingularSystem {
  Matrix u;
  RealVector s;
  Matrix v;
};
SingularSystem deterministic_svd(const Matrix& m);

// Extends a rows×k matrix with orthonormal columns to a square unitary by
// orthonormalizing standard-basis candidates against it in fixed order,
// with phases normalized. Throws NotIsometry if the input columns are not
// orthonormal within tol.
Matrix complete_columns(const Matrix& partial, double tolerance = tol::kIsometry);

// Scaling-and-squaring matrix exponential.
Matrix matrix_exp(const Matrix& m);

// 1/2 ‖a − b‖₁ for Hermitian a, b.
double trace_distance(const Matrix& a, const Matrix& b);

// ⟨psi|rho|psi⟩ for a normalized pure target.
double state_fidelity(const Vector& psi, const Matrix& rho);

}  // namespace channelforge
