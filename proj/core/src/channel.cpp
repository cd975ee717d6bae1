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

#include "channelforge/channel.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace channelforge {

KrausSet::KrausSet(Index dim, std::vector<Matrix> ops)
    : dim(dim), ops(std::move(ops)) {
  if (dim <= 0) throw DimensionMismatch("KrausSet: dimension must be positive");
  for (const Matrix& op : this->ops)
    if (op.rows() != dim || op.cols() != dim)
      throw DimensionMismatch("KrausSet: operator shape does not match dim");
}

PaddedKraus make_square_kraus(const std::vector<Matrix>& ops) {
  if (ops.empty()) throw DimensionMismatch("make_square_kraus: empty operator list");
  const Index rows = ops.front().rows();
  const Index cols = ops.front().cols();
  for (const Matrix& op : ops)
    if (op.rows() != rows || op.cols() != cols)
      throw DimensionMismatch("make_square_kraus: inconsistent operator shapes");
  const Index d = std::max(rows, cols);
  std::vector<Matrix> padded;
  padded.reserve(ops.size());
  for (const Matrix& op : ops) {
    Matrix p = Matrix::Zero(d, d);
    p.topLeftCorner(rows, cols) = op;
    padded.push_back(std::move(p));
  }
  return PaddedKraus{KrausSet(d, std::move(padded)), cols, rows};
}

SuperOperator::SuperOperator(Index dim, Matrix t) : dim(dim), t(std::move(t)) {
  if (this->t.rows() != dim * dim || this->t.cols() != dim * dim)
    throw DimensionMismatch("SuperOperator: matrix must be d²×d²");
}

ChoiMatrix::ChoiMatrix(Index dim, Matrix m, double eigen_threshold)
    : dim(dim), m(std::move(m)), eigen_threshold(eigen_threshold) {
  if (this->m.rows() != dim * dim || this->m.cols() != dim * dim)
    throw DimensionMismatch("ChoiMatrix: matrix must be d²×d²");
}

std::string repr_name(Repr repr) {
  switch (repr) {
    case Repr::kKraus: return "kraus";
    case Repr::kSuperop: return "superop";
    case Repr::kChoi: return "choi";
  }
  return "kraus";
}

Repr repr_from_name(const std::string& name) {
  if (name == "kraus") return Repr::kKraus;
  if (name == "superop") return Repr::kSuperop;
  if (name == "choi") return Repr::kChoi;
  throw ParseError("unknown representation name: " + name);
}

ChannelSpec ChannelSpec::from_kraus(KrausSet k, std::string label) {
  ChannelSpec c;
  c.label = std::move(label);
  c.input_dim = c.output_dim = k.dim;
  c.repr = std::move(k);
  return c;
}

ChannelSpec ChannelSpec::from_superop(SuperOperator s, std::string label) {
  ChannelSpec c;
  c.label = std::move(label);
  c.input_dim = c.output_dim = s.dim;
  c.repr = std::move(s);
  return c;
}

ChannelSpec ChannelSpec::from_choi(ChoiMatrix m, std::string label) {
  ChannelSpec c;
  c.label = std::move(label);
  c.input_dim = c.output_dim = m.dim;
  c.repr = std::move(m);
  return c;
}

Index ChannelSpec::dim() const {
  return std::visit([](const auto& r) { return r.dim; }, repr);
}

Repr ChannelSpec::tag() const {
  if (std::holds_alternative<KrausSet>(repr)) return Repr::kKraus;
  if (std::holds_alternative<SuperOperator>(repr)) return Repr::kSuperop;
  return Repr::kChoi;
}

SuperOperator kraus_to_superop(const KrausSet& k) {
  const Index d = k.dim;
  Matrix t = Matrix::Zero(d * d, d * d);
  for (const Matrix& op : k.ops) t += kron(op, op.conjugate());
  return SuperOperator(d, std::move(t));
}

namespace {

// The reshuffle T_(ij),(mn) = M_(im),(jn) is an involution, shared by both
// conversion directions.
Matrix reshuffle(const Matrix& in, Index d) {
  Matrix out(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index m = 0; m < d; ++m)
        for (Index n = 0; n < d; ++n)
          out(i * d + m, j * d + n) = in(i * d + j, m * d + n);
  return out;
}

}  // namespace

ChoiMatrix superop_to_choi(const SuperOperator& s) {
  Matrix m = reshuffle(s.t, s.dim);
  m = (m + m.adjoint()) / 2.0;
  return ChoiMatrix(s.dim, std::move(m));
}

SuperOperator choi_to_superop(const ChoiMatrix& c) {
  return SuperOperator(c.dim, reshuffle(c.m, c.dim));
}

ChoiMatrix kraus_to_choi(const KrausSet& k) {
  const Index d = k.dim;
  Matrix m = Matrix::Zero(d * d, d * d);
  for (const Matrix& op : k.ops) {
    const Vector v = vec_rowmajor(op);
    m += v * v.adjoint();
  }
  return ChoiMatrix(d, std::move(m));
}

KrausSet choi_to_kraus(const ChoiMatrix& c, double threshold) {
  const Index d = c.dim;
  const EigenSystem eigs = hermitian_eigs(c.m);
  if (eigs.values(d * d - 1) < -threshold)
    throw NotCompletelyPositive("choi_to_kraus: Choi matrix has a negative eigenvalue",
                                eigs.values(d * d - 1));
  std::vector<Matrix> ops;
  for (Index i = 0; i < d * d; ++i) {
    if (eigs.values(i) <= threshold) break;  // values are descending
    ops.push_back(unvec_rowmajor(std::sqrt(eigs.values(i)) * eigs.vectors.col(i), d, d));
  }
  return KrausSet(d, std::move(ops));
}

KrausSet minimal_kraus(const KrausSet& k, double threshold) {
  const Index n = k.count();
  Matrix overlap(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      overlap(i, j) = (k.ops[static_cast<std::size_t>(i)] *
                       k.ops[static_cast<std::size_t>(j)].adjoint())
                          .trace();
  const EigenSystem eigs = hermitian_eigs(overlap);
  std::vector<Matrix> ops;
  for (Index i = 0; i < n; ++i) {
    if (eigs.values(i) <= threshold) break;
    Matrix combined = Matrix::Zero(k.dim, k.dim);
    // K̃ᵢ = Σⱼ Vᵢⱼ Kⱼ with V = (eigenvector matrix)†, so Vᵢⱼ = conj(Uⱼᵢ).
    for (Index j = 0; j < n; ++j)
      combined += std::conj(eigs.vectors(j, i)) * k.ops[static_cast<std::size_t>(j)];
    ops.push_back(std::move(combined));
  }
  return KrausSet(k.dim, std::move(ops));
}

KrausSet renormalize_trace_preserving(const KrausSet& k) {
  const Index d = k.dim;
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& op : k.ops) sum += op.adjoint() * op;
  const EigenSystem eigs = hermitian_eigs(sum);
  if (eigs.values(d - 1) <= tol::kSupport)
    throw NotCompletelyPositive(
        "renormalize_trace_preserving: completeness sum is singular",
        eigs.values(d - 1));
  RealVector inv_sqrt(d);
  for (Index i = 0; i < d; ++i) inv_sqrt(i) = 1.0 / std::sqrt(eigs.values(i));
  const Matrix correction =
      eigs.vectors * inv_sqrt.asDiagonal() * eigs.vectors.adjoint();
  std::vector<Matrix> ops;
  ops.reserve(k.ops.size());
  for (const Matrix& op : k.ops) ops.push_back(op * correction);
  return KrausSet(d, std::move(ops));
}

KrausSet as_kraus(const ChannelSpec& c, double threshold) {
  if (const auto* k = std::get_if<KrausSet>(&c.repr)) return *k;
  return choi_to_kraus(as_choi(c), threshold);
}

SuperOperator as_superop(const ChannelSpec& c) {
  if (const auto* s = std::get_if<SuperOperator>(&c.repr)) return *s;
  if (const auto* k = std::get_if<KrausSet>(&c.repr)) return kraus_to_superop(*k);
  return choi_to_superop(std::get<ChoiMatrix>(c.repr));
}

ChoiMatrix as_choi(const ChannelSpec& c) {
  if (const auto* m = std::get_if<ChoiMatrix>(&c.repr)) return *m;
  if (const auto* k = std::get_if<KrausSet>(&c.repr)) return kraus_to_choi(*k);
  return superop_to_choi(std::get<SuperOperator>(c.repr));
}

ChannelSpec convert(const ChannelSpec& c, Repr target, double threshold) {
  ChannelSpec out = c;
  switch (target) {
    case Repr::kKraus: out.repr = as_kraus(c, threshold); break;
    case Repr::kSuperop: out.repr = as_superop(c); break;
    case Repr::kChoi: out.repr = as_choi(c); break;
  }
  return out;
}

ValidationReport validate_cptp(const ChannelSpec& c, double tolerance) {
  const Index d = c.dim();
  ValidationReport report;
  report.tolerance = tolerance;

  if (const auto* k = std::get_if<KrausSet>(&c.repr)) {
    Matrix sum = Matrix::Zero(d, d);
    for (const Matrix& op : k->ops) sum += op.adjoint() * op;
    report.completeness_residual = (sum - Matrix::Identity(d, d)).norm();
  } else {
    // Trace preservation of T: Σᵢ T_(ii),(mn) = δ_mn.
    const SuperOperator s = as_superop(c);
    Matrix residual = -Matrix::Identity(d, d);
    for (Index m = 0; m < d; ++m)
      for (Index n = 0; n < d; ++n)
        for (Index i = 0; i < d; ++i) residual(m, n) += s.t(i * d + i, m * d + n);
    report.completeness_residual = residual.norm();
  }

  const ChoiMatrix choi = as_choi(c);
  const EigenSystem eigs = hermitian_eigs(choi.m);
  report.choi_min_eigenvalue = eigs.values(d * d - 1);
  report.choi_trace_deviation = std::abs(choi.m.trace().real() - static_cast<double>(d)) +
                                std::abs(choi.m.trace().imag());
  report.passed = report.completeness_residual <= tolerance &&
                  report.choi_min_eigenvalue >= -tolerance &&
                  report.choi_trace_deviation <= tolerance;
  return report;
}

std::vector<double> kraus_magnitudes(const KrausSet& k) {
  std::vector<double> out;
  out.reserve(k.ops.size());
  for (const Matrix& op : k.ops) out.push_back((op.adjoint() * op).trace().real());
  return out;
}

Complex channel_determinant(const SuperOperator& s) { return s.t.determinant(); }

Index kraus_rank(const ChannelSpec& c, double threshold) {
  const ChoiMatrix choi = as_choi(c);
  const EigenSystem eigs = hermitian_eigs(choi.m);
  if (eigs.values(eigs.values.size() - 1) < -threshold)
    throw NotCompletelyPositive("kraus_rank: Choi matrix has a negative eigenvalue",
                                eigs.values(eigs.values.size() - 1));
  Index rank = 0;
  for (Index i = 0; i < eigs.values.size(); ++i)
    if (eigs.values(i) > threshold) ++rank;
  return rank;
}

}  // namespace channelforge
