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

#include "channelforge/cat.hpp"

#include <cmath>
#include <limits>

#include "channelforge/parallel.hpp"

namespace channelforge {

bool CatCodeSpec::truncation_ok() const {
  for (const Complex& alpha : alphas) {
    const double mag = std::abs(alpha);
    if (mag * mag + 4.0 * mag > static_cast<double>(n_c)) return false;
  }
  return true;
}

Matrix annihilation(Index dim) {
  Matrix a = Matrix::Zero(dim, dim);
  for (Index n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Matrix number_operator(Index dim) {
  Matrix n = Matrix::Zero(dim, dim);
  for (Index k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

Vector coherent_state(Complex alpha, Index dim) {
  Vector psi(dim);
  // amplitude(n) = α^n/√(n!), normalized after truncation.
  Complex amplitude = 1.0;
  for (Index n = 0; n < dim; ++n) {
    psi(n) = amplitude;
    amplitude *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return psi / psi.norm();
}

Vector cat_state(const std::vector<Complex>& alphas, Index dim) {
  Vector sum = Vector::Zero(dim);
  for (const Complex& alpha : alphas) sum += coherent_state(alpha, dim);
  const double norm = sum.norm();
  if (norm == 0.0) throw Error("cat_state: components cancel exactly");
  return sum / norm;
}

Matrix cat_jump_operator(const CatCodeSpec& spec) {
  const Index d = spec.dim();
  const Matrix a = annihilation(d);
  Matrix j = Matrix::Identity(d, d);
  for (const Complex& alpha : spec.alphas) j = j * (a - alpha * Matrix::Identity(d, d));
  return std::sqrt(spec.kappa) * j;
}

LindbladSpec cat_lindblad(const CatCodeSpec& spec) {
  return LindbladSpec::standard(Matrix::Zero(spec.dim(), spec.dim()),
                                {cat_jump_operator(spec)});
}

std::vector<RankTablePoint> rank_vs_time(const CatCodeSpec& spec,
                                         const std::vector<double>& times,
                                         double threshold) {
  const SuperOperator generator = lindblad_superop(cat_lindblad(spec));
  std::vector<RankTablePoint> table(times.size());
  parallel_for(static_cast<Index>(times.size()), [&](Index i) {
    const double t = times[static_cast<std::size_t>(i)];
    // Finite precision drifts trace preservation by about eps·‖L‖·t, which
    // outgrows the stock validation tolerance for stiff pumps at large t.
    const double drift =
        64.0 * std::numeric_limits<double>::epsilon() * generator.t.norm() * t;
    const ChannelSpec channel =
        exp_channel(generator, t, threshold, std::max(tol::kChannel, drift));
    RankTablePoint point;
    point.t = t;
    point.magnitudes = kraus_magnitudes(std::get<KrausSet>(channel.repr));
    point.rank = static_cast<Index>(point.magnitudes.size());
    table[static_cast<std::size_t>(i)] = std::move(point);
  });
  return table;
}

}  // namespace channelforge
