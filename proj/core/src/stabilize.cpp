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

#include "channelforge/stabilize.hpp"

#include <cmath>

namespace channelforge {

KrausSet init_channel(const StabilizationTarget& target, double threshold) {
  const Index d = target.sigma.dim;
  const EigenSystem eigs = hermitian_eigs(target.sigma.rho);
  if (eigs.values(d - 1) < -threshold)
    throw NotCompletelyPositive("init_channel: target state is not PSD",
                                eigs.values(d - 1));
  std::vector<Matrix> ops;
  for (Index mu = 0; mu < d; ++mu) {
    if (eigs.values(mu) <= threshold) break;
    const double weight = std::sqrt(eigs.values(mu));
    for (Index i = 0; i < d; ++i) {
      Matrix op = Matrix::Zero(d, d);
      op.col(i) = weight * eigs.vectors.col(mu);
      ops.push_back(std::move(op));
    }
  }
  if (ops.empty()) throw DimensionMismatch("init_channel: target state is zero");
  return KrausSet(d, std::move(ops));
}

}  // namespace channelforge
