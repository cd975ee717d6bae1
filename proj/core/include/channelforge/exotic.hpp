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

// Partial corner transpose: T(ρ) = (ρ^{T_c} + I·Tr ρ)/(1 + d), where T_c
// swaps the two corner coherences ρ(0, d−1) ↔ ρ(d−1, 0) and leaves the rest
// alone. Its superoperator determinant −(d+1)^{1−d²} is negative, which no
// Lindbladian exponential or product of non-unitary channels can reach.
Matrix corner_transpose_apply(const Matrix& rho);
SuperOperator corner_transpose_superop(Index d);
ChannelSpec corner_transpose_channel(Index d);

// Hand-built depth-3 adaptive circuit realizing the d = 3 corner transpose,
// with closed-form diagonal rounds; kept as an independent cross-check of
// the generic synthesizer.
AdaptiveCircuit corner_transpose_reference_circuit();

}  // namespace channelforge
