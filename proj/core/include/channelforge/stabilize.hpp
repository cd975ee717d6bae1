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

#include "channelforge/channel.hpp"
#include "channelforge/simulate.hpp"

namespace channelforge {

struct StabilizationTarget {
  DensityMatrix sigma;
};

// Kraus set of the pumping map ρ ↦ Tr(ρ)·σ: with σ = Σ λ_μ |ψ_μ⟩⟨ψ_μ|, the
// operators are √λ_μ |ψ_μ⟩⟨i| over the eigenbasis of σ (rank r) and the full
// computational basis, d·r operators in total. The map is idempotent and
// already minimal.
KrausSet init_channel(const StabilizationTarget& target,
                      double threshold = tol::kRank);

}  // namespace channelforge
