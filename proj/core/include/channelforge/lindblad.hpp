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

namespace channelforge {

// Time-independent generator dρ/dt = −i[H, ρ]
//   + Σ_{n,m} h_{n,m} (Lₙ ρ L_m† − ½ ρ L_m†Lₙ − ½ L_m†Lₙ ρ),
// with ħ = 1. The coefficient matrix must be Hermitian PSD; the common
// single-jump case uses coeffs = I.
struct LindbladSpec {
  Index dim = 0;
  Matrix hamiltonian;
  std::vector<Matrix> jumps;
  Matrix coeffs;

  LindbladSpec() = default;
  LindbladSpec(Index dim, Matrix hamiltonian, std::vector<Matrix> jumps,
               Matrix coeffs);
  // coeffs defaults to the identity.
  static LindbladSpec standard(Matrix hamiltonian, std::vector<Matrix> jumps);
};

// Row-stacked matrix of the generator (not itself a channel). Throws
// InvalidGenerator for non-Hermitian H or non-PSD coefficients.
SuperOperator lindblad_superop(const LindbladSpec& spec);

// exp(g·t) as a raw superoperator, no validation.
SuperOperator exp_superop(const SuperOperator& generator, double t);

// exp(g·t) validated CPTP and returned with its minimal Kraus set attached.
// Validation failure (bad generator or truncation artifact) throws
// InvalidGenerator carrying the residual.
ChannelSpec exp_channel(const SuperOperator& generator, double t,
                        double threshold = tol::kRank,
                        double validation_tolerance = tol::kChannel);

struct SteadyChannelResult {
  ChannelSpec channel;
  double time = 0.0;      // simulated time at convergence
  double residual = 0.0;  // ‖exp(g·2t) − exp(g·t)‖_F at the final doubling
  int doublings = 0;
};

// Relaxation limit t → ∞ via repeated squaring of exp(g·t₀) until the
// doubled channel stops moving. Throws NotRelaxing past the iteration cap.
SteadyChannelResult steady_channel(const SuperOperator& generator,
                                   double convergence = tol::kChannel,
                                   int max_doublings = 120);

}  // namespace channelforge
