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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "channelforge/tree.hpp"

namespace channelforge {

struct DensityMatrix {
  Index dim = 0;
  Matrix rho;

  DensityMatrix() = default;
  DensityMatrix(Index dim, Matrix rho);
  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix maximally_mixed(Index dim);
};

// Per-trajectory substreams are derived by mixing the seed with the
// trajectory index, so an ensemble is a function of (seed, n) alone,
// independent of scheduling.
struct RngSeed {
  std::uint64_t seed = 0;
};
std::uint64_t substream(RngSeed seed, std::uint64_t index);

struct TrajectoryRecord {
  BinaryLabel outcome_bits;
  double probability = 0.0;  // product of per-round Born probabilities
  DensityMatrix final_state;
};

struct MonteCarloResult {
  DensityMatrix average;  // uniform average over sampled trajectories
  std::map<std::string, Index> histogram;
  Index trajectories = 0;
};

struct InstrumentOutcome {
  BinaryLabel label;  // first L₁ outcome bits
  double probability = 0.0;
  DensityMatrix state;  // normalized when probability > 0
};

struct InstrumentOutput {
  std::vector<InstrumentOutcome> outcomes;
};

// Deterministic channel application: Σ over all outcome paths of
// (path product) ρ (path product)†. Branches with weight below the
// probability floor are skipped.
DensityMatrix apply_channel_exact(const AdaptiveCircuit& circuit,
                                  const DensityMatrix& rho);

// Samples one run: at each round outcome b is drawn with probability
// Tr(B_b ρ B_b†) and the state renormalized. Throws NumericalDeadEnd when
// both branch probabilities vanish.
TrajectoryRecord run_trajectory(const AdaptiveCircuit& circuit,
                                const DensityMatrix& rho, RngSeed seed,
                                std::uint64_t trajectory_index = 0);

MonteCarloResult monte_carlo(const AdaptiveCircuit& circuit,
                             const DensityMatrix& rho, Index n, RngSeed seed);

// Groups outcome paths by their first keep_bits bits; each group's
// subnormalized states are summed over the discarded bits and normalized.
InstrumentOutput run_instrument(const AdaptiveCircuit& circuit,
                                const DensityMatrix& rho, Index keep_bits);

// POVM elements Π_μ = Σ over grouped leaves of (path product)†(path product).
std::vector<Matrix> povm_elements(const AdaptiveCircuit& circuit, Index keep_bits);

// p_μ = Tr[Π_μ ρ], keyed by outcome bit string.
std::vector<std::pair<std::string, double>> run_povm(const AdaptiveCircuit& circuit,
                                                     const DensityMatrix& rho,
                                                     Index keep_bits);

// Frobenius distance between Choi matrices; zero iff identical channels.
double channel_distance(const ChannelSpec& a, const ChannelSpec& b);

}  // namespace channelforge
