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

#include "channelforge/lindblad.hpp"

namespace channelforge {

// Engineered-dissipation pumping toward span{|αᵢ⟩} with jump operator
// J = √κ Π(a − αᵢ) on a Fock space truncated at photon number n_c.
struct CatCodeSpec {
  std::vector<Complex> alphas;
  double kappa = 1.0;
  int n_c = 14;

  Index dim() const { return n_c + 1; }
  // Tail-containment heuristic |α|² + 4|α| ≤ n_c for every component.
  bool truncation_ok() const;
};

// Truncated a|n⟩ = √n|n−1⟩; the top Fock state is annihilated from outside.
Matrix annihilation(Index dim);
Matrix number_operator(Index dim);

// Truncated coherent state, normalized after truncation.
Vector coherent_state(Complex alpha, Index dim);

// Normalized Σᵢ |αᵢ⟩ (e.g. the even two-component cat for {α, −α}).
Vector cat_state(const std::vector<Complex>& alphas, Index dim);

Matrix cat_jump_operator(const CatCodeSpec& spec);
LindbladSpec cat_lindblad(const CatCodeSpec& spec);

struct RankTablePoint {
  double t = 0.0;
  Index rank = 0;
  std::vector<double> magnitudes;  // descending, above threshold
};

// Kraus rank and magnitude spectrum of exp(L t) over a time grid.
std::vector<RankTablePoint> rank_vs_time(const CatCodeSpec& spec,
                                         const std::vector<double>& times,
                                         double threshold = tol::kRank);

}  // namespace channelforge
