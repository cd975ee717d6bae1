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

#include <string>
#include <variant>
#include <vector>

#include "channelforge/linalg.hpp"
#include "channelforge/types.hpp"

namespace channelforge {

// Kraus representation: T(rho) = Σᵢ Kᵢ rho Kᵢ†, with Σᵢ Kᵢ†Kᵢ = I for a
// trace-preserving channel. Operators are square d×d; rectangular operator
// lists are zero-padded to square via make_square_kraus.
struct KrausSet {
  Index dim = 0;
  std::vector<Matrix> ops;

  KrausSet() = default;
  KrausSet(Index dim, std::vector<Matrix> ops);
  Index count() const { return static_cast<Index>(ops.size()); }
};

// Zero-pads rectangular operators to square ones acting on
// max(rows, cols)-dimensional space. Reports the original shape.
struct PaddedKraus {
  KrausSet kraus;
  Index input_dim = 0;   // original column count
  Index output_dim = 0;  // original row count
};
PaddedKraus make_square_kraus(const std::vector<Matrix>& ops);

// Superoperator matrix acting on row-stacked density matrices:
// vec(rho)(i*d + j) = rho(i, j), so that T = Σᵢ Kᵢ ⊗ conj(Kᵢ).
struct SuperOperator {
  Index dim = 0;
  Matrix t;

  SuperOperator() = default;
  SuperOperator(Index dim, Matrix t);
};

// Choi matrix M = d·(T ⊗ I)(|Ω⟩⟨Ω|); Hermitian, PSD iff the map is
// completely positive, Tr M = d iff trace-preserving.
struct ChoiMatrix {
  Index dim = 0;
  Matrix m;
  double eigen_threshold = tol::kRank;

  ChoiMatrix() = default;
  ChoiMatrix(Index dim, Matrix m, double eigen_threshold = tol::kRank);
};

enum class Repr { kKraus, kSuperop, kChoi };

std::string repr_name(Repr repr);
Repr repr_from_name(const std::string& name);

// One channel in whichever representation it was provided; conversions are
// value-producing and never mutate the source.
struct ChannelSpec {
  std::string label;
  std::variant<KrausSet, SuperOperator, ChoiMatrix> repr;
  Index input_dim = 0;   // pre-padding shape, equal to dim() for square input
  Index output_dim = 0;

  static ChannelSpec from_kraus(KrausSet k, std::string label = "");
  static ChannelSpec from_superop(SuperOperator s, std::string label = "");
  static ChannelSpec from_choi(ChoiMatrix c, std::string label = "");

  Index dim() const;
  Repr tag() const;
};

// Representation conversions. The index reshuffle between superoperator and
// Choi is T_(ij),(mn) = M_(im),(jn); the Choi output is symmetrized as
// (M + M†)/2 before storage.
SuperOperator kraus_to_superop(const KrausSet& k);
ChoiMatrix superop_to_choi(const SuperOperator& s);
SuperOperator choi_to_superop(const ChoiMatrix& c);
ChoiMatrix kraus_to_choi(const KrausSet& k);

// Minimal Kraus extraction from the Choi eigendecomposition: operators are
// √λᵢ · unvec(vᵢ) for λᵢ > threshold, ordered by descending eigenvalue.
// Throws NotCompletelyPositive when an eigenvalue is below −threshold.
KrausSet choi_to_kraus(const ChoiMatrix& c, double threshold = tol::kRank);

// Reduces a redundant Kraus set via the overlap matrix Cᵢⱼ = Tr(Kᵢ Kⱼ†):
// diagonalize C = V†DV and keep the recombined operators with
// Tr(K̃ᵢ†K̃ᵢ) above threshold. Represents the same channel.
KrausSet minimal_kraus(const KrausSet& k, double threshold = tol::kRank);

// Restores exact trace preservation after operator truncation: with
// S = Σ Kᵢ†Kᵢ ≻ 0 the set {Kᵢ S^{−1/2}} satisfies the completeness sum by
// construction and perturbs the channel at the scale of the dropped weight.
KrausSet renormalize_trace_preserving(const KrausSet& k);

// Conversion helpers for whichever representation a channel currently holds.
KrausSet as_kraus(const ChannelSpec& c, double threshold = tol::kRank);
SuperOperator as_superop(const ChannelSpec& c);
ChoiMatrix as_choi(const ChannelSpec& c);
ChannelSpec convert(const ChannelSpec& c, Repr target, double threshold = tol::kRank);

struct ValidationReport {
  double completeness_residual = 0.0;  // ‖Σ K†K − I‖_F (or TP residual of T)
  double choi_min_eigenvalue = 0.0;
  double choi_trace_deviation = 0.0;
  double tolerance = tol::kChannel;
  bool passed = false;
};
ValidationReport validate_cptp(const ChannelSpec& c, double tolerance = tol::kChannel);

// λᵢ = Tr(Kᵢ†Kᵢ) per operator; Σλᵢ = d, and for a minimal set the values
// coincide with the nonzero Choi spectrum.
std::vector<double> kraus_magnitudes(const KrausSet& k);

Complex channel_determinant(const SuperOperator& s);

// Number of Choi eigenvalues above threshold; at most d².
Index kraus_rank(const ChannelSpec& c, double threshold = tol::kRank);

}  // namespace channelforge
