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

// Bosonic code with codewords (|0⟩ + √3|6⟩)/2 and (√3|3⟩ + |9⟩)/2, correcting
// one and two photon losses plus number-operator dephasing.
struct BinomialCodeSpec {
  int n_c = 12;  // Fock truncation; must be ≥ 9 to hold the codewords

  Index dim() const { return n_c + 1; }
};

Vector binomial_codeword_up(const BinomialCodeSpec& spec);
Vector binomial_codeword_down(const BinomialCodeSpec& spec);

// Σ over Fock states with n ≡ residue (mod 3).
Matrix fock_mod3_projector(int residue, Index dim);

// Code-space projector |W↑⟩⟨W↑| + |W↓⟩⟨W↓|.
Matrix codespace_projector(const BinomialCodeSpec& spec);

// Correction unitary for a given error operator: maps the normalized error
// states, orthogonalized against the code space, back onto the codewords;
// the rest is a deterministic isometry from the complement of the syndrome
// subspace to the complement of the code space. (Orthogonalization matters
// for dephasing, whose raw error states overlap the code space; for pure
// loss errors it is a no-op.)
Matrix recovery_unitary(const Matrix& error_op, const BinomialCodeSpec& spec);

// Depth-3 recovery circuit. Round 1 measures photon number mod 3 (0 vs not);
// round 2 refines: code space vs dephasing for record (0), two losses vs one
// loss for record (1); round 3 applies the conditioned correction unitary
// {I, U_n, U_a², U_a} for records (0,0), (0,1), (1,0), (1,1).
AdaptiveCircuit binomial_recovery_circuit(const BinomialCodeSpec& spec);

}  // namespace channelforge
