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

#include "channelforge/simulate.hpp"

#include <cmath>
#include <random>
#include <utility>

#include "channelforge/parallel.hpp"

namespace channelforge {

DensityMatrix::DensityMatrix(Index dim, Matrix rho) : dim(dim), rho(std::move(rho)) {
  if (this->rho.rows() != dim || this->rho.cols() != dim)
    throw DimensionMismatch("DensityMatrix: matrix must be d×d");
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw DimensionMismatch("DensityMatrix::pure: zero vector");
  const Vector normalized = psi / norm;
  return DensityMatrix(psi.size(), normalized * normalized.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  return DensityMatrix(dim, Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

std::uint64_t substream(RngSeed seed, std::uint64_t index) {
  // splitmix64-style mixing of (seed, index).
  std::uint64_t z = seed.seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

void check_dims(const AdaptiveCircuit& circuit, const DensityMatrix& rho) {
  if (circuit.dim != rho.dim)
    throw DimensionMismatch("circuit and state dimensions differ");
}

double branch_weight(const Matrix& block, const Matrix& rho, Matrix& out) {
  out = block * rho * block.adjoint();
  return std::max(0.0, out.trace().real());
}

// Depth-first accumulation of subnormalized branch states at a given depth.
template <typename Visitor>
void visit_paths(const AdaptiveCircuit& circuit, const BinaryLabel& label,
                 const Matrix& state, Index target_level, const Visitor& visit) {
  if (label.level() == target_level) {
    visit(label, state);
    return;
  }
  const TreeNode& node = circuit.node(label);
  for (int bit = 0; bit < 2; ++bit) {
    Matrix branch;
    const double weight = branch_weight(node.block(bit), state, branch);
    if (weight < tol::kProbabilityFloor) continue;
    visit_paths(circuit, label.child(bit), branch, target_level, visit);
  }
}

}  // namespace

DensityMatrix apply_channel_exact(const AdaptiveCircuit& circuit,
                                  const DensityMatrix& rho) {
  check_dims(circuit, rho);
  Matrix out = Matrix::Zero(circuit.dim, circuit.dim);
  visit_paths(circuit, BinaryLabel::root(), rho.rho, circuit.depth,
              [&](const BinaryLabel&, const Matrix& state) { out += state; });
  return DensityMatrix(circuit.dim, std::move(out));
}

TrajectoryRecord run_trajectory(const AdaptiveCircuit& circuit,
                                const DensityMatrix& rho, RngSeed seed,
                                std::uint64_t trajectory_index) {
  check_dims(circuit, rho);
  std::mt19937_64 rng(substream(seed, trajectory_index));
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  TrajectoryRecord record;
  record.probability = 1.0;
  Matrix state = rho.rho;
  BinaryLabel label = BinaryLabel::root();
  for (int l = 0; l < circuit.depth; ++l) {
    const TreeNode& node = circuit.node(label);
    Matrix branch0, branch1;
    const double p0 = branch_weight(node.block0, state, branch0);
    const double p1 = branch_weight(node.block1, state, branch1);
    if (p0 < tol::kProbabilityFloor && p1 < tol::kProbabilityFloor)
      throw NumericalDeadEnd("run_trajectory: both branch probabilities vanish at node " +
                             label.str());
    int outcome;
    if (p0 < tol::kProbabilityFloor) {
      outcome = 1;
    } else if (p1 < tol::kProbabilityFloor) {
      outcome = 0;
    } else {
      outcome = uniform(rng) * (p0 + p1) < p0 ? 0 : 1;
    }
    const double p = outcome == 0 ? p0 : p1;
    state = (outcome == 0 ? branch0 : branch1) / p;
    record.probability *= p;
    label = label.child(outcome);
  }
  record.outcome_bits = label;
  record.final_state = DensityMatrix(circuit.dim, std::move(state));
  return record;
}

MonteCarloResult monte_carlo(const AdaptiveCircuit& circuit,
                             const DensityMatrix& rho, Index n, RngSeed seed) {
  check_dims(circuit, rho);
  if (n < 1) throw DimensionMismatch("monte_carlo: need at least one trajectory");

  // Fixed-size chunks keep the reduction order independent of scheduling.
  constexpr Index kChunk = 64;
  const Index chunks = (n + kChunk - 1) / kChunk;
  std::vector<Matrix> sums(static_cast<std::size_t>(chunks));
  std::vector<std::map<std::string, Index>> counts(static_cast<std::size_t>(chunks));

  parallel_for(chunks, [&](Index c) {
    Matrix sum = Matrix::Zero(circuit.dim, circuit.dim);
    auto& local = counts[static_cast<std::size_t>(c)];
    const Index begin = c * kChunk;
    const Index end = std::min(begin + kChunk, n);
    for (Index i = begin; i < end; ++i) {
      const TrajectoryRecord record =
          run_trajectory(circuit, rho, seed, static_cast<std::uint64_t>(i));
      sum += record.final_state.rho;
      ++local[record.outcome_bits.str()];
    }
    sums[static_cast<std::size_t>(c)] = std::move(sum);
  });

  MonteCarloResult result;
  result.trajectories = n;
  Matrix total = Matrix::Zero(circuit.dim, circuit.dim);
  for (Index c = 0; c < chunks; ++c) {
    total += sums[static_cast<std::size_t>(c)];
    for (const auto& [bits, count] : counts[static_cast<std::size_t>(c)])
      result.histogram[bits] += count;
  }
  result.average = DensityMatrix(circuit.dim, total / static_cast<double>(n));
  return result;
}

InstrumentOutput run_instrument(const AdaptiveCircuit& circuit,
                                const DensityMatrix& rho, Index keep_bits) {
  check_dims(circuit, rho);
  if (keep_bits < 0 || keep_bits > circuit.depth)
    throw DimensionMismatch("run_instrument: keep_bits must lie in [0, depth]");

  const Index groups = Index{1} << keep_bits;
  std::vector<Matrix> accumulated(static_cast<std::size_t>(groups),
                                  Matrix::Zero(circuit.dim, circuit.dim));
  visit_paths(circuit, BinaryLabel::root(), rho.rho, circuit.depth,
              [&](const BinaryLabel& leaf, const Matrix& state) {
                const Index group = leaf.index() >> (circuit.depth - keep_bits);
                accumulated[static_cast<std::size_t>(group)] += state;
              });

  InstrumentOutput out;
  out.outcomes.reserve(static_cast<std::size_t>(groups));
  for (Index g = 0; g < groups; ++g) {
    InstrumentOutcome outcome;
    outcome.label = BinaryLabel::from_index(keep_bits, g);
    Matrix& state = accumulated[static_cast<std::size_t>(g)];
    outcome.probability = std::max(0.0, state.trace().real());
    if (outcome.probability > tol::kProbabilityFloor)
      outcome.state = DensityMatrix(circuit.dim, state / outcome.probability);
    else
      outcome.state = DensityMatrix(circuit.dim, Matrix::Zero(circuit.dim, circuit.dim));
    out.outcomes.push_back(std::move(outcome));
  }
  return out;
}

std::vector<Matrix> povm_elements(const AdaptiveCircuit& circuit, Index keep_bits) {
  if (keep_bits < 0 || keep_bits > circuit.depth)
    throw DimensionMismatch("povm_elements: keep_bits must lie in [0, depth]");
  const Index groups = Index{1} << keep_bits;
  std::vector<Matrix> elements(static_cast<std::size_t>(groups),
                               Matrix::Zero(circuit.dim, circuit.dim));
  for (Index leaf = 0; leaf < circuit.leaf_count(); ++leaf) {
    const Matrix product = circuit.path_product(leaf);
    const Index group = leaf >> (circuit.depth - keep_bits);
    elements[static_cast<std::size_t>(group)] += product.adjoint() * product;
  }
  return elements;
}

std::vector<std::pair<std::string, double>> run_povm(const AdaptiveCircuit& circuit,
                                                     const DensityMatrix& rho,
                                                     Index keep_bits) {
  check_dims(circuit, rho);
  const std::vector<Matrix> elements = povm_elements(circuit, keep_bits);
  std::vector<std::pair<std::string, double>> probabilities;
  probabilities.reserve(elements.size());
  for (Index g = 0; g < static_cast<Index>(elements.size()); ++g)
    probabilities.emplace_back(
        BinaryLabel::from_index(keep_bits, g).str(),
        std::real((elements[static_cast<std::size_t>(g)] * rho.rho).trace()));
  return probabilities;
}

double channel_distance(const ChannelSpec& a, const ChannelSpec& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("channel_distance: dimensions differ");
  return (as_choi(a).m - as_choi(b).m).norm();
}

}  // namespace channelforge
