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

// End-to-end acceptance suite. Each criterion prints one line:
//   [PASS|FAIL] criterion N: <description> (<measured numbers>)
// and the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "test_support.hpp"

using namespace channelforge;
using namespace channelforge::testing;

namespace {

struct Criterion {
  int number;
  std::string description;
  bool passed;
  std::string detail;
};

std::vector<Criterion> g_results;

void record(int number, const std::string& description, bool passed,
            const std::string& detail) {
  g_results.push_back({number, description, passed, detail});
  std::printf("[%s] criterion %d: %s (%s)\n", passed ? "PASS" : "FAIL", number,
              description.c_str(), detail.c_str());
  std::fflush(stdout);
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct SynthesizedSample {
  Index dim;
  Index requested_rank;
  AdaptiveCircuit circuit;
};

// Criteria 1 and 2: property suite over 100 random channels, plus the
// round-count bound. Returns the circuits for reuse by criterion 8.
std::vector<SynthesizedSample> criteria_1_and_2() {
  std::mt19937_64 rng(20260809);
  const auto start = std::chrono::steady_clock::now();

  double worst_isometry = 0.0;
  double worst_leaf = 0.0;
  double worst_choi = 0.0;
  bool depth_ok = true;
  std::vector<SynthesizedSample> samples;
  samples.reserve(100);

  for (int trial = 0; trial < 100; ++trial) {
    const Index d = 2 + static_cast<Index>(rng() % 7);          // 2..8
    const Index n = 1 + static_cast<Index>(rng() % (d * d));    // 1..d^2
    const KrausSet k = random_channel(d, n, rng);
    AdaptiveCircuit circuit = synthesize(k);
    const VerificationReport report = verify_circuit(circuit, k);
    worst_isometry = std::max(worst_isometry, report.max_isometry_residual);
    worst_leaf = std::max(worst_leaf, report.max_leaf_residual);
    worst_choi = std::max(worst_choi, report.choi_distance);

    if (n >= 2) {
      int expected = 0;
      while ((Index{1} << expected) < n) ++expected;
      if (circuit.depth != expected) depth_ok = false;
    } else if (circuit.depth != 1) {
      depth_ok = false;
    }
    samples.push_back({d, n, std::move(circuit)});
  }
  const double elapsed = seconds_since(start);

  {
    std::ostringstream detail;
    detail << "100 channels d in 2..8, N in 1..d^2; max isometry residual "
           << worst_isometry << ", max leaf residual " << worst_leaf
           << ", max Choi distance " << worst_choi << ", " << elapsed << " s";
    record(1, "synthesis property suite under 1e-9 / 1e-8 within 60 s",
           worst_isometry < 1e-9 && worst_leaf < 1e-9 && worst_choi < 1e-8 &&
               elapsed < 60.0,
           detail.str());
  }
  {
    record(2, "synthesized depth equals ceil(log2 N) for N >= 2", depth_ok,
           depth_ok ? "all 100 depths match" : "depth mismatch observed");
  }
  return samples;
}

AdaptiveCircuit criterion_3() {
  const SuperOperator t = corner_transpose_superop(3);

  const double expected_det = -std::pow(4.0, -8.0);
  const Complex det = channel_determinant(t);
  const double det_error = std::abs(det - Complex(expected_det)) / std::abs(expected_det);

  // Superoperator spectrum: 1 on the identity direction, -1/4 on the
  // antisymmetric corner coherence, 1/4 with multiplicity 7.
  const Vector identity_direction = vec_rowmajor(Matrix::Identity(3, 3));
  const double identity_residual =
      (t.t * identity_direction - identity_direction).norm();
  Matrix corner = Matrix::Zero(3, 3);
  corner(0, 2) = 1.0;
  corner(2, 0) = -1.0;
  const Vector corner_direction = vec_rowmajor(corner);
  const double corner_residual =
      (t.t * corner_direction + corner_direction / 4.0).norm();

  Eigen::ComplexEigenSolver<Matrix> eigs(t.t);
  std::vector<double> spectrum;
  bool real_spectrum = true;
  for (Index i = 0; i < 9; ++i) {
    if (std::abs(eigs.eigenvalues()(i).imag()) > 1e-12) real_spectrum = false;
    spectrum.push_back(eigs.eigenvalues()(i).real());
  }
  std::sort(spectrum.begin(), spectrum.end());
  bool spectrum_ok = real_spectrum && std::abs(spectrum.front() + 0.25) < 1e-12 &&
                     std::abs(spectrum.back() - 1.0) < 1e-12;
  for (std::size_t i = 1; i + 1 < spectrum.size(); ++i)
    spectrum_ok = spectrum_ok && std::abs(spectrum[i] - 0.25) < 1e-12;

  AdaptiveCircuit reference = corner_transpose_reference_circuit();
  const VerificationReport report =
      verify_circuit(reference, as_kraus(corner_transpose_channel(3)), 1e-10, 1e-8);

  std::ostringstream detail;
  detail << "det rel err " << det_error << ", eigendirection residuals "
         << identity_residual << "/" << corner_residual << ", circuit residuals "
         << report.max_isometry_residual << "/" << report.max_leaf_residual
         << ", Choi distance " << report.choi_distance;
  record(3, "corner transpose determinant -4^-8, spectrum {1, -1/4, 1/4 x7}, circuit",
         det_error < 1e-12 && identity_residual < 1e-12 && corner_residual < 1e-12 &&
             spectrum_ok && report.max_isometry_residual < 1e-10 &&
             report.max_leaf_residual < 1e-10 && report.choi_distance < 1e-8,
         detail.str());
  return reference;
}

AdaptiveCircuit criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  const BinomialCodeSpec spec{12};
  const Index d = spec.dim();
  AdaptiveCircuit circuit = binomial_recovery_circuit(spec);

  const Matrix errors[4] = {Matrix::Identity(d, d), annihilation(d),
                            annihilation(d) * annihilation(d), number_operator(d)};
  const char* names[4] = {"I", "a", "a^2", "n"};
  const std::string expected_syndrome[4] = {"00", "11", "10", "01"};
  const Matrix pw = codespace_projector(spec);
  const Vector up = binomial_codeword_up(spec);
  const Vector down = binomial_codeword_down(spec);

  std::mt19937_64 rng(424242);
  std::normal_distribution<double> normal(0.0, 1.0);
  double min_fidelity = 1.0;
  bool syndromes_ok = true;
  std::string syndrome_note;

  for (int e = 0; e < 4; ++e) {
    for (int trial = 0; trial < 20; ++trial) {
      Vector psi = Complex(normal(rng), normal(rng)) * up +
                   Complex(normal(rng), normal(rng)) * down;
      psi /= psi.norm();
      Vector corrupted = errors[e] * psi;
      corrupted /= corrupted.norm();
      const DensityMatrix recovered =
          apply_channel_exact(circuit, DensityMatrix::pure(corrupted));
      min_fidelity = std::min(min_fidelity, state_fidelity(psi, recovered.rho));

      // Syndrome check on the detectable error component: project the
      // corrupted state off the code space for the dephasing case (whose raw
      // error state overlaps the code space; both of its branches correct
      // exactly, as the fidelity above already verifies).
      Vector detectable = corrupted;
      if (e == 3) {
        detectable = (Matrix::Identity(d, d) - pw) * corrupted;
        detectable /= detectable.norm();
      }
      if (e == 0) detectable = psi;
      const InstrumentOutput syndromes =
          run_instrument(circuit, DensityMatrix::pure(detectable), 2);
      for (const InstrumentOutcome& outcome : syndromes.outcomes) {
        const bool expected = outcome.label.str() == expected_syndrome[e];
        const double target = expected ? 1.0 : 0.0;
        if (std::abs(outcome.probability - target) > 1e-8) {
          syndromes_ok = false;
          syndrome_note = std::string("error ") + names[e] + " leaked to syndrome " +
                          outcome.label.str();
        }
      }
    }
  }
  const double elapsed = seconds_since(start);

  std::ostringstream detail;
  detail << "min fidelity " << min_fidelity << " over 4 errors x 20 states, syndromes "
         << (syndromes_ok ? "(00|01|10|11 as assigned)" : syndrome_note) << ", "
         << elapsed << " s";
  record(4, "binomial recovery fidelity >= 1-1e-8 with matching syndromes within 30 s",
         min_fidelity >= 1.0 - 1e-8 && syndromes_ok && elapsed < 30.0, detail.str());
  return circuit;
}

void criterion_5() {
  const CatCodeSpec spec{{Complex(1.1), Complex(-1.1)}, 1.0, 14};
  const Index d = spec.dim();
  // Truncation leaves the dark coherences decaying at ~8e-10, which floors
  // the doubling residual near 4e-8; the default 1e-8 convergence demand is
  // below that floor, so the relaxation limit is taken at 1e-7 (the channel
  // stops at t = 64 with the dark sector intact).
  const SteadyChannelResult steady =
      steady_channel(lindblad_superop(cat_lindblad(spec)), 1e-7);
  // Kraus magnitudes below the relaxation residual are truncation junk (and
  // the last remnant of the decaying dark coherence); keeping them would
  // leave branch sums conditioned like 1/lambda_min and push the node
  // isometry residuals toward 1e-8. The circuit is built from the operators
  // above 1e-7 (dropped weight ~3e-8), renormalized back to exact trace
  // preservation.
  const KrausSet clean =
      renormalize_trace_preserving(choi_to_kraus(as_choi(steady.channel), 1e-7));
  const AdaptiveCircuit circuit = synthesize(clean);

  const Vector even_cat = cat_state(spec.alphas, d);
  const DensityMatrix vacuum = DensityMatrix::pure(basis_state(0, d));
  const double steady_fidelity =
      state_fidelity(even_cat, apply_channel_exact(circuit, vacuum).rho);

  double min_trajectory_fidelity = 1.0;
  for (int i = 0; i < 100; ++i) {
    const TrajectoryRecord record =
        run_trajectory(circuit, vacuum, RngSeed{777}, static_cast<std::uint64_t>(i));
    min_trajectory_fidelity = std::min(
        min_trajectory_fidelity, state_fidelity(even_cat, record.final_state.rho));
  }

  std::ostringstream detail;
  detail << "steady fidelity " << steady_fidelity << ", min trajectory fidelity "
         << min_trajectory_fidelity << " over 100 runs, depth " << circuit.depth;
  record(5, "2-cat pumping: vacuum reaches the even cat, all trajectories agree",
         steady_fidelity >= 0.999 && min_trajectory_fidelity >= 1.0 - 1e-4,
         detail.str());
}

void criterion_6() {
  // Checked exactly as stated: rank at the default 1e-10 magnitude cutoff
  // for n_c in {10, 14}. At these truncations the imperfectly dark cat
  // states leave a sea of Choi eigenvalues at the squared tail amplitude
  // (2e-6 and 8e-10 respectively), which the 1e-10 cutoff counts, so the
  // literal window cannot be met; the plateau law itself is real and is
  // reported alongside at a cutoff above the measured junk floor (1e-5)
  // and at n_c = 16 where the default cutoff is already clean.
  bool all_ok = true;
  std::ostringstream detail;
  for (const int n_c : {10, 14}) {
    const CatCodeSpec spec{{Complex(1.1), Complex(-1.1)}, 1.0, n_c};
    const std::vector<double> times = {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 1000.0};
    const auto table = rank_vs_time(spec, times);
    const Index plateau = table.back().rank;
    Index peak = 0;
    for (const auto& point : table) peak = std::max(peak, point.rank);
    const bool plateau_ok = plateau >= n_c - 1 && plateau <= n_c + 2;
    const bool overshoot = peak > plateau;
    all_ok = all_ok && plateau_ok && overshoot;

    const auto above_floor = rank_vs_time(spec, times, 1e-5);
    Index clean_peak = 0;
    for (const auto& point : above_floor) clean_peak = std::max(clean_peak, point.rank);
    detail << "n_c=" << n_c << ": plateau@1e-10 " << plateau << " vs [" << n_c - 1 << ","
           << n_c + 2 << "], peak " << peak << " (above junk floor @1e-5: plateau "
           << above_floor.back().rank << ", peak " << clean_peak << "); ";
  }
  {
    const CatCodeSpec spec{{Complex(1.1), Complex(-1.1)}, 1.0, 16};
    const auto table = rank_vs_time(spec, {1000.0});
    detail << "n_c=16 plateau@1e-10 " << table[0].rank << " in [15,18]";
  }
  record(6, "Kraus rank plateau in [n_c-1, n_c+2] at t=1e3 (1e-10 cutoff, n_c 10/14)",
         all_ok, detail.str());
}

void criterion_7() {
  std::mt19937_64 rng(31337);
  double worst_entry = 0.0;
  bool counts_ok = true;
  for (int trial = 0; trial < 50; ++trial) {
    const Index d = 2 + static_cast<Index>(rng() % 5);
    const Index n = 1 + static_cast<Index>(rng() % (d * d));
    const KrausSet k = random_channel(d, n, rng);

    const ChoiMatrix direct = kraus_to_choi(k);
    const ChoiMatrix via = superop_to_choi(kraus_to_superop(k));
    const KrausSet back = choi_to_kraus(via, 1e-10);
    const ChoiMatrix again = kraus_to_choi(back);
    worst_entry = std::max(worst_entry, (direct.m - via.m).cwiseAbs().maxCoeff());
    worst_entry = std::max(worst_entry, (direct.m - again.m).cwiseAbs().maxCoeff());

    if (minimal_kraus(k, 1e-10).count() !=
        kraus_rank(ChannelSpec::from_kraus(k), 1e-10))
      counts_ok = false;
  }
  std::ostringstream detail;
  detail << "max entrywise Choi deviation " << worst_entry << " over 50 channels, "
         << (counts_ok ? "minimal counts match Choi ranks" : "count mismatch");
  record(7, "representation round trips within 1e-10; minimal count = Choi rank",
         worst_entry < 1e-10 && counts_ok, detail.str());
}

void criterion_8(const std::vector<SynthesizedSample>& samples,
                 const AdaptiveCircuit& corner_reference,
                 const AdaptiveCircuit& binomial) {
  double worst_block = 0.0;
  bool angles_ok = true;
  Index rounds = 0;

  auto check_circuit = [&](const AdaptiveCircuit& circuit) {
    const CqedCircuit factored = decompose_circuit(circuit);
    for (const auto& level : factored.levels) {
      for (const CqedRound& round : level) {
        const auto [b0, b1] = reconstruct_blocks(round);
        const TreeNode& node = circuit.node(round.label);
        worst_block = std::max(worst_block, (b0 - node.block0).norm());
        worst_block = std::max(worst_block, (b1 - node.block1).norm());
        for (double theta : round.angles.theta)
          if (theta < 0.0 || theta > M_PI) angles_ok = false;
        ++rounds;
      }
    }
  };

  for (const SynthesizedSample& sample : samples) check_circuit(sample.circuit);
  check_circuit(corner_reference);
  check_circuit(binomial);

  std::ostringstream detail;
  detail << rounds << " rounds decomposed, max block residual " << worst_block << ", "
         << (angles_ok ? "all angles in [0, pi]" : "angle out of range");
  record(8, "hardware factorization round trip below 1e-9 on all suite circuits",
         worst_block < 1e-9 && angles_ok, detail.str());
}

void criterion_9() {
  std::mt19937_64 rng(987654);
  bool all_ok = true;
  std::ostringstream detail;

  struct Case {
    std::string name;
    AdaptiveCircuit circuit;
    DensityMatrix state;
  };
  std::vector<Case> cases;
  cases.push_back({"damping", synthesize(amplitude_damping(0.3)),
                   DensityMatrix::pure((basis_state(0, 2) + basis_state(1, 2)).normalized())});
  cases.push_back({"random-d4", synthesize(random_channel(4, 6, rng)),
                   random_density(4, rng)});
  {
    const BinomialCodeSpec spec{12};
    Vector lost = annihilation(spec.dim()) * binomial_codeword_up(spec);
    lost /= lost.norm();
    cases.push_back({"binomial", binomial_recovery_circuit(spec),
                     DensityMatrix::pure(lost)});
  }

  for (const Case& test_case : cases) {
    const DensityMatrix exact = apply_channel_exact(test_case.circuit, test_case.state);

    const MonteCarloResult mc =
        monte_carlo(test_case.circuit, test_case.state, 10000, RngSeed{1234});
    const double mc_distance = trace_distance(mc.average.rho, exact.rho);

    double probability_sum = 0.0;
    Matrix mixture = Matrix::Zero(test_case.circuit.dim, test_case.circuit.dim);
    const InstrumentOutput paths =
        run_instrument(test_case.circuit, test_case.state, test_case.circuit.depth);
    for (const InstrumentOutcome& outcome : paths.outcomes) {
      probability_sum += outcome.probability;
      mixture += outcome.probability * outcome.state.rho;
    }
    const double instrument_distance = (mixture - exact.rho).norm();

    const bool ok = mc_distance <= 0.05 && instrument_distance < 1e-9 &&
                    std::abs(probability_sum - 1.0) < 1e-9;
    all_ok = all_ok && ok;
    detail << test_case.name << ": MC " << mc_distance << ", paths "
           << instrument_distance << ", prob sum dev "
           << std::abs(probability_sum - 1.0) << "; ";
  }
  record(9, "exact, Monte Carlo (n=1e4) and instrument marginalization agree", all_ok,
         detail.str());
}

void criterion_10() {
  std::mt19937_64 rng(555);
  double worst_idempotence = 0.0;
  double worst_pump = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const Index d = 2 + static_cast<Index>(rng() % 5);  // 2..6
    const DensityMatrix sigma =
        trial % 2 == 0 ? random_density(d, rng) : DensityMatrix::pure(random_pure(d, rng));
    const KrausSet k = init_channel(StabilizationTarget{sigma});
    const SuperOperator t = kraus_to_superop(k);
    worst_idempotence =
        std::max(worst_idempotence, (superop_to_choi(SuperOperator(d, t.t * t.t)).m -
                                     superop_to_choi(t).m)
                                        .norm());
    const AdaptiveCircuit circuit = synthesize(k);
    for (int input = 0; input < 10; ++input) {
      const DensityMatrix rho = random_density(d, rng);
      worst_pump = std::max(
          worst_pump, trace_distance(apply_channel_exact(circuit, rho).rho, sigma.rho));
    }
  }
  std::ostringstream detail;
  detail << "max idempotence Choi distance " << worst_idempotence
         << ", max pump trace distance " << worst_pump;
  record(10, "state-pumping channels idempotent and absorbing within 1e-9",
         worst_idempotence < 1e-9 && worst_pump < 1e-9, detail.str());
}

}  // namespace

int main() {
  std::vector<SynthesizedSample> samples = criteria_1_and_2();
  const AdaptiveCircuit corner_reference = criterion_3();
  const AdaptiveCircuit binomial = criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8(samples, corner_reference, binomial);
  criterion_9();
  criterion_10();

  int failures = 0;
  for (const Criterion& result : g_results)
    if (!result.passed) ++failures;
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(g_results.size()) - failures,
              g_results.size());
  return failures == 0 ? 0 : 1;
}
