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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace channelforge;
using namespace channelforge::testing;

namespace {

// Finite-difference oracle for the generator action: d/dt exp(Lt)|vec(rho)
// at t = 0 equals the Lindblad right-hand side computed directly.
Matrix lindblad_rhs(const LindbladSpec& spec, const Matrix& rho) {
  Matrix out = Complex(0, -1) * (spec.hamiltonian * rho - rho * spec.hamiltonian);
  const Index n = static_cast<Index>(spec.jumps.size());
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Matrix& ln = spec.jumps[static_cast<std::size_t>(a)];
      const Matrix& lm = spec.jumps[static_cast<std::size_t>(b)];
      out += spec.coeffs(a, b) *
             (ln * rho * lm.adjoint() -
              0.5 * (rho * lm.adjoint() * ln + lm.adjoint() * ln * rho));
    }
  return out;
}

}  // namespace

TEST_CASE("lindblad_superop: vacuum is steady under pure damping") {
  const LindbladSpec spec = LindbladSpec::standard(Matrix::Zero(2, 2), {annihilation(2)});
  const SuperOperator gen = lindblad_superop(spec);
  const Vector vacuum = vec_rowmajor(basis_state(0, 2) * basis_state(0, 2).adjoint());
  CHECK((gen.t * vacuum).norm() < 1e-14);
}

TEST_CASE("lindblad_superop: pure Hamiltonian generator has imaginary spectrum") {
  const LindbladSpec spec = LindbladSpec::standard(pauli_z(), {});
  const SuperOperator gen = lindblad_superop(spec);
  const Eigen::ComplexEigenSolver<Matrix> eigs(gen.t);
  for (Index i = 0; i < 4; ++i) CHECK(std::abs(eigs.eigenvalues()(i).real()) < 1e-12);
  // And the exponential is a unitary channel: determinant modulus 1.
  CHECK(std::abs(channel_determinant(exp_superop(gen, 0.7))) == doctest::Approx(1.0));
}

TEST_CASE("lindblad_superop: generator action matches the direct right-hand side") {
  std::mt19937_64 rng(51);
  const Index d = 3;
  const Matrix g = random_gaussian(d, d, rng);
  const Matrix h = (g + g.adjoint()) / 2.0;
  const std::vector<Matrix> jumps = {random_gaussian(d, d, rng), random_gaussian(d, d, rng)};
  Matrix coeffs = random_gaussian(2, 2, rng);
  coeffs = coeffs * coeffs.adjoint();  // PSD
  const LindbladSpec spec(d, h, jumps, coeffs);
  const SuperOperator gen = lindblad_superop(spec);
  const DensityMatrix rho = random_density(d, rng);
  const Matrix via_superop = unvec_rowmajor(gen.t * vec_rowmajor(rho.rho), d, d);
  CHECK((via_superop - lindblad_rhs(spec, rho.rho)).norm() < 1e-12);
}

TEST_CASE("lindblad_superop: non-PSD coefficients are rejected") {
  Matrix coeffs = -Matrix::Identity(1, 1);
  CHECK_THROWS_AS(
      lindblad_superop(LindbladSpec(2, Matrix::Zero(2, 2), {annihilation(2)}, coeffs)),
      InvalidGenerator);
}

TEST_CASE("lindblad_superop: two-component cat generator has a multi-dimensional kernel") {
  const CatCodeSpec spec{{Complex(1.1), Complex(-1.1)}, 1.0, 10};
  const SuperOperator gen = lindblad_superop(cat_lindblad(spec));
  const Eigen::ComplexEigenSolver<Matrix> eigs(gen.t);
  Index near_zero = 0;
  for (Index i = 0; i < eigs.eigenvalues().size(); ++i)
    if (std::abs(eigs.eigenvalues()(i)) < 1e-8) ++near_zero;
  CHECK(near_zero >= 2);
}

TEST_CASE("exp_channel: t = 0 is the identity channel") {
  const LindbladSpec spec = LindbladSpec::standard(Matrix::Zero(2, 2), {annihilation(2)});
  const ChannelSpec channel = exp_channel(lindblad_superop(spec), 0.0);
  const KrausSet& k = std::get<KrausSet>(channel.repr);
  REQUIRE(k.count() == 1);
  CHECK((k.ops[0] - Matrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("exp_channel: damping at large t is the reset-to-vacuum channel") {
  const SuperOperator gen =
      lindblad_superop(LindbladSpec::standard(Matrix::Zero(2, 2), {annihilation(2)}));
  const ChannelSpec channel = exp_channel(gen, 50.0);
  // Analytic limit: rho -> |0><0| Tr rho, i.e. Kraus {|0><0|, |0><1|}.
  const KrausSet expected(2, {basis_state(0, 2) * basis_state(0, 2).adjoint(),
                              basis_state(0, 2) * basis_state(1, 2).adjoint()});
  CHECK(kraus_channel_distance(std::get<KrausSet>(channel.repr), expected) < 1e-8);
}

TEST_CASE("exp_channel: amplitude damping matches the analytic Kraus pair at finite t") {
  const SuperOperator gen =
      lindblad_superop(LindbladSpec::standard(Matrix::Zero(2, 2), {annihilation(2)}));
  const double t = 0.8;
  const double gamma = 1.0 - std::exp(-t);
  const ChannelSpec channel = exp_channel(gen, t);
  CHECK(kraus_channel_distance(std::get<KrausSet>(channel.repr),
                               amplitude_damping(gamma)) < 1e-10);
}

TEST_CASE("exp_channel: semigroup property exp(L(t1+t2)) = exp(Lt2)·exp(Lt1)") {
  const CatCodeSpec spec{{Complex(1.1), Complex(-1.1)}, 1.0, 8};
  const SuperOperator gen = lindblad_superop(cat_lindblad(spec));
  const SuperOperator a = exp_superop(gen, 0.4);
  const SuperOperator b = exp_superop(gen, 1.3);
  const SuperOperator ab = exp_superop(gen, 1.7);
  CHECK((b.t * a.t - ab.t).norm() < 1e-8);
}

TEST_CASE("exp_channel: negative time is rejected") {
  const SuperOperator gen =
      lindblad_superop(LindbladSpec::standard(Matrix::Zero(2, 2), {annihilation(2)}));
  CHECK_THROWS_AS(exp_channel(gen, -1.0), InvalidGenerator);
}

TEST_CASE("cat_jump_operator: single alpha = 0 reduces to sqrt(kappa)·a") {
  const CatCodeSpec spec{{Complex(0.0)}, 2.0, 6};
  CHECK((cat_jump_operator(spec) - std::sqrt(2.0) * annihilation(7)).norm() < 1e-14);
}

TEST_CASE("cat_jump_operator: two-component jump annihilates both coherent states") {
  // The dark-state residual is the truncated coherent tail, roughly
  // alpha^(n_c - 1)/sqrt((n_c - 1)!): about 2e-7 at alpha = 1.1, n_c = 18.
  const CatCodeSpec spec{{Complex(1.1), Complex(-1.1)}, 1.0, 18};
  REQUIRE(spec.truncation_ok());
  const Matrix j = cat_jump_operator(spec);
  CHECK((j * coherent_state(Complex(1.1), spec.dim())).norm() < 1e-6);
  CHECK((j * coherent_state(Complex(-1.1), spec.dim())).norm() < 1e-6);
}

TEST_CASE("cat_jump_operator: four-component jump annihilates all four components") {
  const CatCodeSpec spec{{Complex(2.5), Complex(0.0, 2.5), Complex(-2.5), Complex(0.0, -2.5)},
                         1.0,
                         40};
  for (const Complex& alpha : spec.alphas)
    CHECK((cat_jump_operator(spec) * coherent_state(alpha, spec.dim())).norm() < 1e-6);
}

TEST_CASE("steady_channel: qubit damping relaxes to the reset channel") {
  const SuperOperator gen =
      lindblad_superop(LindbladSpec::standard(Matrix::Zero(2, 2), {annihilation(2)}));
  const SteadyChannelResult steady = steady_channel(gen);
  const KrausSet expected(2, {basis_state(0, 2) * basis_state(0, 2).adjoint(),
                              basis_state(0, 2) * basis_state(1, 2).adjoint()});
  CHECK(kraus_channel_distance(std::get<KrausSet>(steady.channel.repr), expected) < 1e-7);
  CHECK(steady.residual < 1e-8);
}

TEST_CASE("steady_channel: zero generator converges immediately to the identity") {
  const SuperOperator gen(2, Matrix::Zero(4, 4));
  const SteadyChannelResult steady = steady_channel(gen);
  CHECK(steady.doublings == 1);
  const KrausSet& k = std::get<KrausSet>(steady.channel.repr);
  REQUIRE(k.count() == 1);
  CHECK((k.ops[0] - Matrix::Identity(2, 2)).norm() < 1e-10);
}

TEST_CASE("steady_channel: 2-cat pumping sends vacuum to the even cat state") {
  const CatCodeSpec spec{{Complex(1.1), Complex(-1.1)}, 1.0, 14};
  // Truncation makes the dark coherences decay at ~8e-10, so the doubling
  // residual bottoms out near gamma*t ~ 4e-8; 1e-7 sits just above that
  // floor and stops at t = 64 with the dark sector intact.
  const SteadyChannelResult steady =
      steady_channel(lindblad_superop(cat_lindblad(spec)), 1e-7);
  CHECK(steady.residual < 1e-7);
  const AdaptiveCircuit circuit = synthesize(std::get<KrausSet>(steady.channel.repr));
  const DensityMatrix out =
      apply_channel_exact(circuit, DensityMatrix::pure(basis_state(0, spec.dim())));
  const Vector even_cat = cat_state({Complex(1.1), Complex(-1.1)}, spec.dim());
  CHECK(state_fidelity(even_cat, out.rho) >= 0.999);
}

TEST_CASE("steady_channel: every even-parity input relaxes into the even cat sector") {
  const CatCodeSpec spec{{Complex(1.1), Complex(-1.1)}, 1.0, 14};
  const Index d = spec.dim();
  const SteadyChannelResult steady =
      steady_channel(lindblad_superop(cat_lindblad(spec)), 1e-7);
  const SuperOperator t = kraus_to_superop(std::get<KrausSet>(steady.channel.repr));
  const Vector even_cat = cat_state(spec.alphas, d);

  std::vector<Vector> inputs = {basis_state(0, d), basis_state(2, d),
                                (basis_state(0, d) + basis_state(2, d)) / std::sqrt(2.0)};
  for (const Vector& psi : inputs) {
    const Matrix out =
        unvec_rowmajor(t.t * vec_rowmajor(psi * psi.adjoint()), d, d);
    CHECK(state_fidelity(even_cat, out) >= 0.99);
    // Pure limit: the even sector has a unique steady state.
    CHECK((out * out).trace().real() >= 0.99);
  }
}

TEST_CASE("cat exp-channel magnitudes equal the Choi spectrum") {
  const CatCodeSpec spec{{Complex(1.1), Complex(-1.1)}, 1.0, 8};
  const ChannelSpec channel = exp_channel(lindblad_superop(cat_lindblad(spec)), 2.0);
  const std::vector<double> weights =
      kraus_magnitudes(std::get<KrausSet>(channel.repr));
  const EigenSystem spectrum =
      hermitian_eigs(choi_from_kraus_action(std::get<KrausSet>(channel.repr)));
  for (std::size_t i = 0; i < weights.size(); ++i)
    CHECK(std::abs(weights[i] - spectrum.values(static_cast<Index>(i))) < 1e-9);
}

TEST_CASE("cat pumping trajectories all land on the same pure state") {
  const CatCodeSpec spec{{Complex(1.1), Complex(-1.1)}, 1.0, 14};
  const Index d = spec.dim();
  const SteadyChannelResult steady =
      steady_channel(lindblad_superop(cat_lindblad(spec)), 1e-7);
  const KrausSet clean =
      renormalize_trace_preserving(choi_to_kraus(as_choi(steady.channel), 1e-7));
  const AdaptiveCircuit circuit = synthesize(clean);
  const DensityMatrix vacuum = DensityMatrix::pure(basis_state(0, d));
  const Vector even_cat = cat_state(spec.alphas, d);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const TrajectoryRecord record = run_trajectory(circuit, vacuum, RngSeed{3}, i);
    CHECK(state_fidelity(even_cat, record.final_state.rho) >= 1.0 - 1e-6);
  }
}

TEST_CASE("steady_channel: below the truncation drift floor it reports NotRelaxing") {
  const CatCodeSpec spec{{Complex(1.1), Complex(-1.1)}, 1.0, 10};
  // At n_c = 10 the truncated dark coherences decay at ~6e-6; a 1e-12
  // convergence demand can never be met.
  CHECK_THROWS_AS(steady_channel(lindblad_superop(cat_lindblad(spec)), 1e-12, 40),
                  NotRelaxing);
}

TEST_CASE("steady_channel: a Hamiltonian rotation never relaxes") {
  const LindbladSpec spec = LindbladSpec::standard(pauli_z(), {});
  CHECK_THROWS_AS(steady_channel(lindblad_superop(spec), 1e-10, 30), NotRelaxing);
}

TEST_CASE("rank_vs_time: rank 1 at t = 0, overshoot, and the plateau near d") {
  const CatCodeSpec spec{{Complex(1.1), Complex(-1.1)}, 1.0, 10};
  const std::vector<double> times = {0.0, 0.5, 2.0, 1000.0};
  // At n_c = 10 the imperfectly-dark truncated cats leave a sea of Choi
  // eigenvalues at the squared tail amplitude (~2e-6 here), so the plateau
  // is read at a magnitude threshold above that floor.
  const auto table = rank_vs_time(spec, times, 1e-5);
  REQUIRE(table.size() == 4);
  CHECK(table[0].rank == 1);
  // Intermediate times exceed the long-time plateau.
  const Index plateau = table[3].rank;
  CHECK(std::max(table[1].rank, table[2].rank) > plateau);
  CHECK(plateau >= spec.n_c - 1);
  CHECK(plateau <= spec.n_c + 2);
  // Magnitudes sum to d at every time (up to the mass under the threshold).
  for (const auto& point : table) {
    double sum = 0.0;
    for (double magnitude : point.magnitudes) sum += magnitude;
    CHECK(sum == doctest::Approx(static_cast<double>(spec.dim())).epsilon(1e-4));
  }
}

TEST_CASE("rank_vs_time: at a clean truncation the default threshold sees the plateau") {
  // n_c = 16 keeps the truncation junk below 1e-10 for alpha = 1.1, so the
  // default cutoff already measures the physical plateau.
  const CatCodeSpec spec{{Complex(1.1), Complex(-1.1)}, 1.0, 16};
  const auto table = rank_vs_time(spec, {1000.0});
  CHECK(table[0].rank >= spec.n_c - 1);
  CHECK(table[0].rank <= spec.n_c + 2);
}

TEST_CASE("coherent_state and cat_state are normalized with correct overlap") {
  const Vector alpha = coherent_state(Complex(1.1), 15);
  CHECK(alpha.norm() == doctest::Approx(1.0));
  // <alpha|-alpha> = exp(-2|alpha|^2) up to truncation tails.
  const Vector minus = coherent_state(Complex(-1.1), 15);
  CHECK(std::abs(alpha.dot(minus) - std::exp(-2.0 * 1.21)) < 1e-8);
  CHECK(cat_state({Complex(1.1), Complex(-1.1)}, 15).norm() == doctest::Approx(1.0));
}
