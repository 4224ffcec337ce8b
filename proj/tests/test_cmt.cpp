// Copyright 2026 The holoqc Authors
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

#include "fixtures.hpp"
#include "holoqc/circuit.hpp"
#include "holoqc/cmt.hpp"
#include "holoqc/errors.hpp"
#include "holoqc/metrics.hpp"
#include "oracles.hpp"

using namespace holoqc;

namespace {

double frob(const ComplexMatrix& m) { return m.norm(); }

Hologram single(ModeRef from, ModeRef to, double delta_n) {
  return Hologram{{Exposure{{{from, 1.0}}, to, delta_n, 0.0}}, std::nullopt, "single"};
}

// Two bare modes joined by one term with the given coupling and mismatch.
CouplingSystem two_mode(double kappa, double xi) {
  PlaneWaveMode a, b;
  a.role = Role::Signal;
  b.role = Role::Reference;
  a.wavenumber = b.wavenumber = 2 * kPi / 1e-6;
  a.cone_half_angle = 0.1;
  b.cone_half_angle = 0.3;
  return CouplingSystem({a, b}, {CouplingTerm{0, 1, kappa, xi, Vec3::Zero(), kappa, true}});
}

double kappa0_oracle(double delta_n, double lambda, double ta, double tb) {
  return kPi * delta_n / (lambda * std::sqrt(std::cos(ta) * std::cos(tb)));
}

}  // namespace

TEST_CASE("coupling strengths and phase matching") {
  const ConeGeometry g = fixture::geometry(8);
  const ModeSet modes = make_cone_basis(g);
  const MaterialSpec material = fixture::material();
  const CouplingSystem one = build_coupling(single(signal(1), reference(1), 1e-4), modes, material);
  int recorded = 0;
  for (const auto& t : one.terms()) {
    if (!t.recorded) continue;
    ++recorded;
    CHECK(t.xi == 0.0);
    CHECK(t.from == modes.universe_index(signal(1)));
    CHECK(t.to == modes.universe_index(reference(1)));
    CHECK(std::abs(t.kappa) ==
          doctest::Approx(kappa0_oracle(1e-4, g.wavelength, g.signal_half_angle, g.reference_half_angle))
              .epsilon(1e-14));
  }
  CHECK(recorded == 1);

  const Hologram qt = compile_multiplex(printed_qt_unitary(), modes, 1e-4);
  const CouplingSystem sys = build_coupling(qt, modes, material);
  const ComplexMatrix k = sys.kappa_matrix();
  const double k0 = kappa0_oracle(1e-4, g.wavelength, g.signal_half_angle, g.reference_half_angle);
  CHECK(std::abs(k(modes.universe_index(reference(1)), modes.universe_index(signal(1)))) ==
        doctest::Approx(k0 * oracle::kS).epsilon(1e-12));
  CHECK(std::abs(k(modes.universe_index(reference(1)), modes.universe_index(signal(7)))) ==
        doctest::Approx(k0 * oracle::kS).epsilon(1e-12));
  CHECK(frob(k - k.adjoint()) == 0.0);
  const Eigen::MatrixXd xi = sys.detuning_matrix();
  CHECK((xi + xi.transpose()).norm() == 0.0);

  MaterialSpec weak = material;
  weak.max_index_modulation = 1e-5;
  CHECK_THROWS_AS(build_coupling(qt, modes, weak), MalformedPlan);
}

TEST_CASE("optimal thickness") {
  const double k0 = kPi / (2 * 5e-3);
  CHECK(optimal_thickness(two_mode(k0, 0.0)) == doctest::Approx(5e-3).epsilon(1e-14));
  const ModeSet modes = make_cone_basis(fixture::geometry(4));
  const MaterialSpec material = fixture::material();
  const double d1 = optimal_thickness(build_coupling(single(signal(1), reference(1), 2e-4), modes, material));
  const double d2 = optimal_thickness(build_coupling(single(signal(1), reference(1), 4e-4), modes, material));
  CHECK(d2 == doctest::Approx(d1 / 2).epsilon(1e-14));

  Hologram mixed{{Exposure{{{signal(1), 1.0}}, reference(1), 1e-4, 0.0},
                  Exposure{{{signal(2), 1.0}}, reference(2), 2e-4, 0.0}},
                 std::nullopt, "mixed"};
  CHECK_THROWS_AS(optimal_thickness(build_coupling(mixed, modes, material)), NonuniformCoupling);
}

TEST_CASE("single grating efficiency") {
  const ModeSet modes = make_cone_basis(fixture::geometry(4));
  const MaterialSpec material = fixture::material();
  const CouplingSystem sys = build_coupling(single(signal(2), reference(3), 3e-4), modes, material);
  const double d = optimal_thickness(sys);
  const TransferResult full = ideal_transfer(sys, d);
  CHECK(diffraction_efficiency(full, modes, signal(2), reference(3)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(full.per_mode_efficiency[modes.universe_index(signal(2))] == doctest::Approx(1.0).epsilon(1e-12));
  const TransferResult half = ideal_transfer(sys, d / 2);
  CHECK(diffraction_efficiency(half, modes, signal(2), reference(3)) == doctest::Approx(0.5).epsilon(1e-12));
  // Reciprocity.
  const int s = modes.universe_index(signal(2)), r = modes.universe_index(reference(3));
  CHECK(std::abs(half.transfer(r, s)) == doctest::Approx(std::abs(half.transfer(s, r))).epsilon(1e-14));
  // Untouched modes pass straight through.
  CHECK(std::abs(full.transfer(0, 0) - Complex(1.0)) < 1e-14);
}

TEST_CASE("ideal transfer equals the matrix exponential") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 7;  // up to 16 modes
    const ModeSet modes = make_cone_basis(fixture::geometry(n));
    std::vector<CouplingTerm> terms;
    std::vector<PlaneWaveMode> universe;
    for (int m = 0; m < modes.universe_size(); ++m) universe.push_back(modes.at(modes.universe_ref(m)));
    for (int a = 0; a < 2 * n; ++a)
      for (int b = a + 1; b < 2 * n; ++b)
        terms.push_back({a, b, Complex(gauss(rng), gauss(rng)) * 100.0, 0.0, Vec3::Zero(), 1.0, true});
    const CouplingSystem sys(universe, terms);
    const double d = 3e-3;
    const ComplexMatrix expected = (Complex(0, d) * sys.kappa_matrix()).exp();
    const TransferResult r = ideal_transfer(sys, d);
    CHECK(frob(r.transfer - expected) < 1e-10);
    CHECK(unitarity_defect(r.transfer) < 1e-8);
  }
}

TEST_CASE("multiplexed block closed form") {
  std::mt19937_64 rng(17);
  const MaterialSpec material = fixture::material();
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 << (trial % 3);
    const ModeSet modes = make_cone_basis(fixture::geometry(n));
    const ComplexMatrix u = oracle::random_unitary(n, rng);
    const CouplingSystem sys = build_coupling(compile_multiplex(u, modes, 1e-4), modes, material);
    const double d = optimal_thickness(sys) * (0.3 + 0.1 * (trial % 7));
    const double k0d = kPi / 2 * (0.3 + 0.1 * (trial % 7));
    const ComplexMatrix t = ideal_transfer(sys, d).transfer;
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    CHECK(frob(t.topLeftCorner(n, n) - std::cos(k0d) * id) < 1e-9);
    CHECK(frob(t.bottomRightCorner(n, n) - std::cos(k0d) * id) < 1e-9);
    CHECK(frob(t.bottomLeftCorner(n, n) - Complex(0, std::sin(k0d)) * u) < 1e-9);
    CHECK(frob(t.topRightCorner(n, n) - Complex(0, std::sin(k0d)) * u.adjoint()) < 1e-9);
  }

  const ModeSet modes8 = make_cone_basis(fixture::geometry(8));
  const CouplingSystem qt = build_coupling(compile_multiplex(printed_qt_unitary(), modes8, 1e-4), modes8, material);
  const ComplexMatrix expected = (Complex(0, optimal_thickness(qt)) * qt.kappa_matrix()).exp();
  CHECK(frob(expected.bottomLeftCorner(8, 8) - Complex(0, 1) * printed_qt_unitary()) < 1e-9);
}

TEST_CASE("detuned two-mode system follows the closed form") {
  const double d = 1e-3;
  double worst = 0.0;
  for (int i = 0; i <= 8; ++i) {
    const double nu = kPi * i / 8;
    for (int j = 0; j <= 8; ++j) {
      const double half_xi_d = 2 * kPi * j / 8;
      const TransferResult r = detuned_transfer(two_mode(nu / d, 2 * half_xi_d / d), d, {});
      worst = std::max(worst, std::abs(std::norm(r.transfer(1, 0)) -
                                       oracle::two_mode_efficiency(nu, half_xi_d)));
      CHECK(unitarity_defect(r.transfer) < 1e-8);
    }
  }
  CHECK(worst < 1e-6);

  // First null of the tuned grating sits where the generalized angle reaches pi.
  const double nu = kPi / 2;
  const double null_half_xi_d = kPi * std::sqrt(3.0) / 2;
  const auto eta = [&](double h) {
    return std::norm(detuned_transfer(two_mode(nu / d, 2 * h / d), d, {}).transfer(1, 0));
  };
  CHECK(eta(null_half_xi_d) < 1e-12);
  CHECK(eta(null_half_xi_d * 0.9) > 1e-3);
  CHECK(eta(null_half_xi_d * 1.1) > 1e-3);
  for (double h = 0.05; h < null_half_xi_d; h += 0.05) CHECK(eta(h) < eta(h - 0.05));
}

TEST_CASE("detuned agrees with ideal at Bragg match and converges") {
  std::mt19937_64 rng(23);
  const MaterialSpec material = fixture::material();
  const ModeSet modes = make_cone_basis(fixture::geometry(4));
  const CouplingSystem sys = build_coupling(compile_multiplex(oracle::random_unitary(4, rng), modes, 2e-4), modes, material);
  const double d = optimal_thickness(sys);
  const ComplexMatrix ideal = ideal_transfer(sys, d).transfer;
  const ComplexMatrix coarse = detuned_transfer(sys, d, {}).transfer;
  CHECK(frob(coarse - ideal) < 1e-9);

  DetunedOptions tilted;
  tilted.tilt = 2e-3;
  tilted.include_crosstalk = true;
  const ComplexMatrix a = detuned_transfer(sys, d, tilted).transfer;
  tilted.refinement = 2;
  const ComplexMatrix b = detuned_transfer(sys, d, tilted).transfer;
  CHECK(frob(a - b) < 1e-9);
  CHECK(unitarity_defect(a) < 1e-8);

  CHECK_THROWS_AS(detuned_transfer(sys, 0.0, {}), StepUnderflow);
  DetunedOptions wild;
  wild.tilt = 1e-3;
  wild.tilt_mode = 99;
  CHECK_THROWS_AS(detuned_transfer(sys, d, wild), UnknownMode);
}

TEST_CASE("stack simulation") {
  const MaterialSpec material = fixture::material();
  const ModeSet modes = make_cone_basis(fixture::geometry(4));
  const TransferResult empty = simulate_stack(GratingStack{{}, modes}, material, SimulationMode::Ideal, {});
  CHECK(frob(empty.transfer - ComplexMatrix::Identity(8, 8)) == 0.0);

  GratingStack cnot = compile_cnot_stack(modes, 5e-4);
  CHECK_THROWS_AS(simulate_stack(cnot, material, SimulationMode::Ideal, {}), MalformedPlan);
  tune_thickness(cnot, material);
  for (auto mode : {SimulationMode::Ideal, SimulationMode::Detuned}) {
    const TransferResult r = simulate_stack(cnot, material, mode, {});
    CHECK(unitarity_defect(r.transfer) < 1e-8);
    const auto f = process_fidelity(oracle::cnot2(), realized_unitary(r, modes, Role::Signal));
    CHECK(f.fidelity >= 1 - 1e-9);
  }
}

TEST_CASE("selectivity sweep") {
  const MaterialSpec material = fixture::material();
  const ModeSet modes = make_cone_basis(fixture::geometry(2));
  const Hologram thin = single(signal(1), reference(1), 4e-4);
  const Hologram thick = single(signal(1), reference(1), 2e-4);
  const double d_thin = optimal_thickness(build_coupling(thin, modes, material));
  const double d_thick = optimal_thickness(build_coupling(thick, modes, material));
  CHECK(d_thick == doctest::Approx(2 * d_thin).epsilon(1e-12));

  const int samples = 801;
  const double range = 0.02;
  const auto first_null = [&](const std::vector<SweepRow>& rows) {
    for (std::size_t i = 1; i + 1 < rows.size(); ++i)
      if (rows[i].efficiency <= rows[i - 1].efficiency && rows[i].efficiency < rows[i + 1].efficiency)
        return rows[i].tilt;
    return -1.0;
  };
  const auto a = selectivity_sweep(thin, modes, material, d_thin, range, samples);
  const auto b = selectivity_sweep(thick, modes, material, d_thick, range, samples);
  REQUIRE(a.size() == samples);
  CHECK(a.front().tilt == 0.0);
  CHECK(a.back().tilt == doctest::Approx(range).epsilon(1e-15));
  CHECK(a[1].tilt == doctest::Approx(range / (samples - 1)).epsilon(1e-12));
  CHECK(a.front().efficiency == doctest::Approx(1.0).epsilon(1e-9));
  const double na = first_null(a), nb = first_null(b);
  REQUIRE(na > 0);
  REQUIRE(nb > 0);
  CHECK(nb / na == doctest::Approx(0.5).epsilon(0.05));
  for (std::size_t i = 1; a[i].tilt <= na; ++i) CHECK(a[i].efficiency <= a[i - 1].efficiency);

  CHECK_THROWS_AS(selectivity_sweep(thin, modes, material, d_thin, range, 1), InputError);
  CHECK_THROWS_AS(selectivity_sweep(thin, modes, material, d_thin, 0.0, 5), InputError);
}
