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
#include "holoqc/cmt.hpp"
#include "holoqc/errors.hpp"
#include "holoqc/metrics.hpp"
#include "oracles.hpp"

using namespace holoqc;

TEST_CASE("process fidelity ignores global phase") {
  std::mt19937_64 rng(29);
  for (int n : {2, 4, 8}) {
    const ComplexMatrix u = oracle::random_unitary(n, rng);
    const double phase = 0.37 * n;
    const auto r = process_fidelity(u, std::polar(1.0, phase) * u);
    CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.global_phase == doctest::Approx(phase).epsilon(1e-12));
    CHECK(r.max_elementwise_error < 1e-14);
    CHECK(r.pass);

    const ComplexMatrix v = oracle::random_unitary(n, rng);
    const auto other = process_fidelity(u, v);
    CHECK(other.fidelity == doctest::Approx(oracle::fidelity(u, v)).epsilon(1e-14));
    CHECK(other.fidelity <= 1.0);
    CHECK_FALSE(other.pass);
  }
}

TEST_CASE("fidelity threshold and dimension checks") {
  const ComplexMatrix x = oracle::pauli_x(), z = oracle::pauli_z();
  CHECK(process_fidelity(x, z).fidelity == 0.0);
  CHECK(process_fidelity(x, z, 0.0).pass);
  ComplexMatrix s = oracle::id2();
  s(1, 1) = Complex(0, 1);
  CHECK(process_fidelity(oracle::id2(), s).fidelity == doctest::Approx(oracle::kS).epsilon(1e-15));
  CHECK_THROWS_AS(process_fidelity(x, oracle::cnot2()), DimensionMismatch);
}

TEST_CASE("efficiency and realized unitary from a transfer matrix") {
  const ModeSet modes = make_cone_basis(fixture::geometry(2));
  ComplexMatrix t = ComplexMatrix::Zero(4, 4);
  // S1 -> R2, S2 -> R1, R1 -> S1 (half), R2 -> S2.
  t(3, 0) = 1;
  t(2, 1) = Complex(0, 1);
  t(0, 2) = oracle::kS;
  t(2, 2) = oracle::kS;
  t(1, 3) = 1;
  const TransferResult r = make_transfer_result(t, 1e-3);
  CHECK(diffraction_efficiency(r, modes, signal(1), reference(2)) == 1.0);
  CHECK(diffraction_efficiency(r, modes, reference(1), signal(1)) == doctest::Approx(0.5));
  CHECK(r.per_mode_efficiency[2] == doctest::Approx(0.5));
  const ComplexMatrix refs = realized_unitary(r, modes, Role::Reference);
  CHECK(refs(1, 0) == Complex(1.0));
  CHECK(refs(0, 1) == Complex(0, 1));
  CHECK(realized_unitary(r, modes, Role::Signal).cwiseAbs().maxCoeff() == 0.0);
  const TransferResult small = make_transfer_result(ComplexMatrix::Identity(2, 2), 0.0);
  CHECK_THROWS_AS(realized_unitary(small, modes, Role::Signal), DimensionMismatch);
  CHECK_THROWS_AS(diffraction_efficiency(small, modes, signal(1), signal(1)), DimensionMismatch);
}

TEST_CASE("unitarity audit") {
  CHECK(unitarity_defect(oracle::hadamard()) < 1e-15);
  CHECK(is_unitary(oracle::u_qt_printed()));
  ComplexMatrix bad = oracle::hadamard();
  bad(1, 1) = 0;
  CHECK_FALSE(is_unitary(bad));
  CHECK(wrap_angle(-kPi / 2) == doctest::Approx(3 * kPi / 2));
  CHECK(wrap_angle(2 * kPi) == doctest::Approx(0.0));
}
