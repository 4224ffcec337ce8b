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

// Independent reference values for the tests. Nothing here calls into the
// library: literal matrices are transcribed by hand and the algebra is done
// with plain loops or Eigen built-ins.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;
using V = Eigen::VectorXcd;

inline const double kS = 1.0 / std::sqrt(2.0);

inline M from_ints(int n, std::initializer_list<int> entries, double scale = 1.0) {
  M m(n, n);
  auto it = entries.begin();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = scale * *it++;
  return m;
}

// 3-qubit controlled-NOT, control on the top wire, target on the middle one.
inline M u_cnot_printed() {
  return from_ints(8, {1, 0, 0, 0, 0, 0, 0, 0,  //
                       0, 1, 0, 0, 0, 0, 0, 0,  //
                       0, 0, 1, 0, 0, 0, 0, 0,  //
                       0, 0, 0, 1, 0, 0, 0, 0,  //
                       0, 0, 0, 0, 0, 0, 1, 0,  //
                       0, 0, 0, 0, 0, 0, 0, 1,  //
                       0, 0, 0, 0, 1, 0, 0, 0,  //
                       0, 0, 0, 0, 0, 1, 0, 0});
}

// Controlled-NOT, middle wire controls the bottom one.
inline M u_cx_printed() {
  return from_ints(8, {1, 0, 0, 0, 0, 0, 0, 0,  //
                       0, 1, 0, 0, 0, 0, 0, 0,  //
                       0, 0, 0, 1, 0, 0, 0, 0,  //
                       0, 0, 1, 0, 0, 0, 0, 0,  //
                       0, 0, 0, 0, 1, 0, 0, 0,  //
                       0, 0, 0, 0, 0, 1, 0, 0,  //
                       0, 0, 0, 0, 0, 0, 0, 1,  //
                       0, 0, 0, 0, 0, 0, 1, 0});
}

inline M u_cz_printed() {
  return from_ints(8, {1, 0, 0, 0, 0,  0,  0,  0,   //
                       0, 1, 0, 0, 0,  0,  0,  0,   //
                       0, 0, 1, 0, 0,  0,  0,  0,   //
                       0, 0, 0, 1, 0,  0,  0,  0,   //
                       0, 0, 0, 0, -1, 0,  0,  0,   //
                       0, 0, 0, 0, 0,  -1, 0,  0,   //
                       0, 0, 0, 0, 0,  0,  -1, 0,   //
                       0, 0, 0, 0, 0,  0,  0,  -1});
}

// Tabulated teleportation unitary, transcribed by hand.
inline M u_qt_printed() {
  return from_ints(8, {1,  0,  0,  0,  0, 0, 1, 0,  //
                       0,  1,  0,  0,  0, 0, 0, 1,  //
                       0,  0,  0,  1,  0, 1, 0, 0,  //
                       0,  0,  1,  0,  1, 0, 0, 0,  //
                       -1, 0,  0,  0,  0, 0, 1, 0,  //
                       0,  -1, 0,  0,  0, 0, 0, 1,  //
                       0,  0,  0,  -1, 0, 1, 0, 0,  //
                       0,  0,  -1, 0,  1, 0, 0, 0},
                   kS);
}

// Recording signal states: pairs (mode index, sign) with 1/sqrt(2) weight,
// mode indices 1-based.
struct SigmaTerm {
  int mode;
  int sign;
};
inline std::vector<std::vector<SigmaTerm>> sigma_printed() {
  return {{{7, +1}, {1, +1}}, {{8, +1}, {2, +1}}, {{6, +1}, {4, +1}}, {{5, +1}, {3, +1}},
          {{7, +1}, {1, -1}}, {{8, +1}, {2, -1}}, {{6, +1}, {4, -1}}, {{5, +1}, {3, -1}}};
}

// Signal-to-reference map written term by term: entry (i, j) couples S_j to R_i.
inline M qt_signal_to_reference_printed() {
  M m = M::Zero(8, 8);
  const int plus[][2] = {{1, 1}, {1, 7}, {2, 2}, {2, 8}, {3, 4}, {3, 6}, {4, 3}, {4, 5},
                         {5, 7}, {6, 8}, {7, 6}, {8, 5}};
  const int minus[][2] = {{5, 1}, {6, 2}, {7, 4}, {8, 3}};
  for (auto& p : plus) m(p[0] - 1, p[1] - 1) = kS;
  for (auto& p : minus) m(p[0] - 1, p[1] - 1) = -kS;
  return m;
}

inline M pauli_x() { return from_ints(2, {0, 1, 1, 0}); }
inline M pauli_z() { return from_ints(2, {1, 0, 0, -1}); }
inline M hadamard() { return from_ints(2, {1, 1, 1, -1}, kS); }
inline M id2() { return M::Identity(2, 2); }
inline M proj0() { return from_ints(2, {1, 0, 0, 0}); }
inline M proj1() { return from_ints(2, {0, 0, 0, 1}); }

inline M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline M kron3(const M& a, const M& b, const M& c) { return kron(kron(a, b), c); }

// Controlled single-qubit gate on three wires via projectors.
inline M controlled3(int control, int target, const M& u) {
  std::vector<M> off(3, id2()), on(3, id2());
  off[control] = proj0();
  on[control] = proj1();
  on[target] = u;
  return kron3(off[0], off[1], off[2]) + kron3(on[0], on[1], on[2]);
}

inline M cnot2() { return from_ints(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}); }

// Haar-distributed unitary from the QR decomposition of a Ginibre matrix.
inline M random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  M z(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) z(r, c) = C(g(rng), g(rng));
  Eigen::HouseholderQR<M> qr(z);
  M q = qr.householderQ();
  M r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) q.col(i) *= std::polar(1.0, std::arg(r(i, i)));
  return q;
}

inline V random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  V v(n);
  for (int i = 0; i < n; ++i) v(i) = C(g(rng), g(rng));
  return v.normalized();
}

inline double fidelity(const M& u, const M& v) {
  return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
}

// Two-mode grating with coupling nu = kappa*d and phase mismatch xi*d/2.
inline double two_mode_efficiency(double nu, double half_xi_d) {
  const double s2 = nu * nu + half_xi_d * half_xi_d;
  if (s2 == 0.0) return 0.0;
  const double s = std::sin(std::sqrt(s2));
  return nu * nu / s2 * s * s;
}

// sinc(x) = sin(x)/x.
inline double sinc(double x) { return std::abs(x) < 1e-12 ? 1.0 : std::sin(x) / x; }

// Midpoint rule for (1/D^2) \int exp(i dk.r) over the centred D x D square.
inline C aperture_quadrature(double dkx, double dky, double d, int n = 2000) {
  C sx = 0.0, sy = 0.0;
  const double h = d / n;
  for (int i = 0; i < n; ++i) {
    const double x = -d / 2 + (i + 0.5) * h;
    sx += std::polar(1.0, dkx * x);
    sy += std::polar(1.0, dky * x);
  }
  return sx * sy * (h * h) / (d * d);
}

}  // namespace oracle
