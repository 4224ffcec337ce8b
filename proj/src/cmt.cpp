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

#include "holoqc/cmt.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "holoqc/errors.hpp"

namespace holoqc {

namespace {

constexpr double kUniformTolerance = 1e-9;
constexpr long long kMaxSteps = 50'000'000;
// Samples per detuning or coupling cycle. Twenty keeps the tilt-free case
// converged to 1e-9; fast crosstalk phases need the tighter value.
constexpr double kStepsPerCycle = 64.0;

double obliquity(const PlaneWaveMode& a, const PlaneWaveMode& b) {
  return std::sqrt(std::cos(a.cone_half_angle) * std::cos(b.cone_half_angle));
}

double fringe_strength(double delta_n, double wavelength, const PlaneWaveMode& a,
                       const PlaneWaveMode& b) {
  return kPi * delta_n / (wavelength * obliquity(a, b));
}

// Detuning of each term once every mode's transverse wave vector is shifted by
// `shift`; the z components follow from |k| staying fixed.
std::vector<double> tilted_detunings(const CouplingSystem& system, const DetunedOptions& opt) {
  const auto& terms = system.terms();
  std::vector<double> xi(terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t) xi[t] = terms[t].xi;
  if (opt.tilt == 0.0) return xi;

  if (opt.tilt_mode < 0 || opt.tilt_mode >= system.size())
    throw UnknownMode("tilt mode outside the mode universe");
  const PlaneWaveMode& in = system.universe()[opt.tilt_mode];
  const double k = in.wavenumber;
  const double dk = k * (std::sin(in.cone_half_angle + opt.tilt) - std::sin(in.cone_half_angle));
  const Eigen::Vector2d shift = dk * Eigen::Vector2d(std::cos(in.azimuth), std::sin(in.azimuth));

  std::vector<double> dz(system.size());
  for (int n = 0; n < system.size(); ++n) {
    const Vec3 kv = wave_vector(system.universe()[n]);
    const Eigen::Vector2d kt = kv.head<2>();
    const Eigen::Vector2d kt_new = kt + shift;
    const double kn = system.universe()[n].wavenumber;
    const double kz2 = kn * kn - kt_new.squaredNorm();
    if (kz2 <= 0.0) throw StepUnderflow("tilt pushes a mode past grazing incidence");
    const double kz_new = std::sqrt(kz2);
    dz[n] = (kt.squaredNorm() - kt_new.squaredNorm()) / (kz_new + kv.z());
  }
  for (std::size_t t = 0; t < terms.size(); ++t) xi[t] += dz[terms[t].from] - dz[terms[t].to];
  return xi;
}

}  // namespace

CouplingSystem::CouplingSystem(std::vector<PlaneWaveMode> universe, std::vector<CouplingTerm> terms)
    : universe_(std::move(universe)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.from < 0 || t.to < 0 || t.from >= size() || t.to >= size() || t.from == t.to)
      throw UnknownMode("coupling term references a mode outside the universe");
}

ComplexMatrix CouplingSystem::kappa_matrix(bool include_crosstalk) const {
  ComplexMatrix k = ComplexMatrix::Zero(size(), size());
  for (const auto& t : terms_) {
    if (!t.recorded && !include_crosstalk) continue;
    k(t.to, t.from) += t.kappa;
    k(t.from, t.to) += std::conj(t.kappa);
  }
  return k;
}

Eigen::MatrixXd CouplingSystem::detuning_matrix() const {
  Eigen::MatrixXd xi = Eigen::MatrixXd::Zero(size(), size());
  Eigen::MatrixXd best = Eigen::MatrixXd::Zero(size(), size());
  for (const auto& t : terms_) {
    const double mag = std::abs(t.kappa);
    if (mag <= best(t.to, t.from)) continue;
    best(t.to, t.from) = best(t.from, t.to) = mag;
    xi(t.to, t.from) = t.xi;
    xi(t.from, t.to) = -t.xi;
  }
  return xi;
}

TransferResult make_transfer_result(ComplexMatrix transfer, double thickness) {
  TransferResult r;
  r.per_mode_efficiency.resize(transfer.rows());
  for (Eigen::Index j = 0; j < transfer.rows(); ++j)
    r.per_mode_efficiency[j] = std::clamp(1.0 - std::norm(transfer(j, j)), 0.0, 1.0);
  r.transfer = std::move(transfer);
  r.thickness_used = thickness;
  return r;
}

CouplingSystem build_coupling(const Hologram& hologram, const ModeSet& modes,
                              const MaterialSpec& material, const CouplingOptions& options) {
  validate(hologram, modes);
  const double wavelength = modes.geometry().wavelength;
  const double cutoff = options.crosstalk_transverse_cutoff > 0.0
                            ? options.crosstalk_transverse_cutoff
                            : kTwoPi / modes.geometry().aperture;

  std::vector<PlaneWaveMode> universe;
  universe.reserve(modes.universe_size());
  for (int n = 0; n < modes.universe_size(); ++n) universe.push_back(modes.at(modes.universe_ref(n)));
  std::vector<Vec3> k(universe.size());
  std::transform(universe.begin(), universe.end(), k.begin(), wave_vector);

  std::vector<CouplingTerm> terms;
  for (const auto& e : hologram.exposures) {
    if (e.delta_n > material.max_index_modulation)
      throw MalformedPlan("exposure modulation exceeds the material ceiling");
    const int p = modes.universe_index(e.partner);
    const Complex rotation = std::polar(1.0, e.phase);
    for (const auto& c : e.coefficients) {
      const int m = modes.universe_index(c.mode);
      const Vec3 grating = k[p] - k[m];
      const Complex weight = std::conj(c.value) * rotation;
      const double kappa0 = fringe_strength(e.delta_n, wavelength, universe[p], universe[m]);
      terms.push_back({m, p, kappa0 * weight, 0.0, grating, kappa0, true});

      for (int a = 0; a < modes.universe_size(); ++a) {
        for (int b = 0; b < modes.universe_size(); ++b) {
          if (a == b || (a == m && b == p)) continue;
          const Vec3 mismatch = k[a] + grating - k[b];
          if (mismatch.head<2>().norm() >= cutoff) continue;
          const double kab = fringe_strength(e.delta_n, wavelength, universe[a], universe[b]);
          terms.push_back({a, b, kab * weight, mismatch.z(), grating, kab, false});
        }
      }
    }
  }
  return CouplingSystem(std::move(universe), std::move(terms));
}

TransferResult ideal_transfer(const CouplingSystem& system, double thickness) {
  const ComplexMatrix k = system.kappa_matrix(false);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(k);
  const Eigen::VectorXd& w = eig.eigenvalues();
  ComplexVector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) phases(i) = std::polar(1.0, thickness * w(i));
  const ComplexMatrix& v = eig.eigenvectors();
  return make_transfer_result(v * phases.asDiagonal() * v.adjoint(), thickness);
}

double optimal_thickness(const CouplingSystem& system) {
  double kappa0 = 0.0;
  for (const auto& t : system.terms()) {
    if (!t.recorded) continue;
    if (kappa0 == 0.0) {
      kappa0 = t.strength;
    } else if (std::abs(t.strength - kappa0) > kUniformTolerance * kappa0) {
      throw NonuniformCoupling("exposure strengths differ; no single optimal thickness");
    }
  }
  if (!(kappa0 > 0.0)) throw NonuniformCoupling("system has no recorded coupling");
  return kPi / (2.0 * kappa0);
}

TransferResult detuned_transfer(const CouplingSystem& system, double thickness,
                                const DetunedOptions& options) {
  if (!(thickness > 0.0)) throw StepUnderflow("thickness must be positive");
  if (options.refinement < 1) throw StepUnderflow("refinement must be >= 1");

  struct Active {
    int from, to;
    Complex kappa;
    double xi;
  };
  const auto xi = tilted_detunings(system, options);
  std::vector<Active> active;
  double max_xi = 0.0, max_kappa = 0.0;
  for (std::size_t t = 0; t < system.terms().size(); ++t) {
    const auto& term = system.terms()[t];
    if (!term.recorded && !options.include_crosstalk) continue;
    active.push_back({term.from, term.to, term.kappa, xi[t]});
    max_xi = std::max(max_xi, std::abs(xi[t]));
    max_kappa = std::max(max_kappa, std::abs(term.kappa));
  }

  double h = thickness / 1000.0;
  if (max_xi > 0.0) h = std::min(h, kTwoPi / (kStepsPerCycle * max_xi));
  if (max_kappa > 0.0) h = std::min(h, kTwoPi / (kStepsPerCycle * max_kappa));
  const double steps_real = std::ceil(thickness / h) * options.refinement;
  if (!std::isfinite(steps_real) || steps_real > static_cast<double>(kMaxSteps))
    throw StepUnderflow("integrator step bound collapsed (" + std::to_string(steps_real) +
                        " steps)");
  const long long steps = static_cast<long long>(steps_real);
  h = thickness / static_cast<double>(steps);

  const int n = system.size();
  const Complex I{0.0, 1.0};
  auto rhs = [&](double z, const ComplexMatrix& t) {
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (const auto& a : active) {
      const Complex c = I * a.kappa * std::polar(1.0, a.xi * z);
      out.row(a.to) += c * t.row(a.from);
      out.row(a.from) += I * std::conj(a.kappa * std::polar(1.0, a.xi * z)) * t.row(a.to);
    }
    return out;
  };

  ComplexMatrix t = ComplexMatrix::Identity(n, n);
  for (long long s = 0; s < steps; ++s) {
    const double z = s * h;
    const ComplexMatrix k1 = rhs(z, t);
    const ComplexMatrix k2 = rhs(z + 0.5 * h, t + (0.5 * h) * k1);
    const ComplexMatrix k3 = rhs(z + 0.5 * h, t + (0.5 * h) * k2);
    const ComplexMatrix k4 = rhs(z + h, t + h * k3);
    t += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return make_transfer_result(std::move(t), thickness);
}

void tune_thickness(GratingStack& stack, const MaterialSpec& material) {
  for (auto& h : stack.holograms) {
    if (h.exposures.empty()) continue;
    h.thickness = optimal_thickness(build_coupling(h, stack.modes, material));
  }
}

TransferResult simulate_stack(const GratingStack& stack, const MaterialSpec& material,
                              SimulationMode mode, const DetunedOptions& options) {
  const int n = stack.modes.universe_size();
  ComplexMatrix total = ComplexMatrix::Identity(n, n);
  double thickness = 0.0;
  for (const auto& h : stack.holograms) {
    if (h.exposures.empty()) continue;
    if (!h.thickness) throw MalformedPlan("hologram '" + h.label + "' has no thickness");
    const CouplingSystem system = build_coupling(h, stack.modes, material);
    const TransferResult r = mode == SimulationMode::Ideal
                                 ? ideal_transfer(system, *h.thickness)
                                 : detuned_transfer(system, *h.thickness, options);
    total = r.transfer * total;
    thickness += *h.thickness;
  }
  return make_transfer_result(std::move(total), thickness);
}

namespace {

ModeRef default_input(const std::vector<Hologram>& holograms) {
  for (const auto& h : holograms) {
    if (h.exposures.empty()) continue;
    const auto& coeffs = h.exposures.front().coefficients;
    const auto it = std::max_element(coeffs.begin(), coeffs.end(), [](const auto& a, const auto& b) {
      return std::abs(a.value) < std::abs(b.value);
    });
    return it->mode;
  }
  throw MalformedPlan("sweep needs at least one exposure");
}

template <typename Transfer>
std::vector<SweepRow> sweep(const ModeSet& modes, double tilt_range, int samples,
                            const SweepOptions& options, ModeRef input, Transfer&& transfer) {
  if (samples < 2) throw InputError("sweep needs at least two samples");
  if (!(tilt_range > 0.0)) throw InputError("tilt range must be positive");
  const int in = modes.universe_index(input);
  int out = 0;
  if (options.output) {
    out = modes.universe_index(*options.output);
  } else {
    transfer(0.0, in).transfer.col(in).cwiseAbs2().maxCoeff(&out);
  }

  std::vector<SweepRow> rows(samples);
  for (int s = 0; s < samples; ++s) {
    const double tilt = tilt_range * s / (samples - 1);
    rows[s] = {tilt, std::norm(transfer(tilt, in).transfer(out, in))};
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> selectivity_sweep(const Hologram& hologram, const ModeSet& modes,
                                        const MaterialSpec& material, double thickness,
                                        double tilt_range, int samples,
                                        const SweepOptions& options) {
  const CouplingSystem system = build_coupling(hologram, modes, material);
  const ModeRef input = options.input.value_or(default_input({hologram}));
  return sweep(modes, tilt_range, samples, options, input, [&](double tilt, int in) {
    DetunedOptions o;
    o.include_crosstalk = options.include_crosstalk;
    o.tilt = tilt;
    o.tilt_mode = in;
    return detuned_transfer(system, thickness, o);
  });
}

std::vector<SweepRow> selectivity_sweep(const GratingStack& stack, const MaterialSpec& material,
                                        double tilt_range, int samples,
                                        const SweepOptions& options) {
  const ModeRef input = options.input.value_or(default_input(stack.holograms));
  return sweep(stack.modes, tilt_range, samples, options, input, [&](double tilt, int in) {
    DetunedOptions o;
    o.include_crosstalk = options.include_crosstalk;
    o.tilt = tilt;
    o.tilt_mode = in;
    return simulate_stack(stack, material, SimulationMode::Detuned, o);
  });
}

}  // namespace holoqc
