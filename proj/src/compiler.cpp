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

#include "holoqc/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "holoqc/errors.hpp"

namespace holoqc {

namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kOrthogonalityTolerance = 1e-10;
constexpr double kUnitaryTolerance = 1e-10;
// Matrix entries below this magnitude are not recorded.
constexpr double kDropTolerance = 1e-14;

Exposure single_exposure(ModeRef from, ModeRef to, double delta_n, double phase) {
  return Exposure{{{from, Complex{1.0, 0.0}}}, to, delta_n, phase};
}

Hologram single_grating(ModeRef from, ModeRef to, double delta_n, double phase) {
  return Hologram{{single_exposure(from, to, delta_n, phase)},
                  std::nullopt,
                  to_string(from) + "->" + to_string(to)};
}

void check_delta_n(double delta_n) {
  if (!(delta_n > 0.0) || !std::isfinite(delta_n))
    throw MalformedPlan("index modulation must be positive");
}

}  // namespace

void validate(const MaterialSpec& m) {
  if (!(m.max_total_thickness > 0.0) || !(m.max_index_modulation > 0.0) ||
      !(m.mm_per_recording > 0.0))
    throw MalformedPlan("material parameters must be positive");
}

Complex inner_product(const std::vector<Coefficient>& a, const std::vector<Coefficient>& b) {
  Complex sum{};
  for (const auto& ca : a)
    for (const auto& cb : b)
      if (ca.mode == cb.mode) sum += std::conj(ca.value) * cb.value;
  return sum;
}

void validate(const Exposure& e, const ModeSet& modes) {
  check_delta_n(e.delta_n);
  if (e.coefficients.empty()) throw MalformedPlan("exposure without signal coefficients");
  modes.at(e.partner);
  std::set<ModeRef> seen;
  double norm = 0.0;
  for (const auto& c : e.coefficients) {
    modes.at(c.mode);
    if (c.mode == e.partner)
      throw MalformedPlan("exposure partner " + to_string(e.partner) +
                          " appears among its own coefficients");
    if (!seen.insert(c.mode).second)
      throw MalformedPlan("mode " + to_string(c.mode) + " repeated in one exposure");
    norm += std::norm(c.value);
  }
  if (std::abs(norm - 1.0) > kNormTolerance)
    throw MalformedPlan("exposure superposition is not normalized");
}

void validate(const Hologram& h, const ModeSet& modes) {
  if (h.thickness && !(*h.thickness > 0.0))
    throw MalformedPlan("hologram thickness must be positive");
  std::set<ModeRef> partners;
  for (std::size_t i = 0; i < h.exposures.size(); ++i) {
    validate(h.exposures[i], modes);
    if (!partners.insert(h.exposures[i].partner).second)
      throw MalformedPlan("partner " + to_string(h.exposures[i].partner) +
                          " used twice in hologram '" + h.label + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(inner_product(h.exposures[i].coefficients, h.exposures[j].coefficients)) >
          kOrthogonalityTolerance)
        throw MalformedPlan("exposures of hologram '" + h.label + "' are not orthogonal");
  }
}

void validate(const GratingStack& stack) {
  for (const auto& h : stack.holograms) validate(h, stack.modes);
}

Hologram compile_multiplex(const ComplexMatrix& u, const ModeSet& modes, double delta_n) {
  check_delta_n(delta_n);
  const int n = modes.dimension();
  if (u.rows() != n || u.cols() != n)
    throw DimensionMismatch("unitary is " + std::to_string(u.rows()) + "x" +
                            std::to_string(u.cols()) + " but the mode set has dimension " +
                            std::to_string(n));
  if (unitarity_defect(u) > kUnitaryTolerance) throw NotUnitary("target matrix is not unitary");

  Hologram h;
  h.label = "multiplex";
  h.exposures.reserve(n);
  for (int i = 0; i < n; ++i) {
    Exposure e;
    e.partner = reference(i + 1);
    e.delta_n = delta_n;
    for (int j = 0; j < n; ++j)
      if (std::abs(u(i, j)) > kDropTolerance)
        e.coefficients.push_back({signal(j + 1), std::conj(u(i, j))});
    h.exposures.push_back(std::move(e));
  }
  return h;
}

Hologram compile_redirection(const ModeSet& modes, double delta_n) {
  check_delta_n(delta_n);
  Hologram h;
  h.label = "redirection";
  for (int i = 1; i <= modes.dimension(); ++i)
    h.exposures.push_back(single_exposure(reference(i), signal(i), delta_n, 0.0));
  return h;
}

GratingStack compile_multiplex_stack(const ComplexMatrix& u, const ModeSet& modes,
                                     double delta_n) {
  return GratingStack{{compile_multiplex(u, modes, delta_n), compile_redirection(modes, delta_n)},
                      modes};
}

GratingStack compile_cnot_stack(const ModeSet& modes, double delta_n) {
  if (modes.dimension() != 4)
    throw DimensionMismatch("the CNOT stack needs a four-mode basis");
  check_delta_n(delta_n);
  // Each tuned pass contributes a factor i, so the forward gratings carry a
  // half-fringe (pi) shift to keep S3, S4 in phase with the undiffracted S1, S2.
  return GratingStack{{single_grating(signal(3), reference(4), delta_n, kPi),
                       single_grating(signal(4), reference(3), delta_n, kPi),
                       single_grating(reference(3), signal(3), delta_n, 0.0),
                       single_grating(reference(4), signal(4), delta_n, 0.0)},
                      modes};
}

bool is_signed_permutation(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Eigen::Index n = u.rows();
  std::vector<int> col_hits(n, 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    int row_hits = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double a = std::abs(u(i, j));
      if (a <= tol) continue;
      if (std::abs(a - 1.0) > tol) return false;
      ++row_hits;
      ++col_hits[j];
    }
    if (row_hits != 1) return false;
  }
  return std::all_of(col_hits.begin(), col_hits.end(), [](int c) { return c == 1; });
}

GratingStack compile_signed_permutation_stack(const ComplexMatrix& u, const ModeSet& modes,
                                              double delta_n) {
  check_delta_n(delta_n);
  const int n = modes.dimension();
  if (u.rows() != n || u.cols() != n)
    throw DimensionMismatch("unitary size does not match the mode set");
  if (!is_signed_permutation(u))
    throw NotSignedPermutation("matrix is not a phased permutation; use compile_multiplex");

  GratingStack stack{{}, modes};
  std::set<int> used_references;
  for (int j = 0; j < n; ++j) {
    int target = 0;
    for (int i = 0; i < n; ++i)
      if (std::abs(u(i, j)) > 0.5) target = i;
    const Complex entry = u(target, j);
    if (target == j && std::abs(entry - Complex{1.0, 0.0}) <= 1e-10) continue;
    // Forward and redirection passes contribute i * i = -1; the extra pi
    // in the forward recording phase cancels it.
    stack.holograms.push_back(
        single_grating(signal(j + 1), reference(target + 1), delta_n,
                       wrap_angle(std::arg(entry) + kPi)));
    used_references.insert(target + 1);
  }
  for (int i : used_references)
    stack.holograms.push_back(single_grating(reference(i), signal(i), delta_n, 0.0));
  return stack;
}

namespace {

struct HologramBudget {
  int recordings = 0;
  double thickness = 0.0;
  double min_grating_k = std::numeric_limits<double>::infinity();
};

HologramBudget budget_of(const Hologram& h, const ModeSet& modes, const MaterialSpec& material) {
  HologramBudget b;
  b.recordings = static_cast<int>(h.exposures.size());
  b.thickness = h.thickness.value_or(b.recordings * material.mm_per_recording);
  for (const auto& e : h.exposures) {
    const Vec3 kp = wave_vector(modes.at(e.partner));
    for (const auto& c : e.coefficients)
      b.min_grating_k = std::min(b.min_grating_k, (kp - wave_vector(modes.at(c.mode))).norm());
  }
  return b;
}

FeasibilityReport assemble(const std::vector<Hologram>& holograms, const ModeSet& modes,
                           const MaterialSpec& material, const FeasibilityOptions& options) {
  validate(material);
  const double wavelength = modes.geometry().wavelength;
  FeasibilityReport r;
  r.dimension = modes.dimension();
  r.q_ratio = std::numeric_limits<double>::infinity();
  for (const auto& h : holograms) {
    if (h.exposures.empty()) continue;
    const HologramBudget b = budget_of(h, modes, material);
    r.recordings += b.recordings;
    const double period = kTwoPi / b.min_grating_k;
    r.grating_period = std::max(r.grating_period, period);
    r.q_ratio = std::min(r.q_ratio, b.thickness * wavelength / (period * period));
    r.angular_selectivity = std::max(r.angular_selectivity, period / b.thickness);
  }
  if (r.recordings == 0) r.q_ratio = 0.0;
  r.required_thickness = r.recordings * material.mm_per_recording;
  r.per_dimension_thickness = material.mm_per_recording / r.dimension;
  r.volume_regime = r.recordings > 0 && r.q_ratio >= options.volume_q_threshold;

  const auto guard = selectivity_guard(modes, r.angular_selectivity);
  r.selectivity_ok = r.recordings > 0 && guard.ok;
  r.selectivity_margin = guard.margin;
  r.dimension_ok = r.required_thickness <= material.max_total_thickness;
  for (int n = 2; n * material.mm_per_recording <= material.max_total_thickness * (1 + 1e-12);
       n *= 2)
    r.max_dimension = n;
  return r;
}

}  // namespace

FeasibilityReport feasibility_report(const GratingStack& stack, const MaterialSpec& material,
                                     const FeasibilityOptions& options) {
  validate(stack);
  return assemble(stack.holograms, stack.modes, material, options);
}

FeasibilityReport feasibility_report(const Hologram& hologram, const ModeSet& modes,
                                     const MaterialSpec& material,
                                     const FeasibilityOptions& options) {
  validate(hologram, modes);
  return assemble({hologram}, modes, material, options);
}

}  // namespace holoqc
