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

#pragma once

#include <optional>
#include <vector>

#include "holoqc/compiler.hpp"
#include "holoqc/linalg.hpp"
#include "holoqc/modes.hpp"

namespace holoqc {

/// One grating-mediated coupling a_to <- a_from. The Hermitian partner
/// a_from <- a_to (conj(kappa), -xi) is implied and never stored.
struct CouplingTerm {
  int from = 0;
  int to = 0;
  Complex kappa;       // rad/m, includes |c| and the recording phase
  double xi = 0.0;     // z phase mismatch (k_from + G - k_to)_z, rad/m
  Vec3 grating = Vec3::Zero();  // grating vector G of the fringe, rad/m
  double strength = 0.0;  // kappa_0 of the fringe before the coefficient weight
  bool recorded = true;   // false for crosstalk through someone else's fringe
};

/// Coupled amplitudes obey da/dz = i H(z) a with
/// H(z) = sum_t kappa_t e^{i xi_t z} |to><from| + h.c.
class CouplingSystem {
 public:
  CouplingSystem(std::vector<PlaneWaveMode> universe, std::vector<CouplingTerm> terms);

  const std::vector<PlaneWaveMode>& universe() const { return universe_; }
  const std::vector<CouplingTerm>& terms() const { return terms_; }
  int size() const { return static_cast<int>(universe_.size()); }

  /// Hermitian coupling matrix of the phase-matched (recorded) terms, or of
  /// every term when `include_crosstalk` is set.
  ComplexMatrix kappa_matrix(bool include_crosstalk = false) const;
  /// xi_mn of the strongest term on each pair; antisymmetric.
  Eigen::MatrixXd detuning_matrix() const;

 private:
  std::vector<PlaneWaveMode> universe_;
  std::vector<CouplingTerm> terms_;
};

struct TransferResult {
  ComplexMatrix transfer;  // output amplitudes = transfer * input amplitudes
  /// 1 - |t_jj|^2: the fraction of input mode j diffracted out of it.
  std::vector<double> per_mode_efficiency;
  double thickness_used = 0.0;
};

TransferResult make_transfer_result(ComplexMatrix transfer, double thickness);

struct CouplingOptions {
  /// Cross couplings survive when |transverse mismatch| < this; 0 selects
  /// one aperture resolution element, 2*pi/D.
  double crosstalk_transverse_cutoff = 0.0;
};

/// Throws UnknownMode for modes outside `modes`, MalformedPlan when an exposure
/// exceeds the material's modulation ceiling.
CouplingSystem build_coupling(const Hologram& hologram, const ModeSet& modes,
                              const MaterialSpec& material,
                              const CouplingOptions& options = {});

/// exp(i d K) over the phase-matched terms, via Hermitian eigendecomposition.
TransferResult ideal_transfer(const CouplingSystem& system, double thickness);

/// pi / (2 kappa_0). Throws NonuniformCoupling.
double optimal_thickness(const CouplingSystem& system);

struct DetunedOptions {
  bool include_crosstalk = false;
  /// Polar tilt of `tilt_mode` in its plane of incidence, rad. The transverse
  /// shift it causes is applied to every mode of the universe.
  double tilt = 0.0;
  int tilt_mode = 0;
  /// Multiplies the number of integrator steps (convergence checks).
  int refinement = 1;
};

/// Fixed-step RK4 on dT/dz = i H(z) T over [0, d]. Step bound
/// min(d/1000, 2*pi/(20 max|xi|), 2*pi/(20 max|kappa|)). Throws StepUnderflow.
TransferResult detuned_transfer(const CouplingSystem& system, double thickness,
                                const DetunedOptions& options = {});

enum class SimulationMode { Ideal, Detuned };

/// Sets every hologram's thickness to its optimal value.
void tune_thickness(GratingStack& stack, const MaterialSpec& material);

/// Ordered product of per-hologram transfers. Free propagation between
/// holograms adds a per-cone constant phase and is normalized away.
TransferResult simulate_stack(const GratingStack& stack, const MaterialSpec& material,
                              SimulationMode mode, const DetunedOptions& options = {});

struct SweepRow {
  double tilt = 0.0;
  double efficiency = 0.0;
};

struct SweepOptions {
  /// Defaults: the strongest coefficient of the first exposure as input, the
  /// brightest output at zero tilt as output.
  std::optional<ModeRef> input;
  std::optional<ModeRef> output;
  bool include_crosstalk = false;
};

/// `samples` tilts equally spaced over [0, tilt_range], ascending.
std::vector<SweepRow> selectivity_sweep(const Hologram& hologram, const ModeSet& modes,
                                        const MaterialSpec& material, double thickness,
                                        double tilt_range, int samples,
                                        const SweepOptions& options = {});

/// Stack variant; each hologram keeps its assigned thickness.
std::vector<SweepRow> selectivity_sweep(const GratingStack& stack, const MaterialSpec& material,
                                        double tilt_range, int samples,
                                        const SweepOptions& options = {});

}  // namespace holoqc
