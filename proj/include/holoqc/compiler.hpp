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
#include <string>
#include <vector>

#include "holoqc/linalg.hpp"
#include "holoqc/modes.hpp"

namespace holoqc {

struct Coefficient {
  ModeRef mode;
  Complex value;
};

/// One recording: the superposition sum_m c_m |m> interfered with the partner
/// plane wave. Replayed at its tuned thickness the exposure diffracts
/// sum_m c_m |m> into i * exp(i * phase) |partner>.
struct Exposure {
  std::vector<Coefficient> coefficients;
  ModeRef partner;
  double delta_n = 0.0;  // index modulation amplitude
  double phase = 0.0;    // recording phase offset, radians
};

struct Hologram {
  std::vector<Exposure> exposures;
  std::optional<double> thickness;  // m; assigned by thickness tuning
  std::string label;
};

/// Light traverses `holograms` front to back.
struct GratingStack {
  std::vector<Hologram> holograms;
  ModeSet modes;
};

struct MaterialSpec {
  double max_total_thickness = 0.0;   // m
  double max_index_modulation = 0.0;
  double mm_per_recording = 1e-3;     // m of material budgeted per exposure
  std::string name;
};

void validate(const MaterialSpec& material);
/// Throws MalformedPlan or UnknownMode.
void validate(const Exposure& exposure, const ModeSet& modes);
void validate(const Hologram& hologram, const ModeSet& modes);
void validate(const GratingStack& stack);

/// <a|b> over the coefficient lists, treating distinct ModeRefs as orthogonal.
Complex inner_product(const std::vector<Coefficient>& a, const std::vector<Coefficient>& b);

/// One multiplexed hologram whose exposure i pairs R_i with
/// sum_j conj(U_ij) |S_j>, realizing psi -> sum_i (U psi)_i |R_i>.
Hologram compile_multiplex(const ComplexMatrix& u, const ModeSet& modes, double delta_n);

/// Exposure i couples R_i back onto S_i.
Hologram compile_redirection(const ModeSet& modes, double delta_n);

/// Multiplexed hologram followed by the redirection hologram; maps the signal
/// cone onto itself.
GratingStack compile_multiplex_stack(const ComplexMatrix& u, const ModeSet& modes,
                                     double delta_n);

/// Four single-exposure gratings for CNOT on a four-mode basis:
/// S3->R4, S4->R3, R3->S3, R4->S4.
GratingStack compile_cnot_stack(const ModeSet& modes, double delta_n);

bool is_signed_permutation(const ComplexMatrix& u, double tol = 1e-10);

/// Single-exposure forward gratings S_j -> R_pi(j) for every row that is not
/// a plain identity row, then one redirection grating per reference mode used.
/// Throws NotSignedPermutation.
GratingStack compile_signed_permutation_stack(const ComplexMatrix& u, const ModeSet& modes,
                                              double delta_n);

struct FeasibilityOptions {
  double volume_q_threshold = 10.0;
};

struct FeasibilityReport {
  int recordings = 0;
  int dimension = 0;
  double required_thickness = 0.0;     // recordings * mm_per_recording
  double per_dimension_thickness = 0.0;  // mm_per_recording / N, the alternative budget
  double q_ratio = 0.0;                // d * lambda / Lambda^2, worst hologram
  bool volume_regime = false;
  double grating_period = 0.0;         // longest period Lambda among exposures, m
  double angular_selectivity = 0.0;    // Lambda / d estimate, rad
  bool selectivity_ok = false;
  double selectivity_margin = 0.0;
  bool dimension_ok = false;
  int max_dimension = 0;               // largest 2^q fitting one multiplexed hologram
};

FeasibilityReport feasibility_report(const GratingStack& stack, const MaterialSpec& material,
                                     const FeasibilityOptions& options = {});
FeasibilityReport feasibility_report(const Hologram& hologram, const ModeSet& modes,
                                     const MaterialSpec& material,
                                     const FeasibilityOptions& options = {});

}  // namespace holoqc
