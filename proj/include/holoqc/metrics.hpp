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

#include "holoqc/cmt.hpp"
#include "holoqc/linalg.hpp"
#include "holoqc/modes.hpp"

namespace holoqc {

inline constexpr double kDefaultFidelityThreshold = 1.0 - 1e-6;

struct FidelityReport {
  double fidelity = 0.0;      // |tr(U^H V)| / N
  double global_phase = 0.0;  // arg tr(U^H V)
  double max_elementwise_error = 0.0;  // max |V - e^{i phase} U|
  bool pass = false;
};

/// Global-phase-insensitive comparison of a target `u` with a realized `v`.
FidelityReport process_fidelity(const ComplexMatrix& u, const ComplexMatrix& v,
                                double threshold = kDefaultFidelityThreshold);

/// |t(output, input)|^2. Throws UnknownMode.
double diffraction_efficiency(const TransferResult& result, const ModeSet& modes,
                              const ModeRef& input, const ModeRef& output);

/// The N x N block taking signal inputs to `output_space`.
ComplexMatrix realized_unitary(const TransferResult& result, const ModeSet& modes,
                               Role output_space);

}  // namespace holoqc
