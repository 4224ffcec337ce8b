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

#include "holoqc/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "holoqc/errors.hpp"

namespace holoqc {

FidelityReport process_fidelity(const ComplexMatrix& u, const ComplexMatrix& v,
                                double threshold) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols() || u.rows() == 0)
    throw DimensionMismatch("fidelity needs two square matrices of equal size");
  const Complex overlap = (u.adjoint() * v).trace();
  FidelityReport r;
  r.fidelity = std::min(1.0, std::abs(overlap) / static_cast<double>(u.rows()));
  r.global_phase = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
  r.max_elementwise_error = (v - std::polar(1.0, r.global_phase) * u).cwiseAbs().maxCoeff();
  r.pass = r.fidelity >= threshold;
  return r;
}

double diffraction_efficiency(const TransferResult& result, const ModeSet& modes,
                              const ModeRef& input, const ModeRef& output) {
  if (result.transfer.rows() != modes.universe_size())
    throw DimensionMismatch("transfer matrix does not cover the mode set");
  return std::norm(result.transfer(modes.universe_index(output), modes.universe_index(input)));
}

ComplexMatrix realized_unitary(const TransferResult& result, const ModeSet& modes,
                               Role output_space) {
  const int n = modes.dimension();
  if (result.transfer.rows() != 2 * n || result.transfer.cols() != 2 * n)
    throw DimensionMismatch("transfer matrix does not cover all 2N modes");
  const int row0 = output_space == Role::Signal ? 0 : n;
  return result.transfer.block(row0, 0, n, n);
}

}  // namespace holoqc
