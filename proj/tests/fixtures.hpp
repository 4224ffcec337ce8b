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

#include "holoqc/compiler.hpp"
#include "holoqc/modes.hpp"

namespace fixture {

inline holoqc::ConeGeometry geometry(int n) {
  holoqc::ConeGeometry g;
  g.dimension = n;
  g.signal_half_angle = 10.0 * holoqc::kPi / 180.0;
  g.reference_half_angle = 25.0 * holoqc::kPi / 180.0;
  g.wavelength = 1.064e-6;
  g.aperture = 5e-3;
  return g;
}

inline holoqc::MaterialSpec material() {
  holoqc::MaterialSpec m;
  m.name = "test glass";
  m.max_total_thickness = 25e-3;
  m.max_index_modulation = 1e-3;
  m.mm_per_recording = 1e-3;
  return m;
}

}  // namespace fixture
