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

#include <compare>
#include <string>
#include <vector>

#include "holoqc/linalg.hpp"

namespace holoqc {

enum class Role { Signal, Reference };

std::string to_string(Role role);
Role role_from_string(const std::string& s);

/// Names one plane-wave mode of a ModeSet: S_i or R_i, with i starting at 1.
struct ModeRef {
  Role role = Role::Signal;
  int index = 1;

  auto operator<=>(const ModeRef&) const = default;
};

inline ModeRef signal(int index) { return {Role::Signal, index}; }
inline ModeRef reference(int index) { return {Role::Reference, index}; }

std::string to_string(const ModeRef& ref);

/// A plane wave k (sin(theta) cos(phi), sin(theta) sin(phi), cos(theta)) with
/// the hologram face in the x-y plane.
struct PlaneWaveMode {
  Role role = Role::Signal;
  int index = 1;
  double azimuth = 0.0;          // radians, [0, 2*pi)
  double cone_half_angle = 0.0;  // radians, (0, pi/2)
  double wavenumber = 0.0;       // rad/m

  ModeRef ref() const { return {role, index}; }
};

Vec3 wave_vector(const PlaneWaveMode& mode);

struct ConeGeometry {
  int dimension = 0;
  double signal_half_angle = 0.0;
  double reference_half_angle = 0.0;
  double signal_azimuth_offset = 0.0;
  double reference_azimuth_offset = kPi;
  double wavelength = 0.0;  // m
  double aperture = 0.0;    // square aperture breadth D, m

  double wavenumber() const { return kTwoPi / wavelength; }
  double azimuth_spacing() const { return kTwoPi / dimension; }
};

/// Throws InvalidGeometry when the geometry cannot host a basis.
void validate(const ConeGeometry& geometry);

/// N signal modes on the inner cone and N reference modes on the outer one.
/// The combined "mode universe" orders S_1..S_N first, then R_1..R_N.
class ModeSet {
 public:
  ModeSet(ConeGeometry geometry, std::vector<PlaneWaveMode> signals,
          std::vector<PlaneWaveMode> references);

  const ConeGeometry& geometry() const { return geometry_; }
  int dimension() const { return geometry_.dimension; }
  const std::vector<PlaneWaveMode>& signals() const { return signals_; }
  const std::vector<PlaneWaveMode>& references() const { return references_; }

  bool contains(const ModeRef& ref) const;
  /// Throws UnknownMode.
  const PlaneWaveMode& at(const ModeRef& ref) const;

  int universe_size() const { return 2 * dimension(); }
  /// Position of `ref` in the 2N mode universe. Throws UnknownMode.
  int universe_index(const ModeRef& ref) const;
  ModeRef universe_ref(int position) const;

 private:
  ConeGeometry geometry_;
  std::vector<PlaneWaveMode> signals_;
  std::vector<PlaneWaveMode> references_;
};

ModeSet make_cone_basis(const ConeGeometry& geometry);

/// Normalized overlap (1/D^2) * integral of conj(a) b over the square aperture
/// [-D/2, D/2]^2 in the hologram face. Equals
/// sinc(dkx D / 2) * sinc(dky D / 2) with dk = k_b - k_a.
Complex aperture_overlap(const PlaneWaveMode& a, const PlaneWaveMode& b,
                         double aperture);

struct SelectivityReport {
  bool ok = false;
  double margin = 0.0;  // 2*pi/N - selectivity
};

SelectivityReport selectivity_guard(const ModeSet& modes,
                                    double angular_selectivity);

}  // namespace holoqc
