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

#include "holoqc/modes.hpp"

#include <cmath>

#include "holoqc/errors.hpp"

namespace holoqc {

std::string to_string(Role role) {
  return role == Role::Signal ? "signal" : "reference";
}

Role role_from_string(const std::string& s) {
  if (s == "signal" || s == "S") return Role::Signal;
  if (s == "reference" || s == "R") return Role::Reference;
  throw ParseError("unknown mode role '" + s + "'");
}

std::string to_string(const ModeRef& ref) {
  return (ref.role == Role::Signal ? "S" : "R") + std::to_string(ref.index);
}

Vec3 wave_vector(const PlaneWaveMode& mode) {
  const double st = std::sin(mode.cone_half_angle);
  return mode.wavenumber * Vec3(st * std::cos(mode.azimuth),
                                st * std::sin(mode.azimuth),
                                std::cos(mode.cone_half_angle));
}

void validate(const ConeGeometry& g) {
  auto in_range = [](double theta) { return theta > 0.0 && theta < kPi / 2; };
  if (g.dimension < 2)
    throw InvalidGeometry("cone basis needs dimension >= 2, got " +
                          std::to_string(g.dimension));
  if (!in_range(g.signal_half_angle) || !in_range(g.reference_half_angle))
    throw InvalidGeometry("cone half angles must lie in (0, pi/2)");
  if (g.signal_half_angle == g.reference_half_angle)
    throw InvalidGeometry("signal and reference cones must be distinct");
  if (!(g.wavelength > 0.0) || !(g.aperture > 0.0))
    throw InvalidGeometry("wavelength and aperture must be positive");
  if (!std::isfinite(g.signal_azimuth_offset) ||
      !std::isfinite(g.reference_azimuth_offset))
    throw InvalidGeometry("azimuth offsets must be finite");
}

ModeSet::ModeSet(ConeGeometry geometry, std::vector<PlaneWaveMode> signals,
                 std::vector<PlaneWaveMode> references)
    : geometry_(geometry),
      signals_(std::move(signals)),
      references_(std::move(references)) {
  if (static_cast<int>(signals_.size()) != geometry_.dimension ||
      static_cast<int>(references_.size()) != geometry_.dimension)
    throw InvalidGeometry("mode set size does not match geometry dimension");
}

bool ModeSet::contains(const ModeRef& ref) const {
  return ref.index >= 1 && ref.index <= dimension();
}

const PlaneWaveMode& ModeSet::at(const ModeRef& ref) const {
  if (!contains(ref)) throw UnknownMode("mode " + to_string(ref) + " is not in the mode set");
  const auto& list = ref.role == Role::Signal ? signals_ : references_;
  return list[ref.index - 1];
}

int ModeSet::universe_index(const ModeRef& ref) const {
  if (!contains(ref)) throw UnknownMode("mode " + to_string(ref) + " is not in the mode set");
  return (ref.role == Role::Signal ? 0 : dimension()) + ref.index - 1;
}

ModeRef ModeSet::universe_ref(int position) const {
  if (position < 0 || position >= universe_size())
    throw UnknownMode("universe position out of range");
  if (position < dimension()) return signal(position + 1);
  return reference(position - dimension() + 1);
}

ModeSet make_cone_basis(const ConeGeometry& g) {
  validate(g);
  const double k = g.wavenumber();
  const double step = g.azimuth_spacing();
  std::vector<PlaneWaveMode> signals;
  std::vector<PlaneWaveMode> references;
  signals.reserve(g.dimension);
  references.reserve(g.dimension);
  for (int i = 0; i < g.dimension; ++i) {
    signals.push_back({Role::Signal, i + 1,
                       wrap_angle(g.signal_azimuth_offset + i * step),
                       g.signal_half_angle, k});
    references.push_back({Role::Reference, i + 1,
                          wrap_angle(g.reference_azimuth_offset + i * step),
                          g.reference_half_angle, k});
  }
  return ModeSet(g, std::move(signals), std::move(references));
}

namespace {

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

}  // namespace

Complex aperture_overlap(const PlaneWaveMode& a, const PlaneWaveMode& b,
                         double aperture) {
  const Vec3 dk = wave_vector(b) - wave_vector(a);
  // The centred aperture makes the integral real; the odd phase terms cancel.
  return {sinc(0.5 * dk.x() * aperture) * sinc(0.5 * dk.y() * aperture), 0.0};
}

SelectivityReport selectivity_guard(const ModeSet& modes,
                                    double angular_selectivity) {
  const double spacing = kTwoPi / modes.dimension();
  return {spacing > angular_selectivity, spacing - angular_selectivity};
}

}  // namespace holoqc
