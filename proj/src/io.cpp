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

#include "holoqc/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "holoqc/errors.hpp"

namespace holoqc::io {

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void write(const Json& j, std::ostringstream& out, int indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out << ",\n";
      first = false;
      out << inner << Json(key).dump() << ": ";
      write(value, out, indent + 2);
    }
    out << "\n" << pad << "}";
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
    if (j.empty() || flat) {
      out << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ", ";
        write(j[i], out, indent);
      }
      out << "]";
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out << ",\n";
      out << inner;
      write(j[i], out, indent + 2);
    }
    out << "\n" << pad << "]";
  } else if (j.is_number_float()) {
    out << format_double(j.get<double>());
  } else {
    out << j.dump();
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

Json mode_to_json(const ModeRef& m) {
  return Json{{"role", to_string(m.role)}, {"index", m.index}};
}

ModeRef mode_from_json(const Json& j) {
  return {role_from_string(field(j, "role").get<std::string>()), field(j, "index").get<int>()};
}

Json gate_to_json(const Gate& g) {
  Json j{{"name", to_string(g.kind)}, {"wires", g.wires}};
  if (g.payload) j["matrix"] = matrix_to_json(*g.payload);
  return j;
}

Gate gate_from_json(const Json& j) {
  const auto name = field(j, "name").get<std::string>();
  Gate g;
  g.wires = field(j, "wires").get<std::vector<int>>();
  if (name == "x") g.kind = GateKind::X;
  else if (name == "z") g.kind = GateKind::Z;
  else if (name == "h") g.kind = GateKind::H;
  else if (name == "cnot") g.kind = GateKind::CNOT;
  else if (name == "cu") {
    g.kind = GateKind::ControlledU;
    g.payload = matrix_from_json(field(j, "matrix"));
  } else {
    throw ParseError("unknown gate '" + name + "'");
  }
  return g;
}

}  // namespace

std::string dump(const Json& json) {
  std::ostringstream out;
  write(json, out, 0);
  out << "\n";
  return out.str();
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

Json to_json(const ConeGeometry& g) {
  return Json{{"n", g.dimension},
              {"theta_s_rad", g.signal_half_angle},
              {"theta_r_rad", g.reference_half_angle},
              {"lambda_m", g.wavelength},
              {"aperture_m", g.aperture},
              {"offsets",
               {{"signal_rad", g.signal_azimuth_offset},
                {"reference_rad", g.reference_azimuth_offset}}}};
}

ConeGeometry geometry_from_json(const Json& j) {
  return guarded("geometry", [&] {
    ConeGeometry g;
    g.dimension = field(j, "n").get<int>();
    g.signal_half_angle = field(j, "theta_s_rad").get<double>();
    g.reference_half_angle = field(j, "theta_r_rad").get<double>();
    g.wavelength = field(j, "lambda_m").get<double>();
    g.aperture = field(j, "aperture_m").get<double>();
    if (j.contains("offsets")) {
      const Json& o = j.at("offsets");
      g.signal_azimuth_offset = o.value("signal_rad", 0.0);
      g.reference_azimuth_offset = o.value("reference_rad", kPi);
    }
    validate(g);
    return g;
  });
}

Json to_json(const MaterialSpec& m) {
  return Json{{"name", m.name},
              {"max_total_thickness_m", m.max_total_thickness},
              {"max_index_modulation", m.max_index_modulation},
              {"thickness_per_recording_m", m.mm_per_recording}};
}

MaterialSpec material_from_json(const Json& j) {
  return guarded("material", [&] {
    MaterialSpec m;
    m.name = j.value("name", std::string{});
    m.max_total_thickness = field(j, "max_total_thickness_m").get<double>();
    m.max_index_modulation = field(j, "max_index_modulation").get<double>();
    m.mm_per_recording = j.value("thickness_per_recording_m", 1e-3);
    try {
      validate(m);
    } catch (const MalformedPlan& e) {
      throw ParseError(e.what());
    }
    return m;
  });
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const Json& rows = j.is_object() ? field(j, "matrix") : j;
    if (!rows.is_array() || rows.empty()) throw ParseError("matrix must be a non-empty array");
    const auto n = static_cast<Eigen::Index>(rows.size());
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Json& row = rows[i];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
        throw ParseError("matrix must be square");
      for (Eigen::Index k = 0; k < n; ++k) {
        const Json& e = row[k];
        if (e.is_number()) {
          m(i, k) = e.get<double>();
        } else if (e.is_array() && e.size() == 2) {
          m(i, k) = {e[0].get<double>(), e[1].get<double>()};
        } else {
          throw ParseError("matrix entries must be [re, im] pairs");
        }
      }
    }
    return m;
  });
}

Json to_json(const QuantumCircuit& c) {
  Json elements = Json::array();
  for (const auto& element : c.elements) {
    if (const auto* g = std::get_if<Gate>(&element)) {
      Json j{{"kind", "gate"}};
      j.update(gate_to_json(*g));
      elements.push_back(std::move(j));
    } else if (const auto* m = std::get_if<Measurement>(&element)) {
      elements.push_back(Json{{"kind", "measure"}, {"wire", m->wire}});
    } else {
      const auto& cg = std::get<ClassicallyControlledGate>(element);
      elements.push_back(
          Json{{"kind", "cgate"}, {"source", cg.source_wire}, {"gate", gate_to_json(cg.gate)}});
    }
  }
  return Json{{"width", c.width}, {"elements", std::move(elements)}};
}

QuantumCircuit circuit_from_json(const Json& j) {
  return guarded("circuit", [&] {
    QuantumCircuit c;
    c.width = field(j, "width").get<int>();
    if (c.width < 1 || c.width > 4) throw ParseError("circuit width must be in [1, 4]");
    for (const Json& e : field(j, "elements")) {
      const auto kind = field(e, "kind").get<std::string>();
      if (kind == "gate") {
        c.add(gate_from_json(e));
      } else if (kind == "measure") {
        c.add(Measurement{field(e, "wire").get<int>()});
      } else if (kind == "cgate") {
        c.add(ClassicallyControlledGate{gate_from_json(field(e, "gate")),
                                        field(e, "source").get<int>()});
      } else {
        throw ParseError("unknown circuit element kind '" + kind + "'");
      }
    }
    return c;
  });
}

ComplexMatrix target_unitary_from_json(const Json& j) {
  if (j.is_object() && j.contains("elements"))
    return circuit_unitary(strip_terminal_measurements(defer_measurements(circuit_from_json(j))));
  return matrix_from_json(j);
}

Json to_json(const Plan& plan) {
  Json holograms = Json::array();
  for (const auto& h : plan.stack.holograms) {
    Json exposures = Json::array();
    for (const auto& e : h.exposures) {
      Json coeffs = Json::array();
      for (const auto& c : e.coefficients)
        coeffs.push_back(
            Json{{"mode", mode_to_json(c.mode)}, {"re", c.value.real()}, {"im", c.value.imag()}});
      exposures.push_back(Json{{"partner", mode_to_json(e.partner)},
                               {"coefficients", std::move(coeffs)},
                               {"delta_n", e.delta_n},
                               {"phase_rad", e.phase}});
    }
    holograms.push_back(Json{{"label", h.label},
                             {"thickness_m", h.thickness ? Json(*h.thickness) : Json(nullptr)},
                             {"exposures", std::move(exposures)}});
  }
  Json j{{"format", "holoqc-plan/1"}, {"geometry", to_json(plan.stack.modes.geometry())}};
  if (plan.material) j["material"] = to_json(*plan.material);
  j["holograms"] = std::move(holograms);
  return j;
}

Plan plan_from_json(const Json& j) {
  return guarded("plan", [&] {
    const ModeSet modes = make_cone_basis(geometry_from_json(field(j, "geometry")));
    Plan plan{GratingStack{{}, modes}, std::nullopt};
    if (j.contains("material")) plan.material = material_from_json(j.at("material"));
    for (const Json& hj : field(j, "holograms")) {
      Hologram h;
      h.label = hj.value("label", std::string{});
      if (hj.contains("thickness_m") && !hj.at("thickness_m").is_null())
        h.thickness = hj.at("thickness_m").get<double>();
      for (const Json& ej : field(hj, "exposures")) {
        Exposure e;
        e.partner = mode_from_json(field(ej, "partner"));
        e.delta_n = field(ej, "delta_n").get<double>();
        e.phase = ej.value("phase_rad", 0.0);
        for (const Json& cj : field(ej, "coefficients"))
          e.coefficients.push_back(
              {mode_from_json(field(cj, "mode")),
               Complex{field(cj, "re").get<double>(), cj.value("im", 0.0)}});
        h.exposures.push_back(std::move(e));
      }
      plan.stack.holograms.push_back(std::move(h));
    }
    validate(plan.stack);
    return plan;
  });
}

Json to_json(const TransferResult& r, const ModeSet& modes) {
  Json names = Json::array();
  for (int n = 0; n < modes.universe_size(); ++n) names.push_back(to_string(modes.universe_ref(n)));
  return Json{{"dimension", modes.dimension()},
              {"modes", std::move(names)},
              {"thickness_m", r.thickness_used},
              {"per_mode_efficiency", r.per_mode_efficiency},
              {"transfer", matrix_to_json(r.transfer)}};
}

Json to_json(const FidelityReport& r, double threshold) {
  return Json{{"fidelity", r.fidelity},
              {"global_phase_rad", r.global_phase},
              {"max_err", r.max_elementwise_error},
              {"threshold", threshold},
              {"pass", r.pass}};
}

Json to_json(const FeasibilityReport& r) {
  return Json{{"recordings", r.recordings},
              {"dimension", r.dimension},
              {"required_thickness_m", r.required_thickness},
              {"per_dimension_thickness_m", r.per_dimension_thickness},
              {"q_ratio", r.q_ratio},
              {"volume_regime", r.volume_regime},
              {"grating_period_m", r.grating_period},
              {"angular_selectivity_rad", r.angular_selectivity},
              {"selectivity_ok", r.selectivity_ok},
              {"selectivity_margin_rad", r.selectivity_margin},
              {"dimension_ok", r.dimension_ok},
              {"max_dimension", r.max_dimension}};
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "tilt_rad,efficiency\n";
  for (const auto& r : rows) out += format_double(r.tilt) + "," + format_double(r.efficiency) + "\n";
  return out;
}

}  // namespace holoqc::io
