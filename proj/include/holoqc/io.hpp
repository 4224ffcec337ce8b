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

#include <json.hpp>

#include "holoqc/circuit.hpp"
#include "holoqc/cmt.hpp"
#include "holoqc/compiler.hpp"
#include "holoqc/metrics.hpp"
#include "holoqc/modes.hpp"

// File formats. All numbers are written with 17 significant digits and keys
// in a fixed order, so equal inputs give byte-identical files. Matrices are
// row-major arrays of rows, each entry a [re, im] pair.
namespace holoqc::io {

using Json = nlohmann::ordered_json;

std::string dump(const Json& json);
/// Throws ParseError.
Json parse(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json to_json(const ConeGeometry& geometry);
ConeGeometry geometry_from_json(const Json& json);

Json to_json(const MaterialSpec& material);
MaterialSpec material_from_json(const Json& json);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& json);

Json to_json(const QuantumCircuit& circuit);
QuantumCircuit circuit_from_json(const Json& json);

/// A matrix file ({"matrix": ...}) or a circuit file ({"width", "elements"});
/// circuits are deferred, stripped of terminal measurements and multiplied out.
ComplexMatrix target_unitary_from_json(const Json& json);

struct Plan {
  GratingStack stack;
  std::optional<MaterialSpec> material;
};

Json to_json(const Plan& plan);
Plan plan_from_json(const Json& json);

Json to_json(const TransferResult& result, const ModeSet& modes);
Json to_json(const FidelityReport& report, double threshold);
Json to_json(const FeasibilityReport& report);

/// Header `tilt_rad,efficiency`, rows in the given (ascending) order.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace holoqc::io
