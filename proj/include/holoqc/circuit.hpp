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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "holoqc/linalg.hpp"

namespace holoqc {

// Basis convention: wire 0 is the most significant qubit, so |q0 q1 q2>
// has index 4*q0 + 2*q1 + q2. Basis index i corresponds to signal mode S_{i+1}.

using StateVector = ComplexVector;

enum class GateKind { X, Z, H, CNOT, ControlledU };

std::string to_string(GateKind kind);

/// Controls come first in `wires`. For ControlledU the payload acts on the
/// trailing log2(payload.rows()) wires; every preceding wire is a control.
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> wires;
  std::optional<ComplexMatrix> payload;
};

Gate x_gate(int wire);
Gate z_gate(int wire);
Gate h_gate(int wire);
Gate cnot_gate(int control, int target);
Gate controlled_gate(std::vector<int> wires, ComplexMatrix payload);

struct Measurement {
  int wire = 0;
};

/// `gate` fires when the classical outcome of `source_wire` was 1.
struct ClassicallyControlledGate {
  Gate gate;
  int source_wire = 0;
};

using CircuitElement = std::variant<Gate, Measurement, ClassicallyControlledGate>;

struct QuantumCircuit {
  int width = 0;
  std::vector<CircuitElement> elements;

  QuantumCircuit& add(CircuitElement element) {
    elements.push_back(std::move(element));
    return *this;
  }
};

/// 2x2 for X, Z, H and 4x4 for CNOT. Throws std::invalid_argument for ControlledU.
ComplexMatrix gate_matrix(GateKind kind);

/// Matrix of the gate on its own wires, controls as the most significant bits.
ComplexMatrix local_matrix(const Gate& gate);

/// Acts with `local` on `wires` (first wire most significant) of a
/// width-qubit register. Throws WireOutOfRange or DimensionMismatch.
ComplexMatrix embed_matrix(const ComplexMatrix& local, std::span<const int> wires,
                           int width);

ComplexMatrix embed_gate(const Gate& gate, int width);

/// Replaces every classically controlled gate with its quantum-controlled
/// counterpart and moves all measurements to the end, preserving order.
QuantumCircuit defer_measurements(const QuantumCircuit& circuit);

/// Drops trailing measurements. Throws MalformedCircuit when a measurement or
/// classically controlled gate is followed by a quantum gate.
QuantumCircuit strip_terminal_measurements(const QuantumCircuit& circuit);

/// Later gates multiply on the left. Throws MalformedCircuit on measurements.
ComplexMatrix circuit_unitary(const QuantumCircuit& circuit);

/// CNOT(0->1), H(0), measure 0 and 1, then X on 2 if wire 1 read 1 and Z on 2
/// if wire 0 read 1.
QuantumCircuit qt_circuit();

enum class CzVariant {
  /// Z on wire 2 controlled by wire 0. Teleports every state.
  Controlled,
  /// Unconditional Z on wire 0, diag(1,1,1,1,-1,-1,-1,-1). Yields the
  /// tabulated matrix returned by printed_qt_unitary().
  PrintedZOnWire0,
};

/// Measurement-free four-gate teleportation circuit with the chosen last gate.
QuantumCircuit qt_unitary_circuit(CzVariant variant);

/// The tabulated 8x8 teleportation matrix, entries in {0, +-1/sqrt(2)}.
ComplexMatrix printed_qt_unitary();

StateVector apply_unitary(const ComplexMatrix& u, const StateVector& s);

StateVector kron(const StateVector& a, const StateVector& b);
StateVector bell_phi_plus();

struct TeleportReport {
  double wire3_fidelity = 0.0;
  bool wires12_product = false;
  /// ||out - phi_12 (x) psi||, with phi_12 the best-fitting wires-0/1 state.
  double product_residual = 0.0;
};

/// Applies `u` to psi (x) |beta_00> and inspects the last wire.
TeleportReport teleport_check(const StateVector& psi, const ComplexMatrix& u);

/// Outcome key: one entry per wire, -1 for wires never measured.
using OutcomeDistribution = std::map<std::vector<int>, double>;

/// Exact joint distribution of all measurement outcomes, branching on every
/// projective measurement and resolving classical control per branch.
OutcomeDistribution measurement_distribution(const QuantumCircuit& circuit,
                                             const StateVector& input);

}  // namespace holoqc
