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

#include "holoqc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "holoqc/errors.hpp"

namespace holoqc {

namespace {

constexpr double kPayloadTolerance = 1e-12;

int bit_of(int index, int wire, int width) { return (index >> (width - 1 - wire)) & 1; }

int set_bit(int index, int wire, int width, int value) {
  const int mask = 1 << (width - 1 - wire);
  return value ? (index | mask) : (index & ~mask);
}

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(Eigen::Index n) {
  int k = 0;
  while ((Eigen::Index{1} << k) < n) ++k;
  return k;
}

std::vector<int> touched_wires(const Gate& g) { return g.wires; }

}  // namespace

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::CNOT: return "cnot";
    case GateKind::ControlledU: return "cu";
  }
  return "?";
}

Gate x_gate(int wire) { return {GateKind::X, {wire}, std::nullopt}; }
Gate z_gate(int wire) { return {GateKind::Z, {wire}, std::nullopt}; }
Gate h_gate(int wire) { return {GateKind::H, {wire}, std::nullopt}; }
Gate cnot_gate(int control, int target) { return {GateKind::CNOT, {control, target}, std::nullopt}; }

Gate controlled_gate(std::vector<int> wires, ComplexMatrix payload) {
  return {GateKind::ControlledU, std::move(wires), std::move(payload)};
}

ComplexMatrix gate_matrix(GateKind kind) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::X: {
      ComplexMatrix m(2, 2);
      m << 0, 1, 1, 0;
      return m;
    }
    case GateKind::Z: {
      ComplexMatrix m(2, 2);
      m << 1, 0, 0, -1;
      return m;
    }
    case GateKind::H: {
      ComplexMatrix m(2, 2);
      m << r, r, r, -r;
      return m;
    }
    case GateKind::CNOT: {
      ComplexMatrix m = ComplexMatrix::Zero(4, 4);
      m(0, 0) = m(1, 1) = 1;
      m(2, 3) = m(3, 2) = 1;
      return m;
    }
    case GateKind::ControlledU:
      break;
  }
  throw MalformedCircuit("ControlledU has no fixed matrix; use local_matrix");
}

ComplexMatrix local_matrix(const Gate& gate) {
  const auto arity = static_cast<Eigen::Index>(gate.wires.size());
  switch (gate.kind) {
    case GateKind::X:
    case GateKind::Z:
    case GateKind::H:
      if (arity != 1) throw MalformedCircuit(to_string(gate.kind) + " gate takes one wire");
      return gate_matrix(gate.kind);
    case GateKind::CNOT:
      if (arity != 2) throw MalformedCircuit("cnot gate takes two wires");
      return gate_matrix(gate.kind);
    case GateKind::ControlledU: {
      if (!gate.payload) throw MalformedCircuit("cu gate without payload");
      const ComplexMatrix& u = *gate.payload;
      if (u.rows() != u.cols() || !is_power_of_two(u.rows()))
        throw DimensionMismatch("cu payload must be square with power-of-two size");
      if (unitarity_defect(u) > kPayloadTolerance)
        throw NotUnitary("cu payload is not unitary");
      const int targets = log2_exact(u.rows());
      if (targets >= arity)
        throw MalformedCircuit("cu gate needs at least one control wire");
      const Eigen::Index dim = Eigen::Index{1} << arity;
      ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
      m.bottomRightCorner(u.rows(), u.cols()) = u;
      return m;
    }
  }
  throw MalformedCircuit("unknown gate kind");
}

ComplexMatrix embed_matrix(const ComplexMatrix& local, std::span<const int> wires,
                           int width) {
  if (width < 1 || width > 16) throw WireOutOfRange("register width must be in [1, 16]");
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] < 0 || wires[i] >= width)
      throw WireOutOfRange("wire " + std::to_string(wires[i]) + " outside register of width " +
                           std::to_string(width));
    for (std::size_t j = 0; j < i; ++j)
      if (wires[i] == wires[j]) throw MalformedCircuit("gate wires must be distinct");
  }
  const int m = static_cast<int>(wires.size());
  if (local.rows() != (Eigen::Index{1} << m) || local.cols() != local.rows())
    throw DimensionMismatch("local matrix size does not match wire count");

  const int dim = 1 << width;
  ComplexMatrix full = ComplexMatrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    int lc = 0;
    for (int k = 0; k < m; ++k) lc = (lc << 1) | bit_of(col, wires[k], width);
    for (int lr = 0; lr < (1 << m); ++lr) {
      const Complex v = local(lr, lc);
      if (v == Complex{}) continue;
      int row = col;
      for (int k = 0; k < m; ++k) row = set_bit(row, wires[k], width, (lr >> (m - 1 - k)) & 1);
      full(row, col) = v;
    }
  }
  return full;
}

ComplexMatrix embed_gate(const Gate& gate, int width) {
  return embed_matrix(local_matrix(gate), gate.wires, width);
}

QuantumCircuit defer_measurements(const QuantumCircuit& circuit) {
  std::vector<bool> measured(circuit.width, false);
  auto check_wires = [&](const std::vector<int>& wires, const char* what) {
    for (int w : wires) {
      if (w < 0 || w >= circuit.width) throw WireOutOfRange(std::string(what) + " wire out of range");
      if (measured[w])
        throw MalformedCircuit(std::string(what) + " acts on already measured wire " +
                               std::to_string(w));
    }
  };

  QuantumCircuit gates{circuit.width, {}};
  std::vector<CircuitElement> measurements;
  for (const auto& element : circuit.elements) {
    if (const auto* g = std::get_if<Gate>(&element)) {
      check_wires(touched_wires(*g), "gate");
      gates.add(*g);
    } else if (const auto* meas = std::get_if<Measurement>(&element)) {
      check_wires({meas->wire}, "measurement");
      measured[meas->wire] = true;
      measurements.push_back(*meas);
    } else {
      const auto& cg = std::get<ClassicallyControlledGate>(element);
      if (cg.source_wire < 0 || cg.source_wire >= circuit.width || !measured[cg.source_wire])
        throw MalformedCircuit("classical control references unmeasured wire " +
                               std::to_string(cg.source_wire));
      check_wires(touched_wires(cg.gate), "classically controlled gate");
      std::vector<int> wires{cg.source_wire};
      wires.insert(wires.end(), cg.gate.wires.begin(), cg.gate.wires.end());
      gates.add(controlled_gate(std::move(wires), local_matrix(cg.gate)));
    }
  }
  for (auto& m : measurements) gates.add(std::move(m));
  return gates;
}

QuantumCircuit strip_terminal_measurements(const QuantumCircuit& circuit) {
  QuantumCircuit out{circuit.width, {}};
  bool in_tail = false;
  for (const auto& element : circuit.elements) {
    if (std::holds_alternative<Gate>(element)) {
      if (in_tail) throw MalformedCircuit("quantum gate after a measurement");
      out.add(element);
    } else if (std::holds_alternative<Measurement>(element)) {
      in_tail = true;
    } else {
      throw MalformedCircuit("classically controlled gate; run defer_measurements first");
    }
  }
  return out;
}

ComplexMatrix circuit_unitary(const QuantumCircuit& circuit) {
  if (circuit.width < 1 || circuit.width > 4)
    throw MalformedCircuit("circuit width must be in [1, 4]");
  const int dim = 1 << circuit.width;
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const auto& element : circuit.elements) {
    const auto* g = std::get_if<Gate>(&element);
    if (!g) throw MalformedCircuit("circuit_unitary needs a measurement-free circuit");
    u = embed_gate(*g, circuit.width) * u;
  }
  return u;
}

QuantumCircuit qt_circuit() {
  QuantumCircuit c{3, {}};
  c.add(cnot_gate(0, 1))
      .add(h_gate(0))
      .add(Measurement{0})
      .add(Measurement{1})
      .add(ClassicallyControlledGate{x_gate(2), 1})
      .add(ClassicallyControlledGate{z_gate(2), 0});
  return c;
}

QuantumCircuit qt_unitary_circuit(CzVariant variant) {
  QuantumCircuit c{3, {}};
  c.add(cnot_gate(0, 1))
      .add(h_gate(0))
      .add(controlled_gate({1, 2}, gate_matrix(GateKind::X)));
  if (variant == CzVariant::Controlled)
    c.add(controlled_gate({0, 2}, gate_matrix(GateKind::Z)));
  else
    c.add(z_gate(0));
  return c;
}

ComplexMatrix printed_qt_unitary() {
  // Row by row; every nonzero entry is +-1/sqrt(2).
  static constexpr int kEntries[8][8] = {
      {1, 0, 0, 0, 0, 0, 1, 0},  {0, 1, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 1, 0, 1, 0, 0},  {0, 0, 1, 0, 1, 0, 0, 0},
      {-1, 0, 0, 0, 0, 0, 1, 0}, {0, -1, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, -1, 0, 1, 0, 0}, {0, 0, -1, 0, 1, 0, 0, 0},
  };
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix u(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) u(i, j) = kEntries[i][j] * r;
  return u;
}

StateVector apply_unitary(const ComplexMatrix& u, const StateVector& s) {
  if (u.cols() != s.size() || u.rows() != u.cols())
    throw DimensionMismatch("matrix is " + std::to_string(u.rows()) + "x" +
                            std::to_string(u.cols()) + ", state has " +
                            std::to_string(s.size()) + " amplitudes");
  return u * s;
}

StateVector kron(const StateVector& a, const StateVector& b) {
  StateVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

StateVector bell_phi_plus() {
  StateVector b = StateVector::Zero(4);
  b(0) = b(3) = 1.0 / std::sqrt(2.0);
  return b;
}

TeleportReport teleport_check(const StateVector& psi, const ComplexMatrix& u) {
  if (psi.size() != 2) throw DimensionMismatch("teleported state must be a qubit");
  if (u.rows() != 8 || u.cols() != 8) throw DimensionMismatch("teleport_check needs an 8x8 matrix");
  const StateVector out = apply_unitary(u, kron(psi, bell_phi_plus()));

  // Row j of `amps` holds the wire-2 amplitudes given wires 0,1 in state j.
  Eigen::Matrix<Complex, 4, 2> amps;
  for (int j = 0; j < 4; ++j) amps.row(j) << out(2 * j), out(2 * j + 1);

  const Eigen::Matrix2cd rho = amps.transpose() * amps.conjugate();
  const Complex f = (psi.adjoint() * rho * psi)(0, 0);

  const Eigen::Vector4cd phi = amps * psi.conjugate();
  StateVector product(8);
  for (int j = 0; j < 4; ++j) product.segment(2 * j, 2) = phi(j) * psi;

  TeleportReport report;
  report.wire3_fidelity = f.real();
  report.product_residual = (out - product).norm();
  report.wires12_product = report.product_residual <= 1e-9;
  return report;
}

namespace {

void branch(const QuantumCircuit& circuit, std::size_t pos, StateVector state, double prob,
            std::vector<int>& record, OutcomeDistribution& dist) {
  for (; pos < circuit.elements.size(); ++pos) {
    const auto& element = circuit.elements[pos];
    if (const auto* g = std::get_if<Gate>(&element)) {
      state = embed_gate(*g, circuit.width) * state;
    } else if (const auto* cg = std::get_if<ClassicallyControlledGate>(&element)) {
      const int src = cg->source_wire;
      if (src < 0 || src >= circuit.width || record[src] < 0)
        throw MalformedCircuit("classical control references unmeasured wire");
      if (record[src] == 1) state = embed_gate(cg->gate, circuit.width) * state;
    } else {
      const int wire = std::get<Measurement>(element).wire;
      if (wire < 0 || wire >= circuit.width) throw WireOutOfRange("measured wire out of range");
      for (int outcome = 0; outcome < 2; ++outcome) {
        StateVector projected = StateVector::Zero(state.size());
        for (Eigen::Index i = 0; i < state.size(); ++i)
          if (bit_of(static_cast<int>(i), wire, circuit.width) == outcome) projected(i) = state(i);
        const double p = projected.squaredNorm();
        if (p == 0.0) continue;
        const int saved = record[wire];
        record[wire] = outcome;
        branch(circuit, pos + 1, projected / std::sqrt(p), prob * p, record, dist);
        record[wire] = saved;
      }
      return;
    }
  }
  dist[record] += prob;
}

}  // namespace

OutcomeDistribution measurement_distribution(const QuantumCircuit& circuit,
                                             const StateVector& input) {
  if (input.size() != (Eigen::Index{1} << circuit.width))
    throw DimensionMismatch("input state does not match circuit width");
  OutcomeDistribution dist;
  std::vector<int> record(circuit.width, -1);
  branch(circuit, 0, input / input.norm(), 1.0, record, dist);
  return dist;
}

}  // namespace holoqc
