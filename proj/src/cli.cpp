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

#include "holoqc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>

#include "holoqc/circuit.hpp"
#include "holoqc/compiler.hpp"
#include "holoqc/errors.hpp"
#include "holoqc/io.hpp"

namespace holoqc::cli {

namespace {

namespace fs = std::filesystem;

const std::string& require_path(const std::string& path, const char* flag) {
  if (path.empty()) throw InputError(std::string("missing required flag ") + flag);
  return path;
}

ConeGeometry load_geometry(const RunConfig& c) {
  return io::geometry_from_json(io::read_json_file(require_path(c.geometry_path, "--geometry")));
}

MaterialSpec load_material(const RunConfig& c) {
  return io::material_from_json(io::read_json_file(require_path(c.material_path, "--material")));
}

io::Plan load_plan(const RunConfig& c) {
  io::Plan plan = io::plan_from_json(io::read_json_file(require_path(c.plan_path, "--plan")));
  if (!c.material_path.empty()) plan.material = load_material(c);
  return plan;
}

const MaterialSpec& plan_material(const io::Plan& plan) {
  if (!plan.material) throw InputError("plan carries no material; pass --material");
  return *plan.material;
}

// Stacks that end on a grating diffracting into the signal cone are read
// signal-to-signal; anything else lands on the reference cone.
Role output_space(const GratingStack& stack) {
  for (auto it = stack.holograms.rbegin(); it != stack.holograms.rend(); ++it)
    if (!it->exposures.empty()) return it->exposures.front().partner.role;
  return Role::Signal;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
  } else {
    io::write_text_file(c.out_path, text);
  }
}

DetunedOptions detuned_options(const RunConfig& c) {
  DetunedOptions o;
  o.include_crosstalk = c.crosstalk;
  return o;
}

GratingStack compile_plan(const ComplexMatrix& target, const ModeSet& modes,
                          const MaterialSpec& material, Layout layout) {
  const double full = material.max_index_modulation;
  // Multiplexed exposures share the material's modulation budget.
  const double shared = full / modes.dimension();
  GratingStack stack{{}, modes};
  switch (layout) {
    case Layout::MultiplexStack:
      stack = compile_multiplex_stack(target, modes, shared);
      break;
    case Layout::Multiplex:
      stack.holograms.push_back(compile_multiplex(target, modes, shared));
      break;
    case Layout::Stacked:
      stack = compile_signed_permutation_stack(target, modes, full);
      break;
  }
  tune_thickness(stack, material);
  return stack;
}

FidelityReport verify_stack(const GratingStack& stack, const MaterialSpec& material,
                            const ComplexMatrix& target, const RunConfig& c) {
  const TransferResult result = simulate_stack(stack, material, c.mode, detuned_options(c));
  const ComplexMatrix realized = realized_unitary(result, stack.modes, output_space(stack));
  return process_fidelity(target, realized, c.threshold);
}

int run_compile(const RunConfig& c, std::ostream& out) {
  const ComplexMatrix target =
      io::target_unitary_from_json(io::read_json_file(require_path(c.target_path, "--target")));
  ConeGeometry geometry = load_geometry(c);
  if (geometry.dimension != target.rows())
    throw DimensionMismatch("geometry has n = " + std::to_string(geometry.dimension) +
                            " but the target is " + std::to_string(target.rows()) + "-dimensional");
  const MaterialSpec material = load_material(c);
  const ModeSet modes = make_cone_basis(geometry);
  io::Plan plan{compile_plan(target, modes, material, c.layout), material};
  emit(c, io::dump(io::to_json(plan)), out);
  return kExitOk;
}

int run_simulate(const RunConfig& c, std::ostream& out) {
  const io::Plan plan = load_plan(c);
  const TransferResult r =
      simulate_stack(plan.stack, plan_material(plan), c.mode, detuned_options(c));
  emit(c, io::dump(io::to_json(r, plan.stack.modes)), out);
  return kExitOk;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  const io::Plan plan = load_plan(c);
  const ComplexMatrix target =
      io::target_unitary_from_json(io::read_json_file(require_path(c.target_path, "--target")));
  if (target.rows() != plan.stack.modes.dimension())
    throw DimensionMismatch("target and plan dimensions differ");
  const FidelityReport report = verify_stack(plan.stack, plan_material(plan), target, c);
  emit(c, io::dump(io::to_json(report, c.threshold)), out);
  return report.pass ? kExitOk : kExitBelowThreshold;
}

int run_sweep(const RunConfig& c, std::ostream& out) {
  const io::Plan plan = load_plan(c);
  SweepOptions options;
  options.include_crosstalk = c.crosstalk;
  const auto rows = selectivity_sweep(plan.stack, plan_material(plan), c.tilt_range, c.samples,
                                      options);
  emit(c, io::sweep_csv(rows), out);
  return kExitOk;
}

int run_feasibility(const RunConfig& c, std::ostream& out) {
  const io::Plan plan = load_plan(c);
  emit(c, io::dump(io::to_json(feasibility_report(plan.stack, plan_material(plan)))), out);
  return kExitOk;
}

struct DemoFiles {
  fs::path dir;
  void write(const std::string& name, const std::string& text) const {
    if (dir.empty()) return;
    io::write_text_file((dir / name).string(), text);
  }
};

DemoFiles demo_files(const RunConfig& c) {
  DemoFiles files{c.out_path.empty() ? fs::path{} : fs::path{c.out_path}};
  if (!files.dir.empty()) fs::create_directories(files.dir);
  return files;
}

void print_fidelity(std::ostream& out, const char* what, const FidelityReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-34s fidelity = %.15f  phase = %+.6f rad  max_err = %.3e\n",
                what, r.fidelity, std::abs(r.global_phase) < 5e-7 ? 0.0 : r.global_phase,
                r.max_elementwise_error);
  out << buf;
}

int run_cnot_demo(const RunConfig& c, std::ostream& out) {
  ConeGeometry geometry = load_geometry(c);
  geometry.dimension = 4;
  const MaterialSpec material = load_material(c);
  const ModeSet modes = make_cone_basis(geometry);
  GratingStack stack = compile_cnot_stack(modes, material.max_index_modulation);
  tune_thickness(stack, material);

  const ComplexMatrix target = gate_matrix(GateKind::CNOT);
  const FidelityReport report = verify_stack(stack, material, target, c);
  const FeasibilityReport feasibility = feasibility_report(stack, material);

  out << "CNOT as four stacked single-exposure gratings\n";
  print_fidelity(out, "signal -> signal vs CNOT", report);
  out << "recordings = " << feasibility.recordings
      << ", tuned grating thickness = " << *stack.holograms.front().thickness * 1e3 << " mm\n";

  const DemoFiles files = demo_files(c);
  files.write("plan.json", io::dump(io::to_json(io::Plan{stack, material})));
  files.write("report.json", io::dump(io::to_json(report, c.threshold)));
  files.write("feasibility.json", io::dump(io::to_json(feasibility)));
  files.write("sweep.csv", io::sweep_csv(selectivity_sweep(stack, material, c.tilt_range,
                                                           c.samples)));
  return report.pass ? kExitOk : kExitBelowThreshold;
}

int run_teleport_demo(const RunConfig& c, std::ostream& out) {
  ConeGeometry geometry = load_geometry(c);
  geometry.dimension = 8;
  const MaterialSpec material = load_material(c);
  const ModeSet modes = make_cone_basis(geometry);
  const ComplexMatrix printed = printed_qt_unitary();

  const GratingStack stack = compile_plan(printed, modes, material, Layout::MultiplexStack);
  const FidelityReport full = verify_stack(stack, material, printed, c);
  const GratingStack bare{{stack.holograms.front()}, modes};
  const FidelityReport half = verify_stack(bare, material, printed, c);

  StateVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const auto derived = teleport_check(plus, circuit_unitary(qt_unitary_circuit(CzVariant::Controlled)));
  const auto as_printed = teleport_check(plus, printed);
  const FeasibilityReport feasibility = feasibility_report(bare, material);

  out << "Teleportation unitary as one multiplexed hologram plus redirection\n";
  print_fidelity(out, "multiplex + redirection vs U_QT", full);
  print_fidelity(out, "multiplex alone (to R cone) vs U_QT", half);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "wire-3 fidelity for |+>: controlled-Z circuit %.12f, tabulated U_QT %.12f\n",
                derived.wire3_fidelity, as_printed.wire3_fidelity);
  out << buf;
  out << "multiplexed recordings = " << feasibility.recordings
      << ", required thickness = " << feasibility.required_thickness * 1e3 << " mm\n";

  const DemoFiles files = demo_files(c);
  files.write("plan.json", io::dump(io::to_json(io::Plan{stack, material})));
  files.write("report.json", io::dump(io::to_json(full, c.threshold)));
  files.write("feasibility.json", io::dump(io::to_json(feasibility)));
  files.write("sweep.csv", io::sweep_csv(selectivity_sweep(bare, material, c.tilt_range,
                                                           c.samples)));
  return full.pass && half.pass ? kExitOk : kExitBelowThreshold;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!(config.threshold >= 0.0 && config.threshold <= 1.0))
      throw InputError("--threshold must lie in [0, 1]");
    if (!(config.tilt_range > 0.0) || config.samples < 2)
      throw InputError("--tilt-range must be positive and --samples >= 2");
    switch (config.command) {
      case Command::Compile: return run_compile(config, out);
      case Command::Simulate: return run_simulate(config, out);
      case Command::Verify: return run_verify(config, out);
      case Command::Sweep: return run_sweep(config, out);
      case Command::Feasibility: return run_feasibility(config, out);
      case Command::TeleportDemo: return run_teleport_demo(config, out);
      case Command::CnotDemo: return run_cnot_demo(config, out);
    }
    throw InputError("unknown command");
  } catch (const NotUnitary& e) {
    err << "error: NotUnitary: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace holoqc::cli
