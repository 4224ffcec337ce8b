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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "holoqc/cli.hpp"

namespace {

using holoqc::cli::Command;
using holoqc::cli::Layout;
using holoqc::cli::RunConfig;

struct Flags {
  bool geometry = false;
  bool material = false;
  bool plan = false;
  bool target = false;
  bool simulation = false;
  bool threshold = false;
  bool layout = false;
  bool sweep = false;
};

void add_flags(CLI::App* sub, RunConfig& config, const Flags& f) {
  if (f.geometry) sub->add_option("--geometry", config.geometry_path, "cone geometry JSON");
  if (f.material) sub->add_option("--material", config.material_path, "material JSON");
  if (f.plan) sub->add_option("--plan", config.plan_path, "recording plan JSON")->required();
  if (f.target)
    sub->add_option("--target", config.target_path, "circuit or matrix JSON")->required();
  if (f.simulation) {
    const std::map<std::string, holoqc::SimulationMode> modes{
        {"ideal", holoqc::SimulationMode::Ideal}, {"detuned", holoqc::SimulationMode::Detuned}};
    sub->add_option("--mode", config.mode, "ideal | detuned")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  }
  if (f.simulation || f.sweep)
    sub->add_flag("--crosstalk", config.crosstalk, "keep Bragg-mismatched cross terms");
  if (f.threshold)
    sub->add_option("--threshold", config.threshold, "process fidelity pass threshold");
  if (f.layout) {
    const std::map<std::string, Layout> layouts{{"multiplex-stack", Layout::MultiplexStack},
                                                {"multiplex", Layout::Multiplex},
                                                {"stacked", Layout::Stacked}};
    sub->add_option("--layout", config.layout, "multiplex-stack | multiplex | stacked")
        ->transform(CLI::CheckedTransformer(layouts, CLI::ignore_case));
  }
  if (f.sweep) {
    sub->add_option("--tilt-range", config.tilt_range, "largest probe tilt in rad");
    sub->add_option("--samples", config.samples, "number of tilt samples");
  }
  sub->add_option("--out", config.out_path, "output file (directory for demos)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holoqc: compile quantum circuits into volume-hologram recording plans"};
  app.require_subcommand(1);
  RunConfig config;

  struct Entry {
    const char* name;
    const char* help;
    Command command;
    Flags flags;
  };
  const Entry entries[] = {
      {"compile", "compile a target unitary into a recording plan", Command::Compile,
       {.geometry = true, .material = true, .target = true, .layout = true}},
      {"simulate", "propagate through a plan and write the transfer matrix", Command::Simulate,
       {.material = true, .plan = true, .simulation = true}},
      {"verify", "compare a plan against its target unitary", Command::Verify,
       {.material = true, .plan = true, .target = true, .simulation = true, .threshold = true}},
      {"sweep", "diffraction efficiency against probe tilt", Command::Sweep,
       {.material = true, .plan = true, .sweep = true}},
      {"feasibility", "recording budget and regime checks", Command::Feasibility,
       {.material = true, .plan = true}},
      {"teleport-demo", "three-qubit teleportation unitary end to end", Command::TeleportDemo,
       {.geometry = true, .material = true, .simulation = true, .threshold = true, .sweep = true}},
      {"cnot-demo", "CNOT from four stacked gratings end to end", Command::CnotDemo,
       {.geometry = true, .material = true, .simulation = true, .threshold = true, .sweep = true}},
  };
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_flags(sub, config, e.flags);
    const Command command = e.command;
    sub->callback([&config, command] { config.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return holoqc::cli::kExitBadInput;
  }
  return holoqc::cli::execute(config, std::cout, std::cerr);
}
