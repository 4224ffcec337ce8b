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

#include <iosfwd>
#include <string>

#include "holoqc/cmt.hpp"
#include "holoqc/metrics.hpp"

namespace holoqc::cli {

enum class Command { Compile, Simulate, Verify, Sweep, Feasibility, TeleportDemo, CnotDemo };

/// How `compile` lays out the plan.
enum class Layout {
  MultiplexStack,  // multiplexed hologram + redirection, signal cone to signal cone
  Multiplex,       // bare multiplexed hologram, signal cone to reference cone
  Stacked,         // single-exposure gratings; signed permutations only
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitBelowThreshold = 3;

struct RunConfig {
  Command command = Command::CnotDemo;
  std::string geometry_path;
  std::string material_path;
  std::string plan_path;
  std::string target_path;
  std::string out_path;  // file, or a directory for the demos
  SimulationMode mode = SimulationMode::Ideal;
  bool crosstalk = false;
  double threshold = kDefaultFidelityThreshold;
  Layout layout = Layout::MultiplexStack;
  double tilt_range = 1e-3;
  int samples = 41;
};

/// Runs one command. Human-readable output goes to `out`, diagnostics to
/// `err`. Returns the process exit code.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace holoqc::cli
