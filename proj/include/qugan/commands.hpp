// Copyright 2026 The qugansim Authors.
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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qugan/run_config.hpp"
#include "qugan/training.hpp"

namespace qugan {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNumericalFailure = 2;

/// One row per discriminator step, floats with 17 significant digits.
/// Header: step,chi_D,chi_G,V,V_DR,V_DG,S_label_<l>...,grad_norm_D,
/// grad_norm_G,wall_ms
void write_trace_csv(std::ostream& out, const TrainingTrace& trace);

/// Runs a validated config end to end: builds the model, trains, writes the
/// trace, prints the summary line. Progress goes to `err` every 100 steps.
int run_experiment(const RunConfig& config, std::ostream& out,
                   std::ostream& err);

/// The built-in benchmark experiment; `print_config_only` dumps the config
/// instead of running.
int cmd_replicate_paper(std::uint64_t seed, const std::string& out_path,
                        long long shots, bool print_config_only,
                        std::ostream& out, std::ostream& err);

int cmd_run(const std::string& config_path, std::ostream& out,
            std::ostream& err);

/// Cross-checks analytic, ancilla-circuit and finite-difference gradients
/// on a circuit file or a seeded random circuit.
int cmd_grad_check(const std::optional<std::string>& circuit_path,
                   bool random_circuit, double tolerance, std::uint64_t seed,
                   std::ostream& out, std::ostream& err);

/// Verifies Hessian symmetry and finite-difference agreement on a seeded
/// random circuit.
int cmd_hess_check(double tolerance, std::uint64_t seed, std::ostream& out,
                   std::ostream& err);

}  // namespace qugan
