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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qugan/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Adversarially trained quantum circuit simulator"};
    app.require_subcommand(1);

    // replicate-paper
    auto* replicate = app.add_subcommand(
        "replicate-paper",
        "Run the built-in two-label benchmark experiment");
    std::uint64_t seed = 0;
    std::string out_path = "trace.csv";
    long long shots = 0;
    bool print_config = false;
    replicate->add_option("--seed", seed, "Run seed");
    replicate->add_option("--out", out_path, "Trace CSV path");
    replicate->add_option("--shots", shots,
                          "Shot-based estimation (0 = exact)");
    replicate->add_flag("--print-config", print_config,
                        "Dump the built-in config instead of running");

    // run
    auto* run = app.add_subcommand("run", "Run an experiment from a config");
    std::string config_path;
    run->add_option("config", config_path, "Config file path")->required();

    // grad-check
    auto* grad = app.add_subcommand(
        "grad-check",
        "Cross-check analytic, circuit and finite-difference gradients");
    std::optional<std::string> circuit_path;
    bool random_circuit = false;
    double tolerance = 1e-6;
    std::uint64_t check_seed = 1;
    grad->add_option("circuit", circuit_path, "Circuit file path");
    grad->add_flag("--random", random_circuit, "Use a seeded random circuit");
    grad->add_option("--tolerance", tolerance, "Pass threshold");
    grad->add_option("--seed", check_seed, "Random-circuit seed");

    // hess-check
    auto* hess = app.add_subcommand(
        "hess-check", "Verify Hessian symmetry and finite differences");
    double hess_tolerance = 1e-6;
    std::uint64_t hess_seed = 1;
    hess->add_flag("--random", random_circuit,
                   "Use a seeded random circuit (default)");
    hess->add_option("--tolerance", hess_tolerance, "Pass threshold");
    hess->add_option("--seed", hess_seed, "Random-circuit seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : qugan::kExitInputError;
    }

    try {
        if (replicate->parsed()) {
            return qugan::cmd_replicate_paper(seed, out_path, shots,
                                              print_config, std::cout,
                                              std::cerr);
        }
        if (run->parsed()) {
            return qugan::cmd_run(config_path, std::cout, std::cerr);
        }
        if (grad->parsed()) {
            return qugan::cmd_grad_check(circuit_path, random_circuit,
                                         tolerance, check_seed, std::cout,
                                         std::cerr);
        }
        if (hess->parsed()) {
            return qugan::cmd_hess_check(hess_tolerance, hess_seed,
                                         std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qugan::kExitNumericalFailure;
    }
    return qugan::kExitInputError;
}
