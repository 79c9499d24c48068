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

#include "qugan/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qugan/circuit_io.hpp"
#include "qugan/gradient.hpp"
#include "qugan/random_circuits.hpp"

namespace qugan {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_trace_csv(std::ostream& out, const TrainingTrace& trace) {
    out << "step,chi_D,chi_G,V,V_DR,V_DG";
    for (std::uint64_t label : trace.label_order) {
        out << ",S_label_" << label;
    }
    out << ",grad_norm_D,grad_norm_G,wall_ms\n";
    for (const TraceRecord& rec : trace.records) {
        out << rec.step << ',' << fmt17(rec.chi_d) << ',' << fmt17(rec.chi_g)
            << ',' << fmt17(rec.v) << ',' << fmt17(rec.v_dr) << ','
            << fmt17(rec.v_dg);
        for (double s : rec.cross_entropies) {
            out << ',' << fmt17(s);
        }
        out << ',' << fmt17(rec.grad_norm_d) << ',' << fmt17(rec.grad_norm_g)
            << ',' << fmt17(rec.wall_ms) << '\n';
    }
}

int run_experiment(const RunConfig& config, std::ostream& out,
                   std::ostream& err) {
    QuganModel model = make_model(config);

    err << "qubits: " << model.layout().total_qubits() << " (model "
        << model.layout().model_qubits() << " + Grad)\n";
    err << "parameters: N_G=" << model.num_gen_params()
        << " N_D=" << model.num_disc_params() << " total "
        << model.num_gen_params() + model.num_disc_params() << "\n";

    std::ofstream trace_out(config.out);
    if (!trace_out) {
        err << "error: cannot open output file '" << config.out << "'\n";
        return kExitInputError;
    }

    TrainOptions options;
    options.shots = config.shots;
    options.on_step = [&err](const TraceRecord& rec) {
        if (rec.step % 100 == 0) {
            err << "step " << rec.step << " V=" << rec.v << " S=[";
            for (std::size_t i = 0; i < rec.cross_entropies.size(); ++i) {
                err << (i ? " " : "") << rec.cross_entropies[i];
            }
            err << "]\n";
        }
    };

    TrainingTrace trace = train(model, config.schedule, config.seed, options);
    write_trace_csv(trace_out, trace);
    trace_out.close();

    if (trace.aborted) {
        err << "error: " << trace.diagnostic << "\n";
        return kExitNumericalFailure;
    }

    out << "RESULT";
    if (trace.records.empty()) {
        out << " steps=0\n";
        return kExitOk;
    }
    const TraceRecord& last = trace.records.back();
    out << " steps=" << last.step << " V=" << fmt17(last.v);
    for (std::size_t i = 0; i < trace.label_order.size(); ++i) {
        out << " S_label_" << trace.label_order[i] << "="
            << fmt17(last.cross_entropies[i]);
    }
    out << "\n";
    return kExitOk;
}

int cmd_replicate_paper(std::uint64_t seed, const std::string& out_path,
                        long long shots, bool print_config_only,
                        std::ostream& out, std::ostream& err) {
    RunConfig config = RunConfig::replication_defaults();
    config.seed = seed;
    config.out = out_path;
    config.shots = shots;
    if (print_config_only) {
        out << config.serialize();
        return kExitOk;
    }
    try {
        return run_experiment(config, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_run(const std::string& config_path, std::ostream& out,
            std::ostream& err) {
    RunConfig config;
    try {
        config = RunConfig::parse_file(config_path);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return run_experiment(config, out, err);
}

int cmd_grad_check(const std::optional<std::string>& circuit_path,
                   bool random_circuit, double tolerance, std::uint64_t seed,
                   std::ostream& out, std::ostream& err) {
    ParamCircuit circuit;
    Observable obs = Observable::pauli_z(0);
    std::mt19937_64 rng(seed);
    try {
        if (circuit_path) {
            CircuitFile file = load_circuit_file(*circuit_path);
            circuit = std::move(file.circuit);
            obs = std::move(file.observable);
        } else if (random_circuit) {
            circuit = random_pauli_circuit(5, 20, rng);
        } else {
            err << "error: grad-check needs a circuit file or --random\n";
            return kExitInputError;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    const std::vector<double> params =
        random_parameters(circuit.num_params(), rng);
    const StateVector psi0(circuit.num_qubits());

    double max_dev = 0;
    try {
        for (int pos = 1; pos <= circuit.size(); ++pos) {
            if (!circuit.gate_is_trainable(pos)) {
                continue;
            }
            GradientTask task{circuit, params, psi0, obs, pos};
            const double analytic = analytic_gradient(task);
            const double via_circuit = circuit_gradient(task);
            const double fd = finite_difference_gradient(task, 1e-5);
            max_dev = std::max(max_dev, std::abs(analytic - via_circuit));
            max_dev = std::max(max_dev, std::abs(analytic - fd));
            max_dev = std::max(max_dev, std::abs(via_circuit - fd));
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    out << "grad-check: max deviation " << fmt17(max_dev) << " over "
        << circuit.num_params() << " parameters (tolerance "
        << fmt17(tolerance) << ")\n";
    return max_dev < tolerance ? kExitOk : kExitInputError;
}

int cmd_hess_check(double tolerance, std::uint64_t seed, std::ostream& out,
                   std::ostream& err) {
    std::mt19937_64 rng(seed);
    const ParamCircuit circuit = random_pauli_circuit(4, 8, rng);
    const std::vector<double> params =
        random_parameters(circuit.num_params(), rng);
    const StateVector psi0(circuit.num_qubits());
    const Observable obs = Observable::pauli_z(0);

    std::vector<int> trainable;
    for (int pos = 1; pos <= circuit.size(); ++pos) {
        if (circuit.gate_is_trainable(pos)) {
            trainable.push_back(pos);
        }
    }

    double max_sym = 0;
    double max_fd = 0;
    const double step = 1e-4;
    try {
        for (int j : trainable) {
            for (int k : trainable) {
                GradientTask task{circuit, params, psi0, obs, j};
                const double h_jk = hessian_entry(task, k);
                GradientTask task_rev{circuit, params, psi0, obs, k};
                max_sym = std::max(
                    max_sym, std::abs(h_jk - hessian_entry(task_rev, j)));

                // finite difference of the analytic gradient in theta_k
                const auto& pk = std::get<ParamGate>(circuit.gate(k));
                std::vector<double> plus = params;
                std::vector<double> minus = params;
                plus[pk.param_index] += step;
                minus[pk.param_index] -= step;
                GradientTask tp{circuit, plus, psi0, obs, j};
                GradientTask tm{circuit, minus, psi0, obs, j};
                const double fd = (analytic_gradient(tp) -
                                   analytic_gradient(tm)) /
                                  (2 * step);
                max_fd = std::max(max_fd, std::abs(h_jk - fd));
            }
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    out << "hess-check: symmetry residual " << fmt17(max_sym)
        << ", finite-difference deviation " << fmt17(max_fd)
        << " (tolerance " << fmt17(tolerance) << ")\n";
    return (max_sym < tolerance && max_fd < tolerance) ? kExitOk
                                                       : kExitInputError;
}

}  // namespace qugan
