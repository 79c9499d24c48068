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

#include "qugan/model.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "qugan/gradient.hpp"

namespace qugan {

namespace {

double cos2(double phi) {
    const double c = std::cos(phi);
    return c * c;
}

double sin2(double phi) {
    const double s = std::sin(phi);
    return s * s;
}

std::uint64_t register_pattern_bits(const RegisterLayout& layout, int begin,
                                    int width, std::uint64_t pattern) {
    std::uint64_t index = 0;
    for (int i = 0; i < width; ++i) {
        if ((pattern >> (width - 1 - i)) & 1u) {
            index |= 1ull << qubit_shift(layout.model_qubits(), begin + i);
        }
    }
    return index;
}

}  // namespace

void RegisterLayout::validate() const {
    if (label_qubits < 1) {
        throw std::invalid_argument("RegisterLayout: need label qubits");
    }
    if (data_qubits < 1) {
        throw std::invalid_argument("RegisterLayout: need data qubits");
    }
    if (gen_bath_qubits < 0 || disc_bath_qubits < 0) {
        throw std::invalid_argument("RegisterLayout: negative bath size");
    }
}

void LabelSet::validate(const RegisterLayout& layout) const {
    if (labels.empty()) {
        throw std::invalid_argument("LabelSet: need at least one label");
    }
    std::set<std::uint64_t> seen;
    for (std::uint64_t l : labels) {
        if (l >= (1ull << layout.label_qubits)) {
            throw std::invalid_argument("LabelSet: label pattern too wide");
        }
        if (!seen.insert(l).second) {
            throw std::invalid_argument("LabelSet: duplicate label");
        }
    }
    if (!z_values.empty()) {
        double total = 0;
        for (const auto& [z, p] : z_values) {
            if (z >= (1ull << layout.gen_bath_qubits)) {
                throw std::invalid_argument("LabelSet: z pattern too wide");
            }
            if (p < 0) {
                throw std::invalid_argument("LabelSet: negative z weight");
            }
            total += p;
        }
        if (std::abs(total - 1.0) > 1e-9) {
            throw std::invalid_argument("LabelSet: z weights must sum to 1");
        }
    }
}

std::vector<std::pair<std::uint64_t, double>> LabelSet::z_distribution()
    const {
    if (z_values.empty()) {
        return {{0, 1.0}};
    }
    return z_values;
}

RealSource label_copy_source(const RegisterLayout& layout) {
    ParamCircuit circuit(layout.source_block_qubits(), 0);
    const int copies = std::min(layout.label_qubits, layout.data_qubits);
    for (int i = 0; i < copies; ++i) {
        circuit.add_fixed(
            FixedGate::cnot(layout.data_qubits + i /* LabelRG[i] */,
                            i /* OutRG[i] */));
    }
    return RealSource{std::move(circuit)};
}

QuganModel::QuganModel(RegisterLayout layout, RealSource source,
                       LabelSet labels, ParamCircuit generator,
                       ParamCircuit discriminator, double phi)
    : layout_(layout), labels_(std::move(labels)), phi_(phi),
      generator_(std::move(generator)),
      discriminator_(std::move(discriminator)),
      decision_(Observable::pauli_z(layout.out_d())) {
    layout_.validate();
    labels_.validate(layout_);
    if (source.circuit.num_qubits() != layout_.source_block_qubits()) {
        throw std::invalid_argument(
            "QuganModel: source must act on the OutRG|LabelRG|BathRG block");
    }
    if (source.circuit.num_params() != 0) {
        throw std::invalid_argument(
            "QuganModel: the real source cannot carry trainable parameters");
    }
    if (generator_.num_qubits() != layout_.source_block_qubits()) {
        throw std::invalid_argument(
            "QuganModel: generator must act on the OutRG|LabelRG|BathRG "
            "block");
    }
    if (discriminator_.num_qubits() != layout_.disc_block_qubits()) {
        throw std::invalid_argument(
            "QuganModel: discriminator must act on the "
            "OutD|BathD|LabelD|OutRG block");
    }
    const int nq = layout_.model_qubits();
    source_embedded_ =
        source.circuit.shifted(layout_.source_block_begin(), nq);
    gen_embedded_ = generator_.shifted(layout_.source_block_begin(), nq);
    disc_embedded_ = discriminator_.shifted(0, nq);
    theta_g_.assign(generator_.num_params(), 0.0);
    theta_d_.assign(discriminator_.num_params(), 0.0);
}

QuganModel QuganModel::with_ansatz(RegisterLayout layout, RealSource source,
                                   LabelSet labels,
                                   const AnsatzSpec& gen_spec,
                                   const AnsatzSpec& disc_spec, double phi) {
    if (gen_spec.num_qubits != layout.source_block_qubits()) {
        throw std::invalid_argument(
            "with_ansatz: generator ansatz width must match the source "
            "block");
    }
    if (disc_spec.num_qubits != layout.disc_block_qubits()) {
        throw std::invalid_argument(
            "with_ansatz: discriminator ansatz width must match its block");
    }
    return QuganModel(layout, std::move(source), std::move(labels),
                      build_ansatz(gen_spec), build_ansatz(disc_spec), phi);
}

void QuganModel::set_theta_g(std::vector<double> theta) {
    if (theta.size() != theta_g_.size()) {
        throw std::invalid_argument("set_theta_g: wrong length");
    }
    theta_g_ = std::move(theta);
}

void QuganModel::set_theta_d(std::vector<double> theta) {
    if (theta.size() != theta_d_.size()) {
        throw std::invalid_argument("set_theta_d: wrong length");
    }
    theta_d_ = std::move(theta);
}

StateVector initial_state(const QuganModel& model, std::uint64_t label,
                          std::uint64_t z) {
    const RegisterLayout& lay = model.layout();
    bool known = false;
    for (std::uint64_t l : model.labels().labels) {
        known = known || l == label;
    }
    if (!known) {
        throw std::invalid_argument("initial_state: unknown label");
    }
    if (z >= (1ull << lay.gen_bath_qubits)) {
        throw std::invalid_argument("initial_state: z pattern too wide");
    }
    std::uint64_t index = 0;
    index |= register_pattern_bits(lay, lay.label_d_begin(),
                                   lay.label_qubits, label);
    index |= register_pattern_bits(lay, lay.label_rg_begin(),
                                   lay.label_qubits, label);
    index |= register_pattern_bits(lay, lay.bath_rg_begin(),
                                   lay.gen_bath_qubits, z);
    return StateVector::basis_state(lay.model_qubits(), index);
}

StateVector apply_source(const QuganModel& model, StateVector state,
                         SourceKind which) {
    if (which == SourceKind::Real) {
        model.source_circuit().apply(state, {});
    } else {
        model.generator_circuit().apply(state, model.theta_g());
    }
    return state;
}

StateVector apply_discriminator(const QuganModel& model, StateVector state) {
    model.discriminator_circuit().apply(state, model.theta_d());
    return state;
}

namespace {

// <Z>_OutD after source+discriminator for a fixed label and z.
double decision_expectation_for_z(const QuganModel& model,
                                  std::uint64_t label, SourceKind which,
                                  std::uint64_t z) {
    StateVector state = initial_state(model, label, z);
    state = apply_source(model, std::move(state), which);
    state = apply_discriminator(model, std::move(state));
    return expectation(state, model.decision_observable());
}

}  // namespace

double branch_decision_expectation(const QuganModel& model,
                                   std::uint64_t label, SourceKind which) {
    if (which == SourceKind::Real) {
        return decision_expectation_for_z(model, label, which, 0);
    }
    double acc = 0;
    for (const auto& [z, weight] : model.labels().z_distribution()) {
        acc += weight * decision_expectation_for_z(model, label, which, z);
    }
    return acc;
}

double cost_v(const QuganModel& model) {
    const double wr = cos2(model.phi());
    const double wg = sin2(model.phi());
    const double lam = static_cast<double>(model.labels().labels.size());
    double acc = 0;
    for (std::uint64_t label : model.labels().labels) {
        acc += wr * branch_decision_expectation(model, label,
                                                SourceKind::Real) -
               wg * branch_decision_expectation(model, label,
                                                SourceKind::Generated);
    }
    return 0.5 + acc / (2 * lam);
}

double cost_v_fair_coin(const QuganModel& model) {
    const double lam = static_cast<double>(model.labels().labels.size());
    double acc = 0;
    for (std::uint64_t label : model.labels().labels) {
        acc += branch_decision_expectation(model, label, SourceKind::Real) -
               branch_decision_expectation(model, label,
                                           SourceKind::Generated);
    }
    return 0.5 + acc / (4 * lam);
}

std::pair<double, double> cost_components(const QuganModel& model) {
    const double wr = cos2(model.phi());
    const double wg = sin2(model.phi());
    const double lam = static_cast<double>(model.labels().labels.size());
    double v_dr = 0;
    double v_dg = 0;
    for (std::uint64_t label : model.labels().labels) {
        v_dr += branch_decision_expectation(model, label, SourceKind::Real);
        v_dg -= branch_decision_expectation(model, label,
                                            SourceKind::Generated);
    }
    return {wr * v_dr / (2 * lam), wg * v_dg / (2 * lam)};
}

namespace {

// Discriminator input state for one label/branch/z (source applied, D not).
StateVector disc_input(const QuganModel& model, std::uint64_t label,
                       SourceKind which, std::uint64_t z) {
    return apply_source(model, initial_state(model, label, z), which);
}

// Generator+frozen-discriminator circuit used for theta_G derivatives.
ParamCircuit combined_gd_circuit(const QuganModel& model) {
    ParamCircuit combined(model.layout().model_qubits(),
                          model.num_gen_params());
    for (const GateOp& g : model.generator_circuit().gates()) {
        combined.add(g);
    }
    const ParamCircuit disc_frozen =
        model.discriminator_circuit().frozen(model.theta_d());
    for (const GateOp& g : disc_frozen.gates()) {
        combined.add(g);
    }
    return combined;
}

void accumulate(std::vector<double>& into, const std::vector<double>& from,
                double weight) {
    for (std::size_t i = 0; i < into.size(); ++i) {
        into[i] += weight * from[i];
    }
}

}  // namespace

std::vector<double> grad_discriminator(const QuganModel& model) {
    const double wr = cos2(model.phi());
    const double wg = sin2(model.phi());
    const double lam = static_cast<double>(model.labels().labels.size());
    std::vector<double> grad(model.num_disc_params(), 0.0);
    for (std::uint64_t label : model.labels().labels) {
        const std::vector<double> g_real = parameter_gradient(
            model.discriminator_circuit(), model.theta_d(),
            disc_input(model, label, SourceKind::Real, 0),
            model.decision_observable());
        accumulate(grad, g_real, wr / (2 * lam));
        for (const auto& [z, weight] : model.labels().z_distribution()) {
            const std::vector<double> g_gen = parameter_gradient(
                model.discriminator_circuit(), model.theta_d(),
                disc_input(model, label, SourceKind::Generated, z),
                model.decision_observable());
            accumulate(grad, g_gen, -wg * weight / (2 * lam));
        }
    }
    return grad;
}

std::vector<double> grad_generator(const QuganModel& model) {
    const double wg = sin2(model.phi());
    const double lam = static_cast<double>(model.labels().labels.size());
    const ParamCircuit combined = combined_gd_circuit(model);
    std::vector<double> grad(model.num_gen_params(), 0.0);
    for (std::uint64_t label : model.labels().labels) {
        for (const auto& [z, weight] : model.labels().z_distribution()) {
            const std::vector<double> g = parameter_gradient(
                combined, model.theta_g(), initial_state(model, label, z),
                model.decision_observable());
            accumulate(grad, g, -wg * weight / (2 * lam));
        }
    }
    return grad;
}

namespace {

// Per-parameter gradients of <Z_OutD> through the ancilla circuits. The
// `flip_sign_gate` realizes the generated branch's sign with an X on OutD.
std::vector<double> circuit_route_gradient(const ParamCircuit& circuit,
                                           std::span<const double> params,
                                           const StateVector& input,
                                           const Observable& obs,
                                           long long shots,
                                           std::mt19937_64* rng) {
    std::vector<double> grad(circuit.num_params(), 0.0);
    for (int pos = 1; pos <= circuit.size(); ++pos) {
        if (!circuit.gate_is_trainable(pos)) {
            continue;
        }
        const GradientTask task{
            circuit, std::vector<double>(params.begin(), params.end()),
            input, obs, pos};
        const double g = (shots > 0)
                             ? estimate_gradient_shots(task, shots, (*rng)())
                             : circuit_gradient(task);
        grad[std::get<ParamGate>(circuit.gate(pos)).param_index] += g;
    }
    return grad;
}

std::vector<double> disc_gradient_circuit_route(const QuganModel& model,
                                                long long shots,
                                                std::mt19937_64* rng) {
    const double wr = cos2(model.phi());
    const double wg = sin2(model.phi());
    const double lam = static_cast<double>(model.labels().labels.size());

    // Generated branch: X on OutD after D flips <Z>, turning the branch
    // weight positive.
    ParamCircuit disc_flipped = model.discriminator_circuit();
    disc_flipped.add_fixed(FixedGate::x(model.layout().out_d()));

    std::vector<double> grad(model.num_disc_params(), 0.0);
    for (std::uint64_t label : model.labels().labels) {
        accumulate(grad,
                   circuit_route_gradient(
                       model.discriminator_circuit(), model.theta_d(),
                       disc_input(model, label, SourceKind::Real, 0),
                       model.decision_observable(), shots, rng),
                   wr / (2 * lam));
        for (const auto& [z, weight] : model.labels().z_distribution()) {
            accumulate(grad,
                       circuit_route_gradient(
                           disc_flipped, model.theta_d(),
                           disc_input(model, label, SourceKind::Generated, z),
                           model.decision_observable(), shots, rng),
                       wg * weight / (2 * lam));
        }
    }
    return grad;
}

std::vector<double> gen_gradient_circuit_route(const QuganModel& model,
                                               long long shots,
                                               std::mt19937_64* rng) {
    const double wg = sin2(model.phi());
    const double lam = static_cast<double>(model.labels().labels.size());
    const ParamCircuit combined = combined_gd_circuit(model);
    std::vector<double> grad(model.num_gen_params(), 0.0);
    for (std::uint64_t label : model.labels().labels) {
        for (const auto& [z, weight] : model.labels().z_distribution()) {
            accumulate(grad,
                       circuit_route_gradient(
                           combined, model.theta_g(),
                           initial_state(model, label, z),
                           model.decision_observable(), shots, rng),
                       -wg * weight / (2 * lam));
        }
    }
    return grad;
}

}  // namespace

std::vector<double> grad_discriminator_via_circuits(const QuganModel& model) {
    return disc_gradient_circuit_route(model, 0, nullptr);
}

std::vector<double> grad_generator_via_circuits(const QuganModel& model) {
    return gen_gradient_circuit_route(model, 0, nullptr);
}

std::vector<double> grad_discriminator_shots(const QuganModel& model,
                                             long long shots,
                                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return disc_gradient_circuit_route(model, shots, &rng);
}

std::vector<double> grad_generator_shots(const QuganModel& model,
                                         long long shots,
                                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return gen_gradient_circuit_route(model, shots, &rng);
}

std::pair<double, double> cost_components_shots(const QuganModel& model,
                                                long long shots,
                                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int out_d = model.layout().out_d();
    auto sampled_z = [&](std::uint64_t label, SourceKind which,
                         std::uint64_t z) {
        StateVector state = initial_state(model, label, z);
        state = apply_source(model, std::move(state), which);
        state = apply_discriminator(model, std::move(state));
        const ShotCounts counts = sample_z_basis(state, out_d, shots, rng());
        return static_cast<double>(counts.zeros - counts.ones) /
               static_cast<double>(shots);
    };
    const double wr = cos2(model.phi());
    const double wg = sin2(model.phi());
    const double lam = static_cast<double>(model.labels().labels.size());
    double v_dr = 0;
    double v_dg = 0;
    for (std::uint64_t label : model.labels().labels) {
        v_dr += sampled_z(label, SourceKind::Real, 0);
        for (const auto& [z, weight] : model.labels().z_distribution()) {
            v_dg -= weight * sampled_z(label, SourceKind::Generated, z);
        }
    }
    return {wr * v_dr / (2 * lam), wg * v_dg / (2 * lam)};
}

namespace {

std::vector<int> out_rg_qubits(const RegisterLayout& lay) {
    std::vector<int> keep;
    for (int i = 0; i < lay.data_qubits; ++i) {
        keep.push_back(lay.out_rg_begin() + i);
    }
    return keep;
}

}  // namespace

DensityOperator reduced_real_state(const QuganModel& model,
                                   std::uint64_t label) {
    const StateVector out =
        apply_source(model, initial_state(model, label, 0),
                     SourceKind::Real);
    return reduced_state(out, out_rg_qubits(model.layout()));
}

DensityOperator reduced_generated_state(const QuganModel& model,
                                        std::uint64_t label) {
    const std::vector<int> keep = out_rg_qubits(model.layout());
    Matrix mixed = Matrix::Zero(1ull << keep.size(), 1ull << keep.size());
    for (const auto& [z, weight] : model.labels().z_distribution()) {
        const StateVector out = apply_source(
            model, initial_state(model, label, z), SourceKind::Generated);
        mixed += weight * reduced_state(out, keep).matrix();
    }
    return DensityOperator(static_cast<int>(keep.size()), std::move(mixed));
}

double cross_entropy(const QuganModel& model, std::uint64_t label) {
    constexpr double kLogFloor = 1e-12;
    const DensityOperator rho_r = reduced_real_state(model, label);
    const DensityOperator rho_g = reduced_generated_state(model, label);

    const EigenSystem es_r = hermitian_eigensystem(rho_r.matrix());
    double entropy_term = 0;
    for (Eigen::Index i = 0; i < es_r.values.size(); ++i) {
        const double r = es_r.values(i);
        if (r > 1e-15) {
            entropy_term += r * std::log2(r);
        }
    }

    const EigenSystem es_g = hermitian_eigensystem(rho_g.matrix());
    Eigen::VectorXd logs(es_g.values.size());
    for (Eigen::Index i = 0; i < es_g.values.size(); ++i) {
        logs(i) = std::log2(std::max(es_g.values(i), kLogFloor));
    }
    const Matrix log_rho_g =
        es_g.vectors * logs.asDiagonal() * es_g.vectors.adjoint();
    const double cross_term = (rho_r.matrix() * log_rho_g).trace().real();

    return entropy_term - cross_term;
}

double purity_overlap(const QuganModel& model) {
    return purity_report(model).overlap;
}

PurityReport purity_report(const QuganModel& model) {
    PurityReport report;
    const double lam = static_cast<double>(model.labels().labels.size());
    for (std::uint64_t label : model.labels().labels) {
        const DensityOperator rho_r = reduced_real_state(model, label);
        const DensityOperator rho_g = reduced_generated_state(model, label);
        report.overlap +=
            (rho_r.matrix() * rho_g.matrix()).trace().real() / lam;
        report.r_min += rho_r.min_eigenvalue() / lam;
        report.source_purity += rho_r.purity() / lam;
    }
    report.half_overlap = report.overlap / 2;
    report.one_minus_half = 1 - report.overlap / 2;
    return report;
}

}  // namespace qugan
