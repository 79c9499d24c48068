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
#include <numbers>
#include <utility>
#include <vector>

#include "qugan/ansatz.hpp"
#include "qugan/circuit.hpp"
#include "qugan/density_operator.hpp"
#include "qugan/observable.hpp"

namespace qugan {

/**
 * @brief Qubit register layout.
 *
 * Fixed register order: Grad(1) | OutD(1) | BathD(d) | LabelD(s) |
 * OutRG(n) | LabelRG(s) | BathRG(m), with qubit 0 the most significant bit.
 * Model-space states live on everything except Grad; gradient circuits
 * prepend the Grad qubit, which lands it at position 0 of the full layout.
 */
struct RegisterLayout {
    int label_qubits = 1;      // s, per label register
    int data_qubits = 1;       // n
    int gen_bath_qubits = 0;   // m
    int disc_bath_qubits = 0;  // d

    int model_qubits() const {
        return 1 + disc_bath_qubits + 2 * label_qubits + data_qubits +
               gen_bath_qubits;
    }
    int total_qubits() const { return model_qubits() + 1; }  // with Grad

    // model-space offsets
    int out_d() const { return 0; }
    int bath_d_begin() const { return 1; }
    int label_d_begin() const { return 1 + disc_bath_qubits; }
    int out_rg_begin() const { return label_d_begin() + label_qubits; }
    int label_rg_begin() const { return out_rg_begin() + data_qubits; }
    int bath_rg_begin() const { return label_rg_begin() + label_qubits; }

    /// Source block OutRG|LabelRG|BathRG (n + s + m qubits).
    int source_block_begin() const { return out_rg_begin(); }
    int source_block_qubits() const {
        return data_qubits + label_qubits + gen_bath_qubits;
    }
    /// Discriminator block OutD|BathD|LabelD|OutRG.
    int disc_block_qubits() const {
        return 1 + disc_bath_qubits + label_qubits + data_qubits;
    }

    void validate() const;
};

/// Labels as s-qubit basis patterns; z as m-qubit patterns with
/// probabilities (empty list = z fixed to |0...0>).
struct LabelSet {
    std::vector<std::uint64_t> labels;
    std::vector<std::pair<std::uint64_t, double>> z_values;

    void validate(const RegisterLayout& layout) const;
    /// z patterns with weights; {(0,1)} when no explicit policy is set.
    std::vector<std::pair<std::uint64_t, double>> z_distribution() const;
};

/// Fixed purified-unitary source on the local source block (qubit 0 = first
/// OutRG qubit). Carries no trainable parameters.
struct RealSource {
    ParamCircuit circuit;
};

/// CNOT from each LabelRG qubit onto the matching OutRG qubit: the label-copy
/// source whose outputs are |0><0| for label 0 and |1><1| for label 1.
RealSource label_copy_source(const RegisterLayout& layout);

enum class SourceKind { Real, Generated };

/**
 * @brief The adversarial model: source, generator, discriminator.
 *
 * Holds the current parameter vectors. The generator circuit lives on the
 * local source block; the discriminator on the leading OutD..OutRG block.
 * phi weights the real branch (cos^2 phi) against the generated branch
 * (sin^2 phi); pi/4 is the fair coin.
 */
class QuganModel {
  public:
    QuganModel(RegisterLayout layout, RealSource source, LabelSet labels,
               ParamCircuit generator, ParamCircuit discriminator,
               double phi = std::numbers::pi / 4);

    static QuganModel with_ansatz(RegisterLayout layout, RealSource source,
                                  LabelSet labels, const AnsatzSpec& gen_spec,
                                  const AnsatzSpec& disc_spec,
                                  double phi = std::numbers::pi / 4);

    const RegisterLayout& layout() const { return layout_; }
    const LabelSet& labels() const { return labels_; }
    double phi() const { return phi_; }

    int num_gen_params() const { return generator_.num_params(); }
    int num_disc_params() const { return discriminator_.num_params(); }

    const std::vector<double>& theta_g() const { return theta_g_; }
    const std::vector<double>& theta_d() const { return theta_d_; }
    void set_theta_g(std::vector<double> theta);
    void set_theta_d(std::vector<double> theta);

    /// Circuits embedded on the model space.
    const ParamCircuit& source_circuit() const { return source_embedded_; }
    const ParamCircuit& generator_circuit() const { return gen_embedded_; }
    const ParamCircuit& discriminator_circuit() const {
        return disc_embedded_;
    }

    const Observable& decision_observable() const { return decision_; }

  private:
    RegisterLayout layout_;
    LabelSet labels_;
    double phi_;
    ParamCircuit generator_;       // local source block
    ParamCircuit discriminator_;   // local leading block
    ParamCircuit source_embedded_;
    ParamCircuit gen_embedded_;
    ParamCircuit disc_embedded_;
    std::vector<double> theta_g_;
    std::vector<double> theta_d_;
    Observable decision_;
};

/// |0>_OutD |0...>_BathD |label>_LabelD |0...>_OutRG |label>_LabelRG
/// |z>_BathRG on the model space (the Grad qubit is prepared by gradient
/// circuits, not here).
StateVector initial_state(const QuganModel& model, std::uint64_t label,
                          std::uint64_t z = 0);

/// Applies R or G(theta_G) on the source block; the discriminator-side
/// registers are untouched. The real branch always uses z = |0...0>.
StateVector apply_source(const QuganModel& model, StateVector state,
                         SourceKind which);

/// Applies D(theta_D) on OutD|BathD|LabelD|OutRG; BathRG untouched.
StateVector apply_discriminator(const QuganModel& model, StateVector state);

/// <Z>_OutD for one label/branch after source and discriminator, averaged
/// over the z distribution for the generated branch.
double branch_decision_expectation(const QuganModel& model,
                                   std::uint64_t label, SourceKind which);

/// V(theta_D, theta_G) at the model's phi: 1/2 + (1/2L) sum_l (cos^2 phi
/// <Z>_DR - sin^2 phi <Z>_DG).
double cost_v(const QuganModel& model);

/// The fair-coin closed form 1/2 + (1/4L) sum_l tr((rho_DR - rho_DG) Z);
/// equals cost_v when phi = pi/4.
double cost_v_fair_coin(const QuganModel& model);

/// (V_DR, V_DG) with the phi weights folded in, so that
/// V = 1/2 + V_DR + V_DG is an identity; at phi = pi/4 these reduce to
/// (1/4L) sum tr(rho_DR Z) and -(1/4L) sum tr(rho_DG Z).
std::pair<double, double> cost_components(const QuganModel& model);

/// Exact gradient of V in theta_D via the commutator form; both source
/// branches of every label contribute.
std::vector<double> grad_discriminator(const QuganModel& model);

/// Exact gradient of V in theta_G.
std::vector<double> grad_generator(const QuganModel& model);

/// Same gradients evaluated by simulating the ancilla gradient circuits,
/// with the generated branch's sign realized by an X gate on OutD.
std::vector<double> grad_discriminator_via_circuits(const QuganModel& model);
std::vector<double> grad_generator_via_circuits(const QuganModel& model);

/// Shot-based gradient estimates; sub-seeds are drawn deterministically
/// from `seed`.
std::vector<double> grad_discriminator_shots(const QuganModel& model,
                                             long long shots,
                                             std::uint64_t seed);
std::vector<double> grad_generator_shots(const QuganModel& model,
                                         long long shots, std::uint64_t seed);

/// Cost components with every branch expectation estimated from Z-basis
/// counts on OutD instead of the exact trace.
std::pair<double, double> cost_components_shots(const QuganModel& model,
                                                long long shots,
                                                std::uint64_t seed);

/// Reduced source/generator outputs on OutRG for one label (generated side
/// mixed over the z distribution).
DensityOperator reduced_real_state(const QuganModel& model,
                                   std::uint64_t label);
DensityOperator reduced_generated_state(const QuganModel& model,
                                        std::uint64_t label);

/// tr(rho_R (log2 rho_R - log2 rho_G)) on OutRG; the generated spectrum is
/// floored at 1e-12 before the logarithm, so rank-deficient states yield a
/// large finite value instead of diverging.
double cross_entropy(const QuganModel& model, std::uint64_t label);

struct PurityReport {
    double overlap = 0;          // C = mean_l tr(rho_R_l rho_G_l)
    double half_overlap = 0;     // C/2, lower bound on Pr(success)
    double one_minus_half = 0;   // 1 - C/2, upper bound
    double r_min = 0;            // mean_l min eigenvalue of rho_R_l
    double source_purity = 0;    // mean_l tr(rho_R_l^2)
};

/// C(theta_G) averaged over labels.
double purity_overlap(const QuganModel& model);
PurityReport purity_report(const QuganModel& model);

}  // namespace qugan
