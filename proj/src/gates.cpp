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

#include "qugan/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qugan {

namespace {

constexpr double kPi = std::numbers::pi;
const cx kOne(1, 0);
const cx kI(0, 1);

Matrix two_by_two(cx a, cx b, cx c, cx d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

ParamGate ParamGate::bound(PauliString h, int param_index, double scale) {
    h.validate();
    if (param_index < 0) {
        throw std::invalid_argument("ParamGate: negative parameter index");
    }
    ParamGate g;
    g.generator = std::move(h);
    g.param_index = param_index;
    g.param_scale = scale;
    return g;
}

ParamGate ParamGate::with_angle(PauliString h, double angle) {
    h.validate();
    ParamGate g;
    g.generator = std::move(h);
    g.frozen_angle = angle;
    return g;
}

FixedGate FixedGate::h(int qubit) {
    return FixedGate{Kind::H, qubit, -1, {}};
}

FixedGate FixedGate::x(int qubit) {
    return FixedGate{Kind::X, qubit, -1, {}};
}

FixedGate FixedGate::z(int qubit) {
    return FixedGate{Kind::Z, qubit, -1, {}};
}

FixedGate FixedGate::w(int qubit) {
    return FixedGate{Kind::W, qubit, -1, {}};
}

FixedGate FixedGate::cnot(int control, int target) {
    if (control == target) {
        throw std::invalid_argument("cnot: control equals target");
    }
    return FixedGate{Kind::CNOT, target, control, {}};
}

FixedGate FixedGate::controlled_pauli(int control, PauliString p) {
    p.validate();
    if (p.factors.contains(control)) {
        throw std::invalid_argument(
            "controlled_pauli: control collides with a target");
    }
    return FixedGate{Kind::ControlledPauli, -1, control, std::move(p)};
}

void apply_gate(StateVector& state, const GateOp& gate,
                std::span<const double> params, bool adjoint) {
    if (const auto* pg = std::get_if<ParamGate>(&gate)) {
        const double theta = pg->angle(params);
        state.apply_pauli_rotation(pg->generator, adjoint ? -theta : theta);
        return;
    }
    const auto& fg = std::get<FixedGate>(gate);
    const int nq = state.num_qubits();
    switch (fg.kind) {
    case FixedGate::Kind::H:
        state.apply_matrix(hadamard_matrix(), std::vector<int>{fg.target});
        break;
    case FixedGate::Kind::X:
        state.apply_pauli(PauliString::single(Pauli::X, fg.target, nq));
        break;
    case FixedGate::Kind::Z:
        state.apply_pauli(PauliString::single(Pauli::Z, fg.target, nq));
        break;
    case FixedGate::Kind::W:
        // W = e^{-i pi X / 4}, an X rotation by pi/2
        state.apply_pauli_rotation(
            PauliString::single(Pauli::X, fg.target, nq),
            adjoint ? -kPi / 2 : kPi / 2);
        break;
    case FixedGate::Kind::CNOT:
        state.apply_cnot(fg.control, fg.target);
        break;
    case FixedGate::Kind::ControlledPauli:
        state.apply_controlled_pauli(fg.control, fg.pauli);
        break;
    }
}

std::vector<int> gate_targets(const GateOp& gate) {
    if (const auto* pg = std::get_if<ParamGate>(&gate)) {
        return pg->generator.support();
    }
    const auto& fg = std::get<FixedGate>(gate);
    switch (fg.kind) {
    case FixedGate::Kind::H:
    case FixedGate::Kind::X:
    case FixedGate::Kind::Z:
    case FixedGate::Kind::W:
        return {fg.target};
    case FixedGate::Kind::CNOT: {
        std::vector<int> t{fg.control, fg.target};
        if (t[0] > t[1]) {
            std::swap(t[0], t[1]);
        }
        return t;
    }
    case FixedGate::Kind::ControlledPauli: {
        std::vector<int> t = fg.pauli.support();
        t.push_back(fg.control);
        std::sort(t.begin(), t.end());
        return t;
    }
    }
    return {};
}

Matrix gate_matrix(const GateOp& gate, std::span<const double> params) {
    const std::vector<int> targets = gate_targets(gate);
    const int k = static_cast<int>(targets.size());
    const std::uint64_t sub_dim = 1ull << k;

    if (const auto* pg = std::get_if<ParamGate>(&gate)) {
        const double theta = pg->angle(params);
        const Matrix h = pg->generator.dense_matrix();
        return std::cos(theta / 2) * Matrix::Identity(sub_dim, sub_dim) -
               kI * std::sin(theta / 2) * h;
    }

    const auto& fg = std::get<FixedGate>(gate);
    switch (fg.kind) {
    case FixedGate::Kind::H:
        return hadamard_matrix();
    case FixedGate::Kind::X:
        return two_by_two(0, kOne, kOne, 0);
    case FixedGate::Kind::Z:
        return two_by_two(kOne, 0, 0, -kOne);
    case FixedGate::Kind::W:
        return w_gate_matrix();
    case FixedGate::Kind::CNOT:
    case FixedGate::Kind::ControlledPauli: {
        // Control and targets share the sorted layout: place blocks by the
        // control bit within the sub-index.
        int control_pos = 0;
        while (targets[control_pos] != fg.control) {
            ++control_pos;
        }
        const std::uint64_t control_bit = 1ull << (k - 1 - control_pos);
        Matrix payload;
        std::vector<int> payload_qubits;
        if (fg.kind == FixedGate::Kind::CNOT) {
            payload = two_by_two(0, kOne, kOne, 0);
            payload_qubits = {fg.target};
        } else {
            payload = fg.pauli.dense_matrix();
            payload_qubits = fg.pauli.support();
        }
        // Map payload sub-bits to positions in the sorted target list.
        std::vector<int> bit_of(payload_qubits.size());
        for (std::size_t t = 0; t < payload_qubits.size(); ++t) {
            int pos = 0;
            while (targets[pos] != payload_qubits[t]) {
                ++pos;
            }
            bit_of[t] = k - 1 - pos;
        }
        auto payload_index = [&](std::uint64_t full) {
            std::uint64_t s = 0;
            for (std::size_t t = 0; t < bit_of.size(); ++t) {
                if ((full >> bit_of[t]) & 1u) {
                    s |= 1ull << (bit_of.size() - 1 - t);
                }
            }
            return s;
        };
        std::uint64_t payload_mask = 0;
        for (int b : bit_of) {
            payload_mask |= 1ull << b;
        }
        Matrix m = Matrix::Zero(sub_dim, sub_dim);
        for (std::uint64_t col = 0; col < sub_dim; ++col) {
            if (!(col & control_bit)) {
                m(col, col) = kOne;
                continue;
            }
            const std::uint64_t pc = payload_index(col);
            for (std::uint64_t pr = 0; pr < (1ull << bit_of.size()); ++pr) {
                const cx v = payload(pr, pc);
                if (v == cx(0, 0)) {
                    continue;
                }
                std::uint64_t row = col & ~payload_mask;
                for (std::size_t t = 0; t < bit_of.size(); ++t) {
                    if ((pr >> (bit_of.size() - 1 - t)) & 1u) {
                        row |= 1ull << bit_of[t];
                    }
                }
                m(row, col) = v;
            }
        }
        return m;
    }
    }
    throw std::logic_error("gate_matrix: unhandled gate kind");
}

GateOp shifted_gate(const GateOp& gate, int offset, int new_scope) {
    if (const auto* pg = std::get_if<ParamGate>(&gate)) {
        ParamGate out = *pg;
        out.generator = pg->generator.shifted(offset, new_scope);
        return out;
    }
    FixedGate out = std::get<FixedGate>(gate);
    if (out.target >= 0) {
        out.target += offset;
    }
    if (out.control >= 0) {
        out.control += offset;
    }
    if (out.kind == FixedGate::Kind::ControlledPauli) {
        out.pauli = out.pauli.shifted(offset, new_scope);
    }
    return out;
}

GateOp frozen_gate(const GateOp& gate, std::span<const double> params) {
    if (const auto* pg = std::get_if<ParamGate>(&gate)) {
        if (!pg->frozen()) {
            return ParamGate::with_angle(pg->generator, pg->angle(params));
        }
    }
    return gate;
}

std::vector<GateOp> controlled(const GateOp& gate, int control) {
    for (int t : gate_targets(gate)) {
        if (t == control) {
            throw std::invalid_argument(
                "controlled: control collides with a gate target");
        }
    }

    // C-e^{-i theta h/2} = e^{-i (theta/2) h/2} * e^{+i (theta/2) Z_c h/2},
    // two commuting Pauli rotations.
    auto controlled_rotation = [control](const ParamGate& pg) {
        const PauliString zc_h = pg.generator.with_factor(control, Pauli::Z);
        std::vector<GateOp> seq;
        if (pg.frozen()) {
            seq.emplace_back(
                ParamGate::with_angle(pg.generator, pg.frozen_angle / 2));
            seq.emplace_back(
                ParamGate::with_angle(zc_h, -pg.frozen_angle / 2));
        } else {
            seq.emplace_back(ParamGate::bound(pg.generator, pg.param_index,
                                              pg.param_scale / 2));
            seq.emplace_back(
                ParamGate::bound(zc_h, pg.param_index, -pg.param_scale / 2));
        }
        return seq;
    };

    if (const auto* pg = std::get_if<ParamGate>(&gate)) {
        return controlled_rotation(*pg);
    }

    const auto& fg = std::get<FixedGate>(gate);
    const int scope = std::max(control, fg.target) + 1;
    switch (fg.kind) {
    case FixedGate::Kind::X:
        return {FixedGate::controlled_pauli(
            control, PauliString::single(Pauli::X, fg.target, scope))};
    case FixedGate::Kind::Z:
        return {FixedGate::controlled_pauli(
            control, PauliString::single(Pauli::Z, fg.target, scope))};
    case FixedGate::Kind::W: {
        // W is an X rotation by pi/2
        ParamGate rot = ParamGate::with_angle(
            PauliString::single(Pauli::X, fg.target, scope), kPi / 2);
        return controlled_rotation(rot);
    }
    case FixedGate::Kind::H: {
        // H = RY(pi/2) * Z, both phase-free
        std::vector<GateOp> seq{FixedGate::controlled_pauli(
            control, PauliString::single(Pauli::Z, fg.target, scope))};
        ParamGate rot = ParamGate::with_angle(
            PauliString::single(Pauli::Y, fg.target, scope), kPi / 2);
        for (auto& g : controlled_rotation(rot)) {
            seq.push_back(std::move(g));
        }
        return seq;
    }
    case FixedGate::Kind::CNOT:
    case FixedGate::Kind::ControlledPauli:
        throw std::invalid_argument(
            "controlled: multi-controlled gates are not supported");
    }
    throw std::logic_error("controlled: unhandled gate kind");
}

Matrix w_gate_matrix() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return two_by_two(cx(inv_sqrt2, 0), cx(0, -inv_sqrt2), cx(0, -inv_sqrt2),
                      cx(inv_sqrt2, 0));
}

Matrix hadamard_matrix() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return two_by_two(cx(inv_sqrt2, 0), cx(inv_sqrt2, 0), cx(inv_sqrt2, 0),
                      cx(-inv_sqrt2, 0));
}

}  // namespace qugan
