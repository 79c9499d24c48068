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

#include "qugan/circuit_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qugan {

namespace {

[[noreturn]] void fail(int line, const std::string& message) {
    throw std::runtime_error("circuit file, line " + std::to_string(line) +
                             ": " + message);
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    return s;
}

int parse_int(const std::string& tok, int line, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) {
            fail(line, "bad " + what + " '" + tok + "'");
        }
        return v;
    } catch (const std::exception&) {
        fail(line, "bad " + what + " '" + tok + "'");
    }
}

// p<k> -> parameter index; bare number -> frozen angle
struct AngleSpec {
    int param_index = -1;
    double angle = 0.0;
};

AngleSpec parse_angle(const std::string& tok, int line) {
    AngleSpec spec;
    if (!tok.empty() && (tok[0] == 'p' || tok[0] == 'P')) {
        spec.param_index = parse_int(tok.substr(1), line, "parameter index");
        return spec;
    }
    try {
        std::size_t used = 0;
        spec.angle = std::stod(tok, &used);
        if (used != tok.size()) {
            fail(line, "bad angle '" + tok + "'");
        }
    } catch (const std::exception&) {
        fail(line, "bad angle or parameter '" + tok + "'");
    }
    return spec;
}

std::optional<std::pair<int, Pauli>> parse_pauli_factor(
    const std::string& tok, int line) {
    if (tok.size() < 2) {
        return std::nullopt;
    }
    Pauli p;
    switch (std::toupper(static_cast<unsigned char>(tok[0]))) {
    case 'X':
        p = Pauli::X;
        break;
    case 'Y':
        p = Pauli::Y;
        break;
    case 'Z':
        p = Pauli::Z;
        break;
    default:
        return std::nullopt;
    }
    return std::make_pair(parse_int(tok.substr(1), line, "qubit"), p);
}

void add_rotation_gate(ParamCircuit& circuit, PauliString h,
                       const AngleSpec& spec) {
    if (spec.param_index >= 0) {
        circuit.add_rotation(std::move(h), spec.param_index);
    } else {
        circuit.add_frozen_rotation(std::move(h), spec.angle);
    }
}

}  // namespace

CircuitFile parse_circuit_file(std::istream& in) {
    int num_qubits = -1;
    int num_params = -1;
    std::optional<ParamCircuit> circuit;
    std::optional<PauliString> obs;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.resize(hash);
        }
        std::istringstream line(raw);
        std::vector<std::string> tokens;
        for (std::string tok; line >> tok;) {
            tokens.push_back(tok);
        }
        if (tokens.empty()) {
            continue;
        }
        const std::string keyword = upper(tokens[0]);

        if (keyword == "QUBITS" || keyword == "PARAMS") {
            if (tokens.size() != 2) {
                fail(line_no, keyword + " takes one integer");
            }
            const int v = parse_int(tokens[1], line_no, "count");
            if (v < 0) {
                fail(line_no, keyword + " must be non-negative");
            }
            (keyword == "QUBITS" ? num_qubits : num_params) = v;
            continue;
        }

        if (keyword == "OBS") {
            if (num_qubits < 0) {
                fail(line_no, "OBS before QUBITS");
            }
            std::map<int, Pauli> factors;
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                const auto f = parse_pauli_factor(tokens[t], line_no);
                if (!f) {
                    fail(line_no, "bad Pauli factor '" + tokens[t] + "'");
                }
                factors[f->first] = f->second;
            }
            if (factors.empty()) {
                fail(line_no, "OBS needs at least one Pauli factor");
            }
            obs = PauliString(std::move(factors), num_qubits);
            continue;
        }

        if (keyword != "GATE") {
            fail(line_no, "unknown keyword '" + tokens[0] + "'");
        }
        if (num_qubits < 0 || num_params < 0) {
            fail(line_no, "GATE before QUBITS/PARAMS");
        }
        if (!circuit) {
            circuit.emplace(num_qubits, num_params);
        }
        if (tokens.size() < 3) {
            fail(line_no, "GATE needs a kind and arguments");
        }
        const std::string kind = upper(tokens[1]);
        try {
            if (kind == "RX" || kind == "RY" || kind == "RZ") {
                if (tokens.size() != 4) {
                    fail(line_no, kind + " takes a qubit and an angle");
                }
                const int q = parse_int(tokens[2], line_no, "qubit");
                const Pauli p = kind == "RX"   ? Pauli::X
                                : kind == "RY" ? Pauli::Y
                                               : Pauli::Z;
                add_rotation_gate(*circuit,
                                  PauliString::single(p, q, num_qubits),
                                  parse_angle(tokens[3], line_no));
            } else if (kind == "RZZ") {
                if (tokens.size() != 5) {
                    fail(line_no, "RZZ takes two qubits and an angle");
                }
                const int a = parse_int(tokens[2], line_no, "qubit");
                const int b = parse_int(tokens[3], line_no, "qubit");
                add_rotation_gate(
                    *circuit,
                    PauliString({{a, Pauli::Z}, {b, Pauli::Z}}, num_qubits),
                    parse_angle(tokens[4], line_no));
            } else if (kind == "R") {
                if (tokens.size() < 4) {
                    fail(line_no, "R takes Pauli factors and an angle");
                }
                std::map<int, Pauli> factors;
                for (std::size_t t = 2; t + 1 < tokens.size(); ++t) {
                    const auto f = parse_pauli_factor(tokens[t], line_no);
                    if (!f) {
                        fail(line_no, "bad Pauli factor '" + tokens[t] + "'");
                    }
                    factors[f->first] = f->second;
                }
                add_rotation_gate(*circuit,
                                  PauliString(std::move(factors), num_qubits),
                                  parse_angle(tokens.back(), line_no));
            } else if (kind == "H" || kind == "X" || kind == "Z" ||
                       kind == "W") {
                if (tokens.size() != 3) {
                    fail(line_no, kind + " takes one qubit");
                }
                const int q = parse_int(tokens[2], line_no, "qubit");
                if (kind == "H") {
                    circuit->add_fixed(FixedGate::h(q));
                } else if (kind == "X") {
                    circuit->add_fixed(FixedGate::x(q));
                } else if (kind == "Z") {
                    circuit->add_fixed(FixedGate::z(q));
                } else {
                    circuit->add_fixed(FixedGate::w(q));
                }
            } else if (kind == "CNOT") {
                if (tokens.size() != 4) {
                    fail(line_no, "CNOT takes control and target");
                }
                circuit->add_fixed(
                    FixedGate::cnot(parse_int(tokens[2], line_no, "qubit"),
                                    parse_int(tokens[3], line_no, "qubit")));
            } else {
                fail(line_no, "unknown gate kind '" + tokens[1] + "'");
            }
        } catch (const std::invalid_argument& e) {
            fail(line_no, e.what());
        }
    }

    if (num_qubits < 0 || num_params < 0) {
        throw std::runtime_error(
            "circuit file: missing QUBITS or PARAMS header");
    }
    if (!circuit) {
        circuit.emplace(num_qubits, num_params);
    }
    try {
        circuit->validate();
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("circuit file: ") + e.what());
    }

    CircuitFile out{
        std::move(*circuit),
        obs ? Observable::pauli(*obs) : Observable::pauli_z(0),
    };
    return out;
}

CircuitFile load_circuit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open circuit file '" + path + "'");
    }
    return parse_circuit_file(in);
}

std::string serialize_circuit(const ParamCircuit& circuit,
                              const Observable& observable) {
    std::ostringstream out;
    out << "QUBITS " << circuit.num_qubits() << "\n";
    out << "PARAMS " << circuit.num_params() << "\n";
    for (const GateOp& g : circuit.gates()) {
        if (const auto* pg = std::get_if<ParamGate>(&g)) {
            out << "GATE R";
            for (const auto& [qubit, factor] : pg->generator.factors) {
                out << ' ' << pauli_char(factor) << qubit;
            }
            if (pg->frozen()) {
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.17g", pg->frozen_angle);
                out << ' ' << buf;
            } else {
                if (pg->param_scale != 1.0) {
                    throw std::invalid_argument(
                        "serialize_circuit: scaled parameter bindings have "
                        "no line form");
                }
                out << " p" << pg->param_index;
            }
            out << "\n";
            continue;
        }
        const auto& fg = std::get<FixedGate>(g);
        switch (fg.kind) {
        case FixedGate::Kind::H:
            out << "GATE H " << fg.target << "\n";
            break;
        case FixedGate::Kind::X:
            out << "GATE X " << fg.target << "\n";
            break;
        case FixedGate::Kind::Z:
            out << "GATE Z " << fg.target << "\n";
            break;
        case FixedGate::Kind::W:
            out << "GATE W " << fg.target << "\n";
            break;
        case FixedGate::Kind::CNOT:
            out << "GATE CNOT " << fg.control << ' ' << fg.target << "\n";
            break;
        case FixedGate::Kind::ControlledPauli:
            throw std::invalid_argument(
                "serialize_circuit: controlled Pauli gates have no line "
                "form");
        }
    }
    if (observable.pauli_string()) {
        out << "OBS";
        for (const auto& [qubit, factor] : observable.pauli_string()->factors) {
            out << ' ' << pauli_char(factor) << qubit;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qugan
