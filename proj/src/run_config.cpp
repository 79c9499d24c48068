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

#include "qugan/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qugan {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

long long to_int(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument("");
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for '" + key + "': " + value);
    }
}

double to_double(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument("");
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad number for '" + key + "': " + value);
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string item; std::getline(in, item, sep);) {
        out.push_back(trim(item));
    }
    return out;
}

}  // namespace

void RunConfig::validate() const {
    auto require = [](bool ok, const std::string& message) {
        if (!ok) {
            throw ConfigError("config: " + message);
        }
    };
    require(s >= 1, "s must be >= 1");
    require(n >= 1, "n must be >= 1");
    require(m >= 0, "m must be >= 0");
    require(d >= 0, "d must be >= 0");
    require(tau_g >= 1, "tau_g must be >= 1");
    require(tau_d >= 1, "tau_d must be >= 1");
    require(phi >= 0 && phi <= std::numbers::pi / 2,
            "phi must lie in [0, pi/2]");
    require(shots >= 0, "shots must be >= 0");
    require(!out.empty(), "out must name a file");
    require(source == "label_copy", "unknown source '" + source + "'");
    try {
        schedule.validate();
        RegisterLayout layout{s, n, m, d};
        layout.validate();
        LabelSet label_set{labels, z_values};
        label_set.validate(layout);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

RunConfig RunConfig::replication_defaults() {
    RunConfig config;
    config.s = 1;
    config.n = 1;
    config.m = 0;
    config.d = 0;
    config.labels = {0, 1};
    config.tau_g = 2;
    config.tau_d = 4;
    config.schedule = TrainingSchedule{};
    config.phi = std::numbers::pi / 4;
    config.seed = 0;
    config.shots = 0;
    config.out = "trace.csv";
    return config;
}

RunConfig RunConfig::parse(std::istream& in) {
    RunConfig config;
    config.labels.clear();
    bool labels_seen = false;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.resize(hash);
        }
        const std::string line = trim(raw);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": empty key or value");
        }

        if (key == "s") {
            config.s = static_cast<int>(to_int(value, key));
        } else if (key == "n") {
            config.n = static_cast<int>(to_int(value, key));
        } else if (key == "m") {
            config.m = static_cast<int>(to_int(value, key));
        } else if (key == "d") {
            config.d = static_cast<int>(to_int(value, key));
        } else if (key == "labels") {
            labels_seen = true;
            for (const std::string& item : split(value, ',')) {
                config.labels.push_back(
                    static_cast<std::uint64_t>(to_int(item, key)));
            }
        } else if (key == "z_list") {
            for (const std::string& item : split(value, ',')) {
                const auto colon = item.find(':');
                if (colon == std::string::npos) {
                    throw ConfigError(
                        "config: z_list entries are pattern:probability");
                }
                config.z_values.emplace_back(
                    static_cast<std::uint64_t>(
                        to_int(trim(item.substr(0, colon)), key)),
                    to_double(trim(item.substr(colon + 1)), key));
            }
        } else if (key == "source") {
            config.source = value;
        } else if (key == "tau_g") {
            config.tau_g = static_cast<int>(to_int(value, key));
        } else if (key == "tau_d") {
            config.tau_d = static_cast<int>(to_int(value, key));
        } else if (key == "steps") {
            config.schedule.total_steps = static_cast<int>(to_int(value, key));
        } else if (key == "chi_d_start") {
            config.schedule.chi_d_start = to_double(value, key);
        } else if (key == "chi_d_end") {
            config.schedule.chi_d_end = to_double(value, key);
        } else if (key == "chi_d_decay_steps") {
            config.schedule.chi_d_decay_steps =
                static_cast<int>(to_int(value, key));
        } else if (key == "chi_g_multiplier") {
            config.schedule.chi_g_multiplier = to_double(value, key);
        } else if (key == "gen_period") {
            config.schedule.gen_update_period =
                static_cast<int>(to_int(value, key));
        } else if (key == "phi") {
            config.phi = to_double(value, key);
        } else if (key == "seed") {
            config.seed = static_cast<std::uint64_t>(to_int(value, key));
        } else if (key == "shots") {
            config.shots = to_int(value, key);
        } else if (key == "out") {
            config.out = value;
        } else {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": unknown key '" + key + "'");
        }
    }
    if (!labels_seen) {
        config.labels = {0, 1};
    }
    config.validate();
    return config;
}

RunConfig RunConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config: cannot open '" + path + "'");
    }
    return parse(in);
}

std::string RunConfig::serialize() const {
    std::ostringstream out_stream;
    out_stream << "s = " << s << "\n";
    out_stream << "n = " << n << "\n";
    out_stream << "m = " << m << "\n";
    out_stream << "d = " << d << "\n";
    out_stream << "labels = ";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out_stream << (i ? "," : "") << labels[i];
    }
    out_stream << "\n";
    if (!z_values.empty()) {
        out_stream << "z_list = ";
        for (std::size_t i = 0; i < z_values.size(); ++i) {
            out_stream << (i ? "," : "") << z_values[i].first << ":"
                       << fmt(z_values[i].second);
        }
        out_stream << "\n";
    }
    out_stream << "source = " << source << "\n";
    out_stream << "tau_g = " << tau_g << "\n";
    out_stream << "tau_d = " << tau_d << "\n";
    out_stream << "steps = " << schedule.total_steps << "\n";
    out_stream << "chi_d_start = " << fmt(schedule.chi_d_start) << "\n";
    out_stream << "chi_d_end = " << fmt(schedule.chi_d_end) << "\n";
    out_stream << "chi_d_decay_steps = " << schedule.chi_d_decay_steps
               << "\n";
    out_stream << "chi_g_multiplier = " << fmt(schedule.chi_g_multiplier)
               << "\n";
    out_stream << "gen_period = " << schedule.gen_update_period << "\n";
    out_stream << "phi = " << fmt(phi) << "\n";
    out_stream << "seed = " << seed << "\n";
    out_stream << "shots = " << shots << "\n";
    out_stream << "out = " << out << "\n";
    return out_stream.str();
}

QuganModel make_model(const RunConfig& config) {
    config.validate();
    const RegisterLayout layout{config.s, config.n, config.m, config.d};
    const LabelSet labels{config.labels, config.z_values};
    const AnsatzSpec gen_spec{layout.source_block_qubits(), config.tau_g};
    const AnsatzSpec disc_spec{layout.disc_block_qubits(), config.tau_d};
    return QuganModel::with_ansatz(layout, label_copy_source(layout), labels,
                                   gen_spec, disc_spec, config.phi);
}

}  // namespace qugan
