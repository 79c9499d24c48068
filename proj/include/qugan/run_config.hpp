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
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "qugan/model.hpp"
#include "qugan/training.hpp"

namespace qugan {

/// Raised on malformed or invalid configuration; the message names the
/// offending key or line.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * @brief Flat key=value experiment configuration.
 *
 * See README for the schema. `shots = 0` selects exact evaluation.
 */
struct RunConfig {
    int s = 1;
    int n = 1;
    int m = 0;
    int d = 0;
    std::vector<std::uint64_t> labels{0, 1};
    std::vector<std::pair<std::uint64_t, double>> z_values;  // empty = |0>
    std::string source = "label_copy";
    int tau_g = 2;
    int tau_d = 4;
    TrainingSchedule schedule;
    double phi = std::numbers::pi / 4;
    std::uint64_t seed = 0;
    long long shots = 0;
    std::string out = "trace.csv";

    /// Throws ConfigError on any invalid field (checked before simulating).
    void validate() const;

    /// The built-in two-label benchmark configuration.
    static RunConfig replication_defaults();

    static RunConfig parse(std::istream& in);
    static RunConfig parse_file(const std::string& path);

    /// Round-trips through parse().
    std::string serialize() const;
};

/// Builds the model a config describes.
QuganModel make_model(const RunConfig& config);

}  // namespace qugan
