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
#include <functional>
#include <string>
#include <vector>

#include "qugan/model.hpp"

namespace qugan {

/**
 * @brief Learning-rate schedule and update cadence.
 *
 * chi_d decays geometrically from `chi_d_start` to `chi_d_end` over the
 * first `chi_d_decay_steps` steps (0-based index) and stays constant after;
 * the generator uses chi_g = chi_g_multiplier * chi_d and is updated once
 * every `gen_update_period` discriminator steps.
 */
struct TrainingSchedule {
    int total_steps = 10000;
    double chi_d_start = 10.0;
    double chi_d_end = 0.1;
    int chi_d_decay_steps = 4000;
    double chi_g_multiplier = 5.0;
    int gen_update_period = 100;

    double chi_d(int step_index) const;  // 0-based
    void validate() const;
};

struct TraceRecord {
    int step = 0;  // 1-based
    double chi_d = 0;
    double chi_g = 0;
    double v = 0;
    double v_dr = 0;
    double v_dg = 0;
    std::vector<double> cross_entropies;  // one per label, LabelSet order
    double grad_norm_d = 0;
    double grad_norm_g = 0;
    double wall_ms = 0;
};

struct TrainingTrace {
    std::vector<std::uint64_t> label_order;
    std::vector<TraceRecord> records;
    bool aborted = false;
    std::string diagnostic;
    std::vector<double> final_theta_d;
    std::vector<double> final_theta_g;
};

struct TrainOptions {
    long long shots = 0;  // 0 = exact evaluation
    /// Called after each recorded step (progress reporting).
    std::function<void(const TraceRecord&)> on_step;
};

/**
 * @brief Runs discriminator-ascent / generator-descent training.
 *
 * `seed` initializes both parameter vectors uniformly in [-pi, pi] (and
 * drives shot sampling in shot mode), so a run is fully reproducible. On a
 * non-finite cost or gradient the loop stops, marks the trace aborted and
 * stores a diagnostic instead of throwing.
 */
TrainingTrace train(QuganModel& model, const TrainingSchedule& schedule,
                    std::uint64_t seed, const TrainOptions& options = {});

}  // namespace qugan
