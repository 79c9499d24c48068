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

#include "qugan/training.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qugan {

namespace {

double norm2(const std::vector<double>& v) {
    double acc = 0;
    for (double x : v) {
        acc += x * x;
    }
    return std::sqrt(acc);
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            return false;
        }
    }
    return true;
}

std::vector<double> random_angles(int count, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-std::numbers::pi,
                                                std::numbers::pi);
    std::vector<double> out(count);
    for (double& x : out) {
        x = dist(rng);
    }
    return out;
}

}  // namespace

double TrainingSchedule::chi_d(int step_index) const {
    if (step_index >= chi_d_decay_steps) {
        return chi_d_end;
    }
    const double ratio = chi_d_end / chi_d_start;
    return chi_d_start *
           std::pow(ratio, static_cast<double>(step_index) /
                               static_cast<double>(chi_d_decay_steps));
}

void TrainingSchedule::validate() const {
    if (total_steps < 0) {
        throw std::invalid_argument("TrainingSchedule: negative step count");
    }
    if (chi_d_start <= 0 || chi_d_end <= 0) {
        throw std::invalid_argument(
            "TrainingSchedule: learning rates must be positive");
    }
    if (chi_d_decay_steps < 1) {
        throw std::invalid_argument(
            "TrainingSchedule: decay span must be positive");
    }
    if (gen_update_period < 1) {
        throw std::invalid_argument(
            "TrainingSchedule: generator period must be positive");
    }
}

TrainingTrace train(QuganModel& model, const TrainingSchedule& schedule,
                    std::uint64_t seed, const TrainOptions& options) {
    schedule.validate();
    std::mt19937_64 rng(seed);

    model.set_theta_d(random_angles(model.num_disc_params(), rng));
    model.set_theta_g(random_angles(model.num_gen_params(), rng));

    TrainingTrace trace;
    trace.label_order = model.labels().labels;
    trace.records.reserve(schedule.total_steps);

    const bool shot_mode = options.shots > 0;

    for (int k = 0; k < schedule.total_steps; ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        const double chi_d = schedule.chi_d(k);
        const double chi_g = schedule.chi_g_multiplier * chi_d;

        TraceRecord rec;
        rec.step = k + 1;
        rec.chi_d = chi_d;
        rec.chi_g = chi_g;
        const auto [v_dr, v_dg] =
            shot_mode ? cost_components_shots(model, options.shots, rng())
                      : cost_components(model);
        rec.v_dr = v_dr;
        rec.v_dg = v_dg;
        rec.v = 0.5 + v_dr + v_dg;
        for (std::uint64_t label : trace.label_order) {
            rec.cross_entropies.push_back(cross_entropy(model, label));
        }

        const std::vector<double> g_d =
            shot_mode ? grad_discriminator_shots(model, options.shots, rng())
                      : grad_discriminator(model);
        const std::vector<double> g_g =
            shot_mode ? grad_generator_shots(model, options.shots, rng())
                      : grad_generator(model);
        rec.grad_norm_d = norm2(g_d);
        rec.grad_norm_g = norm2(g_g);

        const bool finite =
            std::isfinite(rec.v) && std::isfinite(rec.v_dr) &&
            std::isfinite(rec.v_dg) && all_finite(rec.cross_entropies) &&
            all_finite(g_d) && all_finite(g_g);
        if (!finite) {
            trace.aborted = true;
            trace.diagnostic = "non-finite cost or gradient at step " +
                               std::to_string(rec.step);
            rec.wall_ms =
                std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
            trace.records.push_back(std::move(rec));
            break;
        }

        // ascent for D, descent for G
        std::vector<double> theta_d = model.theta_d();
        for (std::size_t i = 0; i < theta_d.size(); ++i) {
            theta_d[i] += chi_d * g_d[i];
        }
        model.set_theta_d(std::move(theta_d));

        if (rec.step % schedule.gen_update_period == 0) {
            std::vector<double> theta_g = model.theta_g();
            for (std::size_t i = 0; i < theta_g.size(); ++i) {
                theta_g[i] -= chi_g * g_g[i];
            }
            model.set_theta_g(std::move(theta_g));
        }

        rec.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        trace.records.push_back(rec);
        if (options.on_step) {
            options.on_step(trace.records.back());
        }
    }

    trace.final_theta_d = model.theta_d();
    trace.final_theta_g = model.theta_g();
    return trace;
}

}  // namespace qugan
