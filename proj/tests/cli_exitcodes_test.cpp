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
//
// Exercises the binary's exit-code contract: 0 success, 1 input error,
// 2 numerical failure. Invoked with the CLI path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

int failures = 0;

int run(const std::string& command) {
    const int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

void expect_exit(const std::string& command, int expected) {
    const int got = run(command);
    if (got != expected) {
        std::cerr << "FAIL: `" << command << "` exited " << got
                  << ", expected " << expected << "\n";
        ++failures;
    } else {
        std::cout << "ok: `" << command << "` -> " << got << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: cli_exitcodes_test <path-to-qugan-binary>\n";
        return 1;
    }
    const std::string cli = argv[1];
    const auto tmp = std::filesystem::temp_directory_path() /
                     ("qugansim_exitcodes_" + std::to_string(::getpid()));
    std::filesystem::create_directories(tmp);

    expect_exit(cli + " grad-check --random --seed 2 > /dev/null 2>&1", 0);
    expect_exit(cli + " hess-check --random --seed 2 > /dev/null 2>&1", 0);
    expect_exit(cli + " hess-check --tolerance 0 > /dev/null 2>&1", 1);
    expect_exit(cli + " grad-check /does/not/exist > /dev/null 2>&1", 1);
    expect_exit(cli + " run /does/not/exist.cfg > /dev/null 2>&1", 1);
    expect_exit(cli + " no-such-command > /dev/null 2>&1", 1);
    expect_exit(cli + " replicate-paper --print-config > /dev/null 2>&1", 0);

    // config error: invalid phi
    const auto bad_cfg = tmp / "bad.cfg";
    {
        std::ofstream f(bad_cfg);
        f << "phi = 3.0\n";
    }
    expect_exit(cli + " run " + bad_cfg.string() + " > /dev/null 2>&1", 1);

    // short healthy run
    const auto good_cfg = tmp / "good.cfg";
    {
        std::ofstream f(good_cfg);
        f << "steps = 10\nseed = 3\nout = " << (tmp / "t.csv").string()
          << "\n";
    }
    expect_exit(cli + " run " + good_cfg.string() + " > /dev/null 2>&1", 0);

    // numerical failure: an unbounded generator rate overflows theta_G to
    // inf/nan within two steps
    const auto nan_cfg = tmp / "nan.cfg";
    {
        std::ofstream f(nan_cfg);
        f << "steps = 5\nseed = 3\ngen_period = 1\n";
        f << "chi_d_start = 1e308\nchi_d_end = 1e308\n";
        f << "chi_d_decay_steps = 1\nchi_g_multiplier = 1e308\n";
        f << "out = " << (tmp / "nan.csv").string() << "\n";
    }
    expect_exit(cli + " run " + nan_cfg.string() + " > /dev/null 2>&1", 2);

    std::filesystem::remove_all(tmp);
    if (failures == 0) {
        std::cout << "all exit-code checks passed\n";
        return 0;
    }
    return 1;
}
