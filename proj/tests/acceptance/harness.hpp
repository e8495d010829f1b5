// Copyright 2026 The qmelt Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared reporting for the acceptance binary. Each criterion collects
// sub-checks and prints one PASS/FAIL summary line.
#pragma once

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace qmelt::acceptance {

inline constexpr std::uint64_t kSeeds[] = {1, 2, 3};

class Verdict {
  public:
    Verdict(int criterion, std::string title)
        : criterion_{criterion}, title_{std::move(title)},
          start_{std::chrono::steady_clock::now()} {
        std::cout << "criterion " << criterion_ << ": " << title_ << '\n';
    }

    /// Records one sub-check; returns `ok` so callers can chain.
    bool check(bool ok, const std::string &detail) {
        std::cout << "  [" << (ok ? "ok" : "FAIL") << "] " << detail << '\n';
        failures_ += ok ? 0 : 1;
        ++checks_;
        return ok;
    }

    void info(const std::string &detail) { std::cout << "  [info] " << detail << '\n'; }

    [[nodiscard]] double elapsed_seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

    /// Prints the summary line and returns the process exit code.
    int finish() {
        const bool pass = failures_ == 0 && checks_ > 0;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion_ << ": " << title_
                  << " (" << checks_ - failures_ << "/" << checks_ << " checks, "
                  << fixed(elapsed_seconds(), 2) << " s)" << std::endl;
        return pass ? 0 : 1;
    }

    static std::string fixed(double value, int digits) {
        std::ostringstream out;
        out << std::fixed << std::setprecision(digits) << value;
        return out.str();
    }

    static std::string sci(double value, int digits = 3) {
        std::ostringstream out;
        out << std::scientific << std::setprecision(digits) << value;
        return out.str();
    }

  private:
    int criterion_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
    int checks_{0};
    int failures_{0};
};

int criterion_state_engine();
int criterion_parameter_counts();
int criterion_encoder_uniqueness();
int criterion_reduction();
int criterion_expressibility_orderings();
int criterion_haar_self_test();
int criterion_optimizer();
int criterion_backprop();
int criterion_pipeline();
int criterion_determinism();

} // namespace qmelt::acceptance
