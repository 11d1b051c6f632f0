// Copyright 2026 The gaussdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAUSSDISC_CLI_H
#define GAUSSDISC_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace gaussdisc {

enum class ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kIo = 3,
    kConvergence = 4,
    kInvariant = 5,
};

/// Largest mu accepted by oracle-check; the Fock truncation grows too fast above it.
inline constexpr double kOracleMuMax = 2.5;
inline constexpr double kOracleOverlapTolerance = 1e-3;
inline constexpr double kOracleFidelityTolerance = 1e-4;

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace gaussdisc

#endif
