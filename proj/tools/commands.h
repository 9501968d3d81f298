// Copyright 2026 The cyberins Authors
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

#ifndef CYBERINS_TOOLS_COMMANDS_H_
#define CYBERINS_TOOLS_COMMANDS_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cli_config.h"

namespace cyberins::cli {

// Each command writes its files under `out_dir` and a one-line summary to
// `log`. Errors surface as ScenarioError / DomainError (config), IoError, or
// a kExitMismatch return value.
int RunPayoff(const ScenarioConfig& config, const std::filesystem::path& out_dir,
              std::ostream& log);
int RunEquilibrium(const ScenarioConfig& config,
                   const std::filesystem::path& out_dir, std::ostream& log);
int RunRegions(const ScenarioConfig& config,
               const std::filesystem::path& out_dir, std::ostream& log);
int RunSimulate(const ScenarioConfig& config,
                const std::filesystem::path& out_dir, std::ostream& log);
int RunReproduceFigures(const ScenarioConfig& config,
                        const std::filesystem::path& out_dir,
                        std::ostream& log);

// Parses argv, dispatches and maps errors to exit codes.
int RunCli(int argc, char** argv);

}  // namespace cyberins::cli

#endif  // CYBERINS_TOOLS_COMMANDS_H_
