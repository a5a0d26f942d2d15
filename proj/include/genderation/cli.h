//
// Copyright 2026 The Genderation Authors
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
//

#ifndef GENDERATION_CLI_H_
#define GENDERATION_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace genderation {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

// Runs one subcommand (audit, cda, bin, train, generate, eval, demo).
// `args` excludes the program name. Machine output goes to `out`,
// diagnostics to `err`. Returns 0 on success, 1 on usage or validation
// errors, 2 on I/O errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace genderation

#endif  // GENDERATION_CLI_H_
