// Copyright 2026 The Orthodyn Authors. All Rights Reserved.
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

// The orthodyn command line. Exit status 0 = every check passed,
// 1 = a verification failure (witnesses printed), 2 = input or usage error.

#ifndef ORTHODYN_CLI_HPP_
#define ORTHODYN_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace orthodyn {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthodyn

#endif  // ORTHODYN_CLI_HPP_
