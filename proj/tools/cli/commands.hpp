// Copyright 2026 The tnps Authors
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

#ifndef TNPS_CLI_COMMANDS_HPP_
#define TNPS_CLI_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace tnps::cli {

enum ExitCode : int {
  kOk = 0,
  kUnexpected = 1,
  kIoError = 2,
  kInvalid = 3,
  kSearchFailed = 4,
};

// Commands take a fully merged configuration. Machine-readable output goes
// to `out`, progress and diagnostics to `err`. Errors are thrown; run()
// maps them to exit codes.
int cmd_search(Json cfg, std::ostream& out, std::ostream& err);
int cmd_count(const Json& cfg, std::ostream& out, std::ostream& err);
int cmd_synth(const Json& cfg, std::ostream& out, std::ostream& err);
int cmd_fit(const Json& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const Json& cfg, bool dry_run, std::ostream& out, std::ostream& err);

// Full command line, argv[0] included.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tnps::cli

#endif  // TNPS_CLI_COMMANDS_HPP_
