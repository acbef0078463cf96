// Copyright 2026 The matchcf Authors
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

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace matchcf_test {

struct RunResult {
  int exit_code;
  std::string out;
};

// Runs the command line through the shell, capturing stdout. stderr is left
// attached to the test runner's stderr so failures stay diagnosable.
inline RunResult run_command(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  if (status < 0) throw std::runtime_error("pclose failed for: " + command);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : 128;
  return RunResult{code, std::move(out)};
}

inline std::string cli_path() { return MATCHCF_CLI_PATH; }
inline std::string data_file(const std::string& name) {
  return std::string(MATCHCF_DATA_DIR) + "/" + name;
}

}  // namespace matchcf_test
