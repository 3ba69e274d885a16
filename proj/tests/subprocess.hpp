#pragma once

// Minimal subprocess capture for exercising the CLI binary. The command's
// stdout is collected through popen; the exit status comes from pclose.

#include <cstdio>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace subprocess {

struct Result {
  int exit_code = -1;
  std::string out;
};

inline Result run(const std::string& cmd) {
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace subprocess
