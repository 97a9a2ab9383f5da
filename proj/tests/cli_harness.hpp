#pragma once

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace cli_harness {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with the given arguments through the shell and captures
// stdout (stderr folded in when combine_stderr is set).
inline CommandResult run(const std::string& args, bool combine_stderr = true) {
  const std::string command = std::string(BETAPEND_CLI_PATH) + " " + args +
                              (combine_stderr ? " 2>&1" : " 2>/dev/null");
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

inline std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (const char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (const char c : line) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(current);
  return fields;
}

}  // namespace cli_harness
