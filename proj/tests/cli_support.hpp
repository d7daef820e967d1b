#pragma once

#include "dmt/cli.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dmt::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary and captures standard output.
inline std::string run_binary(const std::string& args) {
  const std::string cmd = std::string(DMT_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string text;
  if (FILE* p = popen(cmd.c_str(), "r")) {
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) text.append(buf.data(), n);
    pclose(p);
  }
  return text;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

// Value of `column` in CSV data row `row` (0 = first data row).
inline std::string csv_field(const std::string& csv, const std::string& column, int row = 0) {
  const auto lines = split(csv, '\n');
  if (lines.size() < static_cast<std::size_t>(row) + 2) return {};
  const auto head = split(lines[0], ',');
  const auto cells = split(lines[row + 1], ',');
  for (std::size_t i = 0; i < head.size() && i < cells.size(); ++i)
    if (head[i] == column) return cells[i];
  return {};
}
