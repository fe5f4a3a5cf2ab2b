#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kindex_cli/report.hpp"

namespace kindex::cli {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitParse = 3;

struct Outcome {
  Json report;
  int exit_code = kExitOk;
  std::string format = "table";
  std::optional<std::string> output;
  // Set for --help: the text to print instead of a report.
  std::optional<std::string> help;
};

// Parses and executes one command line (without the program name).
Outcome run(const std::vector<std::string>& args);

// Renders the outcome in its requested format.
std::string render(const Outcome& o);

}  // namespace kindex::cli
