#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kindex_cli/report.hpp"

namespace kindex::cli {

struct GalleryEntry {
  std::string id;
  std::string module;
  std::string description;
  std::vector<std::string> args;  // command line handed to run()
  std::string field;              // JSON pointer into the report
  std::string expected;
};

const std::vector<GalleryEntry>& gallery_entries();

// Runs every entry (or those of one module) through the command dispatcher
// and compares the selected field with the expected text.
Json run_gallery(const std::optional<std::string>& module);

}  // namespace kindex::cli
