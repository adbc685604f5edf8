#pragma once

// Command implementations behind the `divscore` executable. Argument parsing
// lives in tools/divscore.cpp; everything here works on a filled RunConfig so
// tests can drive commands directly.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "divscore/diversity.hpp"
#include "divscore/report_io.hpp"

namespace divscore::cli {

enum class Command { profile, score, cwals, correlate, families, table };

enum class Level { morph, syn };

struct RunConfig {
  Command command = Command::profile;
  Level level = Level::morph;

  std::optional<std::filesystem::path> registry;
  std::optional<std::filesystem::path> names;  // name,iso lookup for list files
  std::vector<std::filesystem::path> reference;
  std::vector<std::filesystem::path> dataset;

  double bin_width = 1.0;
  std::size_t sample_target = 10000;
  std::uint64_t seed = 0;
  report_io::Format format = report_io::Format::json;
  bool drop_incomplete = false;
  diversity::SynDims syn_dims = diversity::SynDims::per_feature;

  std::optional<std::filesystem::path> corpus;       // profile, table
  std::optional<std::filesystem::path> morphology;   // cwals
  std::optional<std::filesystem::path> spec;         // cwals, score/table with ordinal data
  std::optional<std::filesystem::path> syn_matrix;   // table
  std::vector<std::string> columns;                  // correlate: "path:column" x2
};

/// Runs one command. Machine-readable output goes to `out`, diagnostics to
/// `err`. Returns the process exit code: 0 when every item succeeded, 1 when
/// some items failed, 2 on a fatal error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace divscore::cli
