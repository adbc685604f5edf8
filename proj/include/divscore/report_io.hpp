#pragma once

// Serialisation of reports, profile tables and score tables.
//
// JSON report schema (schema_version 1):
//   { "schema_version": 1, "score": "jmm_morph", "value": 0.5,
//     "normalization_c": 1.6667 | null, "scaled_side": "dataset",
//     "dataset_size": 6, "reference_size": 10, "bin_width": 1 | null,
//     "per_bin": [ {"bin": "[3,4)", "dataset": .., "reference": .., "min": .., "max": ..} ],
//     "gap": { "surplus": [ {"bin": .., "excess": ..} ],
//              "deficit": [ {"bin": .., "shortfall": .., "examples": ["ame", ..]} ] } | null,
//     "notes": [ .. ] }

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divscore/analysis.hpp"
#include "divscore/core.hpp"

namespace divscore::report_io {

inline constexpr int kSchemaVersion = 1;

enum class Format { json, csv, svg };

std::string_view to_string(Format f);
std::optional<Format> parse_format(std::string_view text);

/// json: the full report. csv: per-bin table, header `bin,dataset,reference,min,max`.
/// svg: overlaid histogram of both series with the intersection shaded.
std::string serialize_report(const DiversityReport& report, Format format);

DiversityReport parse_report_json(std::string_view text);

/// JSON for a comparison: {"schema_version", "level", "jmm", "ti_dataset", "ti_reference"}.
/// csv and svg render the jmm report only.
std::string serialize_comparison(const analysis::Comparison& cmp, std::string_view level,
                                 Format format);

// --- profile tables --------------------------------------------------------

/// Columns iso,mwl,ttr,entropy,token_count,offset,seed (csv) or an array of
/// objects with the same keys (json).
std::string format_profiles(const std::vector<TextProfile>& profiles, Format format);

/// Accepts either format; JSON is detected by its first non-blank character.
std::vector<TextProfile> parse_profiles(std::string_view text);

// --- score tables ----------------------------------------------------------

/// One row of a data-set-by-score matrix. The reference row carries only
/// its typological indices.
struct ScoreRow {
  std::string dataset;
  std::size_t languages = 0;
  std::optional<std::size_t> families;
  std::optional<double> ti_syn;
  std::optional<double> jmm_syn;
  std::optional<double> ti_morph;
  std::optional<double> jmm_morph;

  bool operator==(const ScoreRow&) const = default;
};

/// csv header `dataset,languages,families,ti_syn,jmm_syn,ti_morph,jmm_morph`,
/// absent values left blank; json is {"schema_version", "rows": [...]} with nulls.
std::string format_score_table(const std::vector<ScoreRow>& rows, Format format);

}  // namespace divscore::report_io
