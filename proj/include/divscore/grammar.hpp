#pragma once

// Morphological complexity from WALS features: each chapter's final value
// is min-max normalised over its declared range and the 26 normalised
// values are averaged per language.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divscore/core.hpp"

namespace divscore::grammar {

/// The 26 WALS chapters that make up the complexity score.
class MorphSpecSet {
 public:
  static constexpr std::size_t kFeatureCount = 26;

  explicit MorphSpecSet(std::vector<MorphFeatureSpec> specs);

  /// Chapters 22A..112A with the final ranges and transformation types of
  /// the standard feature table. Only chapter 49A carries a value map
  /// (its "exclusively borderline" category 9 is removed).
  static const MorphSpecSet& bundled();

  const std::vector<MorphFeatureSpec>& specs() const noexcept { return specs_; }
  const MorphFeatureSpec* find(std::string_view chapter) const;
  const MorphFeatureSpec& at(std::string_view chapter) const;

  bool operator==(const MorphSpecSet&) const = default;

 private:
  std::vector<MorphFeatureSpec> specs_;
};

/// Maps a raw WALS category onto the feature's final scale.
/// Without a value map only transformation "none" is defined (identity).
int transform_feature(int raw, const MorphFeatureSpec& spec);

struct NormalizedValue {
  double value = 0.0;
  bool degenerate_range = false;  // final_min == final_max; value forced to 0
};

NormalizedValue normalize_feature(int value, const MorphFeatureSpec& spec);

/// chapter -> final value
using ChapterValues = std::map<std::string, int, std::less<>>;

/// Mean of the normalised values over all chapters of `specs`. Every chapter
/// must be present; the error lists all absent ones.
double c_wals(const ChapterValues& language_values, const MorphSpecSet& specs);

/// Chapters of `specs` that are absent from `language_values`.
std::vector<std::string> missing_chapters(const ChapterValues& language_values,
                                          const MorphSpecSet& specs);

/// Tab-separated spec file: chapter, name, transformation, final_min,
/// final_max, value_map ("raw=final;raw=final", may be empty).
MorphSpecSet load_spec_file(const std::filesystem::path& path);
MorphSpecSet parse_spec_text(std::string_view text);
std::string format_spec_text(const MorphSpecSet& specs);

/// One row of a morphology data file. Cells that are blank or "?" are
/// absent from `values`.
struct MorphologyRow {
  IsoCode iso;
  ChapterValues values;
};

/// Comma-separated `iso,22A,26A,...` with final values.
std::vector<MorphologyRow> load_morphology_table(const std::filesystem::path& path);
std::vector<MorphologyRow> parse_morphology_table(std::string_view text);

}  // namespace divscore::grammar
