#pragma once

// Domain types shared by every module. All of them validate on
// construction and are immutable afterwards.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace divscore {

/// ISO 639-3 code: exactly three ASCII lowercase letters.
class IsoCode {
 public:
  explicit IsoCode(std::string_view code);

  static bool is_valid(std::string_view code) noexcept;

  const std::string& str() const noexcept { return code_; }

  auto operator<=>(const IsoCode&) const = default;

 private:
  std::string code_;
};

enum class Endangerment { safe, vulnerable, endangered, extinct, unknown };

std::string_view to_string(Endangerment status);
std::optional<Endangerment> parse_endangerment(std::string_view text);

class LanguageRecord {
 public:
  LanguageRecord(IsoCode iso, std::string name, std::optional<std::string> family = std::nullopt,
                 std::optional<Endangerment> endangerment = std::nullopt,
                 double script_scale = 1.0);

  const IsoCode& iso() const noexcept { return iso_; }
  const std::string& name() const noexcept { return name_; }
  /// Top-level family; empty for isolates and unclassified languages.
  const std::optional<std::string>& family() const noexcept { return family_; }
  const std::optional<Endangerment>& endangerment() const noexcept { return endangerment_; }
  /// Word-length multiplier, 1.0 unless the script is logographic.
  double script_scale() const noexcept { return script_scale_; }

  bool operator==(const LanguageRecord&) const = default;

 private:
  IsoCode iso_;
  std::string name_;
  std::optional<std::string> family_;
  std::optional<Endangerment> endangerment_;
  double script_scale_;
};

/// Ordered set of languages, unique by ISO code.
class LanguageSet {
 public:
  LanguageSet() = default;
  explicit LanguageSet(std::vector<LanguageRecord> members);

  const std::vector<LanguageRecord>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  const LanguageRecord* find(const IsoCode& iso) const;
  bool contains(const IsoCode& iso) const { return find(iso) != nullptr; }

  /// Scoring operations need at least one member.
  void require_non_empty(std::string_view context) const;

  bool operator==(const LanguageSet&) const = default;

 private:
  std::vector<LanguageRecord> members_;
};

class TextProfile {
 public:
  TextProfile(IsoCode iso, double mean_word_length, double ttr, double unigram_entropy,
              std::size_t token_count, std::size_t sample_offset, std::uint64_t seed);

  const IsoCode& iso() const noexcept { return iso_; }
  double mean_word_length() const noexcept { return mean_word_length_; }
  double ttr() const noexcept { return ttr_; }
  double unigram_entropy() const noexcept { return unigram_entropy_; }
  std::size_t token_count() const noexcept { return token_count_; }
  std::size_t sample_offset() const noexcept { return sample_offset_; }
  std::uint64_t seed() const noexcept { return seed_; }

  bool operator==(const TextProfile&) const = default;

 private:
  IsoCode iso_;
  double mean_word_length_;
  double ttr_;
  double unigram_entropy_;
  std::size_t token_count_;
  std::size_t sample_offset_;
  std::uint64_t seed_;
};

enum class MatrixKind { binary_syntactic, morphological_ordinal };

struct ValueRange {
  int min = 0;
  int max = 1;

  bool contains(long long v) const noexcept { return v >= min && v <= max; }
  bool operator==(const ValueRange&) const = default;
};

/// Languages x features, fully populated.
class FeatureMatrix {
 public:
  /// `values` is row-major (one row per language). `ranges` gives the
  /// admissible final range of each feature and is required for
  /// morphological_ordinal; binary matrices always use [0, 1].
  FeatureMatrix(std::vector<IsoCode> languages, std::vector<std::string> features,
                std::vector<int> values, MatrixKind kind, std::vector<ValueRange> ranges = {});

  const std::vector<IsoCode>& languages() const noexcept { return languages_; }
  const std::vector<std::string>& features() const noexcept { return features_; }
  MatrixKind kind() const noexcept { return kind_; }
  std::size_t language_count() const noexcept { return languages_.size(); }
  std::size_t feature_count() const noexcept { return features_.size(); }
  const ValueRange& range(std::size_t feature) const { return ranges_.at(feature); }

  int at(std::size_t language, std::size_t feature) const;
  std::span<const int> row(std::size_t language) const;

  bool operator==(const FeatureMatrix&) const = default;

 private:
  std::vector<IsoCode> languages_;
  std::vector<std::string> features_;
  std::vector<int> values_;
  MatrixKind kind_;
  std::vector<ValueRange> ranges_;
};

enum class Transformation { none, binarization, reorder, recategorization, remove };

std::string_view to_string(Transformation t);
std::optional<Transformation> parse_transformation(std::string_view text);

/// One WALS chapter used by the morphological complexity score.
class MorphFeatureSpec {
 public:
  MorphFeatureSpec(std::string chapter, std::string name, Transformation transformation,
                   int final_min, int final_max, std::map<int, int> value_map = {});

  const std::string& chapter() const noexcept { return chapter_; }
  const std::string& name() const noexcept { return name_; }
  Transformation transformation() const noexcept { return transformation_; }
  int final_min() const noexcept { return final_min_; }
  int final_max() const noexcept { return final_max_; }
  ValueRange final_range() const noexcept { return {final_min_, final_max_}; }
  /// Raw WALS category -> final value. May be empty when no mapping is known.
  const std::map<int, int>& value_map() const noexcept { return value_map_; }

  bool operator==(const MorphFeatureSpec&) const = default;

 private:
  std::string chapter_;
  std::string name_;
  Transformation transformation_;
  int final_min_;
  int final_max_;
  std::map<int, int> value_map_;
};

/// Weighted histogram over equal-width bins anchored at 0.
/// Bin k covers [k * width, (k + 1) * width).
class BinnedDistribution {
 public:
  BinnedDistribution(double bin_width, std::map<std::int64_t, double> weights);

  static std::int64_t bin_index(double value, double bin_width);
  /// Human-readable half-open interval, e.g. "[3,4)".
  static std::string bin_label(std::int64_t index, double bin_width);

  double bin_width() const noexcept { return bin_width_; }
  double anchor() const noexcept { return 0.0; }
  const std::map<std::int64_t, double>& weights() const noexcept { return weights_; }
  double total_weight() const noexcept;

  BinnedDistribution scaled(double factor) const;

  bool operator==(const BinnedDistribution&) const = default;

 private:
  double bin_width_;
  std::map<std::int64_t, double> weights_;
};

// --- reports ---------------------------------------------------------------

enum class ScoreName { jmm_morph, jmm_syn, ti_morph, ti_syn, c_wals };

std::string_view to_string(ScoreName name);
std::optional<ScoreName> parse_score_name(std::string_view text);

/// Which side of a comparison had its weights multiplied by the size scalar.
enum class ScaledSide { none, dataset, reference };

std::string_view to_string(ScaledSide side);
std::optional<ScaledSide> parse_scaled_side(std::string_view text);

struct BinRow {
  std::string label;
  double reference = 0.0;
  double dataset = 0.0;
  double min = 0.0;
  double max = 0.0;

  bool operator==(const BinRow&) const = default;
};

struct SurplusBin {
  std::string label;
  double excess = 0.0;

  bool operator==(const SurplusBin&) const = default;
};

struct DeficitBin {
  std::string label;
  double shortfall = 0.0;
  std::vector<std::string> examples;  // reference languages in this bin

  bool operator==(const DeficitBin&) const = default;
};

/// Where a data set departs from its reference, bin by bin.
class GapReport {
 public:
  GapReport() = default;
  GapReport(std::vector<SurplusBin> surplus, std::vector<DeficitBin> deficit);

  const std::vector<SurplusBin>& surplus() const noexcept { return surplus_; }
  const std::vector<DeficitBin>& deficit() const noexcept { return deficit_; }
  bool empty() const noexcept { return surplus_.empty() && deficit_.empty(); }

  bool operator==(const GapReport&) const = default;

 private:
  std::vector<SurplusBin> surplus_;
  std::vector<DeficitBin> deficit_;
};

class DiversityReport {
 public:
  struct Fields {
    ScoreName score = ScoreName::jmm_morph;
    double value = 0.0;
    std::vector<BinRow> per_bin;
    std::optional<double> normalization_c;
    ScaledSide scaled_side = ScaledSide::none;
    std::size_t dataset_size = 0;
    std::size_t reference_size = 0;
    std::optional<double> bin_width;
    std::optional<GapReport> gap;
    std::vector<std::string> notes;

    bool operator==(const Fields&) const = default;
  };

  explicit DiversityReport(Fields fields);

  const Fields& fields() const noexcept { return fields_; }
  ScoreName score() const noexcept { return fields_.score; }
  double value() const noexcept { return fields_.value; }
  const std::vector<BinRow>& per_bin() const noexcept { return fields_.per_bin; }
  const std::optional<double>& normalization_c() const noexcept { return fields_.normalization_c; }
  const std::optional<GapReport>& gap() const noexcept { return fields_.gap; }

  bool operator==(const DiversityReport&) const = default;

 private:
  Fields fields_;
};

}  // namespace divscore
