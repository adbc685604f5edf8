#include "divscore/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "divscore/csv.hpp"
#include "divscore/error.hpp"

namespace divscore {

namespace {

constexpr double kReportTolerance = 1e-12;

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

// --- IsoCode ---------------------------------------------------------------

bool IsoCode::is_valid(std::string_view code) noexcept {
  return code.size() == 3 &&
         std::all_of(code.begin(), code.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

IsoCode::IsoCode(std::string_view code) : code_(code) {
  if (!is_valid(code)) {
    throw InvariantError("iso is three lowercase ASCII letters", "got " + quoted(code));
  }
}

// --- enums -----------------------------------------------------------------

std::string_view to_string(Endangerment status) {
  switch (status) {
    case Endangerment::safe: return "safe";
    case Endangerment::vulnerable: return "vulnerable";
    case Endangerment::endangered: return "endangered";
    case Endangerment::extinct: return "extinct";
    case Endangerment::unknown: return "unknown";
  }
  return "unknown";
}

std::optional<Endangerment> parse_endangerment(std::string_view text) {
  for (auto e : {Endangerment::safe, Endangerment::vulnerable, Endangerment::endangered,
                 Endangerment::extinct, Endangerment::unknown}) {
    if (text == to_string(e)) return e;
  }
  return std::nullopt;
}

std::string_view to_string(Transformation t) {
  switch (t) {
    case Transformation::none: return "none";
    case Transformation::binarization: return "binarization";
    case Transformation::reorder: return "reorder";
    case Transformation::recategorization: return "recategorization";
    case Transformation::remove: return "remove";
  }
  return "none";
}

std::optional<Transformation> parse_transformation(std::string_view text) {
  for (auto t : {Transformation::none, Transformation::binarization, Transformation::reorder,
                 Transformation::recategorization, Transformation::remove}) {
    if (text == to_string(t)) return t;
  }
  return std::nullopt;
}

std::string_view to_string(ScoreName name) {
  switch (name) {
    case ScoreName::jmm_morph: return "jmm_morph";
    case ScoreName::jmm_syn: return "jmm_syn";
    case ScoreName::ti_morph: return "ti_morph";
    case ScoreName::ti_syn: return "ti_syn";
    case ScoreName::c_wals: return "c_wals";
  }
  return "jmm_morph";
}

std::optional<ScoreName> parse_score_name(std::string_view text) {
  for (auto n : {ScoreName::jmm_morph, ScoreName::jmm_syn, ScoreName::ti_morph,
                 ScoreName::ti_syn, ScoreName::c_wals}) {
    if (text == to_string(n)) return n;
  }
  return std::nullopt;
}

std::string_view to_string(ScaledSide side) {
  switch (side) {
    case ScaledSide::none: return "none";
    case ScaledSide::dataset: return "dataset";
    case ScaledSide::reference: return "reference";
  }
  return "none";
}

std::optional<ScaledSide> parse_scaled_side(std::string_view text) {
  for (auto s : {ScaledSide::none, ScaledSide::dataset, ScaledSide::reference}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

// --- LanguageRecord / LanguageSet -----------------------------------------

LanguageRecord::LanguageRecord(IsoCode iso, std::string name, std::optional<std::string> family,
                               std::optional<Endangerment> endangerment, double script_scale)
    : iso_(std::move(iso)),
      name_(std::move(name)),
      family_(std::move(family)),
      endangerment_(endangerment),
      script_scale_(script_scale) {
  if (!(script_scale_ > 0.0) || !std::isfinite(script_scale_)) {
    throw InvariantError("script_scale > 0",
                         iso_.str() + " has script_scale " + csv::format_double(script_scale_));
  }
  if (family_ && family_->empty()) family_.reset();
}

LanguageSet::LanguageSet(std::vector<LanguageRecord> members) : members_(std::move(members)) {
  std::set<IsoCode> seen;
  for (const auto& m : members_) {
    if (!seen.insert(m.iso()).second) {
      throw InvariantError("no duplicate iso codes in a language set",
                           "duplicate " + m.iso().str());
    }
  }
}

const LanguageRecord* LanguageSet::find(const IsoCode& iso) const {
  auto it = std::find_if(members_.begin(), members_.end(),
                         [&](const LanguageRecord& r) { return r.iso() == iso; });
  return it == members_.end() ? nullptr : &*it;
}

void LanguageSet::require_non_empty(std::string_view context) const {
  if (members_.empty()) {
    throw InvariantError("language set is non-empty for scoring", std::string(context));
  }
}

// --- TextProfile -----------------------------------------------------------

TextProfile::TextProfile(IsoCode iso, double mean_word_length, double ttr,
                         double unigram_entropy, std::size_t token_count,
                         std::size_t sample_offset, std::uint64_t seed)
    : iso_(std::move(iso)),
      mean_word_length_(mean_word_length),
      ttr_(ttr),
      unigram_entropy_(unigram_entropy),
      token_count_(token_count),
      sample_offset_(sample_offset),
      seed_(seed) {
  if (token_count_ == 0) {
    throw InvariantError("token_count is positive", iso_.str());
  }
  if (!(mean_word_length_ >= 1.0) || !std::isfinite(mean_word_length_)) {
    throw InvariantError("mean_word_length >= 1",
                         iso_.str() + ": " + csv::format_double(mean_word_length_));
  }
  if (!(ttr_ > 0.0 && ttr_ <= 1.0)) {
    throw InvariantError("0 < ttr <= 1", iso_.str() + ": " + csv::format_double(ttr_));
  }
  const double cap = std::log2(static_cast<double>(token_count_));
  if (!(unigram_entropy_ >= 0.0) || unigram_entropy_ > cap + 1e-9) {
    throw InvariantError("0 <= unigram_entropy <= log2(token_count)",
                         iso_.str() + ": " + csv::format_double(unigram_entropy_));
  }
}

// --- FeatureMatrix ---------------------------------------------------------

FeatureMatrix::FeatureMatrix(std::vector<IsoCode> languages, std::vector<std::string> features,
                             std::vector<int> values, MatrixKind kind,
                             std::vector<ValueRange> ranges)
    : languages_(std::move(languages)),
      features_(std::move(features)),
      values_(std::move(values)),
      kind_(kind),
      ranges_(std::move(ranges)) {
  if (values_.size() != languages_.size() * features_.size()) {
    throw InvariantError("every (language, feature) cell is populated",
                         std::to_string(values_.size()) + " values for " +
                             std::to_string(languages_.size()) + " x " +
                             std::to_string(features_.size()) + " cells");
  }
  std::set<IsoCode> seen_lang(languages_.begin(), languages_.end());
  if (seen_lang.size() != languages_.size()) {
    throw InvariantError("matrix languages are unique", "");
  }
  std::set<std::string> seen_feat(features_.begin(), features_.end());
  if (seen_feat.size() != features_.size()) {
    throw InvariantError("matrix features are unique", "");
  }
  if (kind_ == MatrixKind::binary_syntactic) {
    ranges_.assign(features_.size(), ValueRange{0, 1});
  } else if (ranges_.size() != features_.size()) {
    throw InvariantError("morphological_ordinal matrix declares a range per feature",
                         std::to_string(ranges_.size()) + " ranges for " +
                             std::to_string(features_.size()) + " features");
  }
  for (std::size_t l = 0; l < languages_.size(); ++l) {
    for (std::size_t f = 0; f < features_.size(); ++f) {
      const int v = values_[l * features_.size() + f];
      if (!ranges_[f].contains(v)) {
        const std::string rule = kind_ == MatrixKind::binary_syntactic
                                     ? "binary_syntactic values are 0 or 1"
                                     : "morphological values lie in the declared final range";
        throw InvariantError(rule, languages_[l].str() + "/" + features_[f] + " = " +
                                       std::to_string(v));
      }
    }
  }
}

int FeatureMatrix::at(std::size_t language, std::size_t feature) const {
  if (language >= languages_.size() || feature >= features_.size()) {
    throw std::out_of_range("FeatureMatrix::at");
  }
  return values_[language * features_.size() + feature];
}

std::span<const int> FeatureMatrix::row(std::size_t language) const {
  if (language >= languages_.size()) throw std::out_of_range("FeatureMatrix::row");
  return std::span<const int>(values_).subspan(language * features_.size(), features_.size());
}

// --- MorphFeatureSpec ------------------------------------------------------

MorphFeatureSpec::MorphFeatureSpec(std::string chapter, std::string name,
                                   Transformation transformation, int final_min, int final_max,
                                   std::map<int, int> value_map)
    : chapter_(std::move(chapter)),
      name_(std::move(name)),
      transformation_(transformation),
      final_min_(final_min),
      final_max_(final_max),
      value_map_(std::move(value_map)) {
  if (chapter_.empty()) throw InvariantError("chapter identifier is non-empty", "");
  if (final_min_ > final_max_) {
    throw InvariantError("final_min <= final_max", chapter_);
  }
  for (const auto& [raw, final_value] : value_map_) {
    if (final_value < final_min_ || final_value > final_max_) {
      throw InvariantError("value_map outputs lie in [final_min, final_max]",
                           chapter_ + ": " + std::to_string(raw) + " -> " +
                               std::to_string(final_value));
    }
  }
}

// --- BinnedDistribution ----------------------------------------------------

BinnedDistribution::BinnedDistribution(double bin_width, std::map<std::int64_t, double> weights)
    : bin_width_(bin_width), weights_(std::move(weights)) {
  if (!(bin_width_ > 0.0) || !std::isfinite(bin_width_)) {
    throw InvariantError("bin_width > 0", csv::format_double(bin_width_));
  }
  bool any_positive = false;
  for (const auto& [bin, w] : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InvariantError("bin weights are non-negative",
                           "bin " + std::to_string(bin) + " = " + csv::format_double(w));
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw InvariantError("at least one bin weight > 0", "");
}

std::int64_t BinnedDistribution::bin_index(double value, double bin_width) {
  if (!std::isfinite(value)) {
    throw InputError("cannot bin a non-finite measurement");
  }
  return static_cast<std::int64_t>(std::floor(value / bin_width));
}

std::string BinnedDistribution::bin_label(std::int64_t index, double bin_width) {
  const double lo = static_cast<double>(index) * bin_width;
  const double hi = static_cast<double>(index + 1) * bin_width;
  return "[" + csv::format_double(lo) + "," + csv::format_double(hi) + ")";
}

double BinnedDistribution::total_weight() const noexcept {
  double total = 0.0;
  for (const auto& [bin, w] : weights_) total += w;
  return total;
}

BinnedDistribution BinnedDistribution::scaled(double factor) const {
  std::map<std::int64_t, double> out;
  for (const auto& [bin, w] : weights_) out.emplace(bin, w * factor);
  return BinnedDistribution(bin_width_, std::move(out));
}

// --- GapReport / DiversityReport -------------------------------------------

GapReport::GapReport(std::vector<SurplusBin> surplus, std::vector<DeficitBin> deficit)
    : surplus_(std::move(surplus)), deficit_(std::move(deficit)) {
  std::set<std::string> labels;
  for (const auto& s : surplus_) {
    if (!(s.excess > 0.0)) throw InvariantError("surplus excess is positive", s.label);
    if (!labels.insert(s.label).second) {
      throw InvariantError("a bin appears at most once in a gap report", s.label);
    }
  }
  for (const auto& d : deficit_) {
    if (!(d.shortfall > 0.0)) throw InvariantError("deficit shortfall is positive", d.label);
    if (!labels.insert(d.label).second) {
      throw InvariantError("a bin appears in at most one of surplus/deficit", d.label);
    }
  }
}

DiversityReport::DiversityReport(Fields fields) : fields_(std::move(fields)) {
  const auto& f = fields_;
  const std::string name(to_string(f.score));
  if (!std::isfinite(f.value) || f.value < 0.0 || f.value > 1.0) {
    throw InvariantError("report value in [0, 1]", name + " = " + csv::format_double(f.value));
  }
  if (f.normalization_c && !(*f.normalization_c >= 1.0)) {
    throw InvariantError("normalization scalar >= 1", csv::format_double(*f.normalization_c));
  }
  if (f.bin_width && !(*f.bin_width > 0.0)) {
    throw InvariantError("bin_width > 0", csv::format_double(*f.bin_width));
  }
  const bool jmm = f.score == ScoreName::jmm_morph || f.score == ScoreName::jmm_syn;
  if (!jmm || f.per_bin.empty()) return;

  double sum_min = 0.0;
  double sum_max = 0.0;
  for (const auto& row : f.per_bin) {
    if (row.min != std::min(row.reference, row.dataset) ||
        row.max != std::max(row.reference, row.dataset)) {
      throw InvariantError("per-bin min/max are the min/max of the two weights", row.label);
    }
    sum_min += row.min;
    sum_max += row.max;
  }
  if (!(sum_max > 0.0) || std::abs(f.value - sum_min / sum_max) > kReportTolerance) {
    throw InvariantError("jmm value equals sum(min) / sum(max) over per_bin rows",
                         name + " = " + csv::format_double(f.value));
  }
}

}  // namespace divscore
