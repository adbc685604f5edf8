#include "divscore/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "divscore/csv.hpp"
#include "divscore/error.hpp"

namespace divscore::diversity {

WeightVector::WeightVector(std::vector<std::string> labels, std::vector<double> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
  if (labels_.size() != weights_.size()) {
    throw InvariantError("weights same length as labels",
                         std::to_string(labels_.size()) + " labels, " +
                             std::to_string(weights_.size()) + " weights");
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw InvariantError("weight labels are unique", l);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_[i]) || weights_[i] < 0.0) {
      throw InvariantError("weights are finite and non-negative", labels_[i]);
    }
    sum += weights_[i];
  }
  if (!(sum > 0.0)) throw InvariantError("sum of weights > 0", "");
}

double WeightVector::total() const noexcept {
  double sum = 0.0;
  for (double w : weights_) sum += w;
  return sum;
}

WeightVector WeightVector::scaled(double factor) const {
  std::vector<double> w = weights_;
  for (double& x : w) x *= factor;
  return WeightVector(labels_, std::move(w));
}

BinnedDistribution bin_measurements(std::span<const double> values, double width) {
  if (values.empty()) throw InputError("no measurements to bin");
  if (!(width > 0.0) || !std::isfinite(width)) throw InputError("bin width must be positive");
  std::map<std::int64_t, double> weights;
  for (double v : values) weights[BinnedDistribution::bin_index(v, width)] += 1.0;
  return BinnedDistribution(width, std::move(weights));
}

double normalization_scalar(std::size_t size_a, std::size_t size_b) {
  if (size_a == 0 || size_b == 0) throw InputError("set sizes must be positive");
  return static_cast<double>(std::max(size_a, size_b)) /
         static_cast<double>(std::min(size_a, size_b));
}

std::pair<WeightVector, WeightVector> align_bins(const BinnedDistribution& a,
                                                 const BinnedDistribution& b) {
  if (a.bin_width() != b.bin_width() || a.anchor() != b.anchor()) {
    throw InputError("cannot align distributions with different bin widths (" +
                     csv::format_double(a.bin_width()) + " vs " +
                     csv::format_double(b.bin_width()) + ")");
  }
  std::set<std::int64_t> keys;
  for (const auto& [k, w] : a.weights()) keys.insert(k);
  for (const auto& [k, w] : b.weights()) keys.insert(k);

  std::vector<std::string> labels;
  std::vector<double> wa;
  std::vector<double> wb;
  for (std::int64_t k : keys) {
    labels.push_back(BinnedDistribution::bin_label(k, a.bin_width()));
    auto ia = a.weights().find(k);
    auto ib = b.weights().find(k);
    wa.push_back(ia == a.weights().end() ? 0.0 : ia->second);
    wb.push_back(ib == b.weights().end() ? 0.0 : ib->second);
  }
  return {WeightVector(labels, std::move(wa)), WeightVector(labels, std::move(wb))};
}

namespace {

void require_same_labels(const WeightVector& a, const WeightVector& b) {
  if (a.labels() == b.labels()) return;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.labels()[i] != b.labels()[i]) {
      throw InputError("weight vectors differ at dimension " + std::to_string(i) + ": '" +
                       a.labels()[i] + "' vs '" + b.labels()[i] + "'");
    }
  }
  throw InputError("weight vectors have different lengths (" + std::to_string(a.size()) +
                   " vs " + std::to_string(b.size()) + ")");
}

}  // namespace

double jaccard_minmax(const WeightVector& a, const WeightVector& b) {
  require_same_labels(a, b);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::min(a.weights()[i], b.weights()[i]);
    den += std::max(a.weights()[i], b.weights()[i]);
  }
  if (!(den > 0.0)) throw InputError("both weight vectors are all zero");
  return num / den;
}

ScaledComparison scale_vectors(const WeightVector& dataset, std::size_t dataset_size,
                               const WeightVector& reference, std::size_t reference_size) {
  require_same_labels(dataset, reference);
  const double c = normalization_scalar(dataset_size, reference_size);
  if (dataset_size < reference_size) {
    return {dataset.scaled(c), reference, c, ScaledSide::dataset, dataset_size, reference_size};
  }
  if (reference_size < dataset_size) {
    return {dataset, reference.scaled(c), c, ScaledSide::reference, dataset_size,
            reference_size};
  }
  return {dataset, reference, 1.0, ScaledSide::none, dataset_size, reference_size};
}

ScaledComparison scale_and_align(const BinnedDistribution& dataset, std::size_t dataset_size,
                                 const BinnedDistribution& reference, std::size_t reference_size) {
  auto [d, r] = align_bins(dataset, reference);
  return scale_vectors(d, dataset_size, r, reference_size);
}

DiversityReport jmm_report(const ScaledComparison& cmp, ScoreName score,
                           std::optional<double> bin_width) {
  DiversityReport::Fields f;
  f.score = score;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < cmp.dataset.size(); ++i) {
    const double d = cmp.dataset.weights()[i];
    const double r = cmp.reference.weights()[i];
    f.per_bin.push_back({cmp.dataset.labels()[i], r, d, std::min(d, r), std::max(d, r)});
    num += std::min(d, r);
    den += std::max(d, r);
  }
  f.value = num / den;
  f.normalization_c = cmp.c;
  f.scaled_side = cmp.scaled_side;
  f.dataset_size = cmp.dataset_size;
  f.reference_size = cmp.reference_size;
  f.bin_width = bin_width;
  return DiversityReport(std::move(f));
}

DiversityReport jmm_score(std::span<const double> dataset, std::span<const double> reference,
                          double width) {
  const auto cmp = scale_and_align(bin_measurements(dataset, width), dataset.size(),
                                   bin_measurements(reference, width), reference.size());
  return jmm_report(cmp, ScoreName::jmm_morph, width);
}

// --- syntax ----------------------------------------------------------------

namespace {

void require_binary(const FeatureMatrix& m) {
  if (m.kind() != MatrixKind::binary_syntactic) {
    throw InputError("syntactic scores need a binary_syntactic matrix");
  }
}

}  // namespace

WeightVector syntactic_weights(const FeatureMatrix& matrix, SynDims dims) {
  require_binary(matrix);
  const std::size_t nf = matrix.feature_count();
  std::vector<double> ones(nf, 0.0);
  for (std::size_t l = 0; l < matrix.language_count(); ++l) {
    const auto row = matrix.row(l);
    for (std::size_t f = 0; f < nf; ++f) ones[f] += row[f];
  }
  if (dims == SynDims::per_feature) return WeightVector(matrix.features(), std::move(ones));

  std::vector<std::string> labels;
  std::vector<double> weights;
  const double n = static_cast<double>(matrix.language_count());
  for (std::size_t f = 0; f < nf; ++f) {
    labels.push_back(matrix.features()[f] + "=0");
    weights.push_back(n - ones[f]);
    labels.push_back(matrix.features()[f] + "=1");
    weights.push_back(ones[f]);
  }
  return WeightVector(std::move(labels), std::move(weights));
}

ScaledComparison compare_syntax(const FeatureMatrix& dataset, const FeatureMatrix& reference,
                                SynDims dims) {
  require_binary(dataset);
  require_binary(reference);
  const auto& fd = dataset.features();
  const auto& fr = reference.features();
  for (std::size_t i = 0; i < std::max(fd.size(), fr.size()); ++i) {
    if (i >= fd.size() || i >= fr.size() || fd[i] != fr[i]) {
      throw InputError("feature columns differ at column " + std::to_string(i + 2) +
                       ": dataset '" + (i < fd.size() ? fd[i] : "<none>") + "' vs reference '" +
                       (i < fr.size() ? fr[i] : "<none>") + "'");
    }
  }
  return scale_vectors(syntactic_weights(dataset, dims), dataset.language_count(),
                       syntactic_weights(reference, dims), reference.language_count());
}

DiversityReport jmm_syn(const FeatureMatrix& dataset, const FeatureMatrix& reference,
                        SynDims dims) {
  return jmm_report(compare_syntax(dataset, reference, dims), ScoreName::jmm_syn);
}

// --- typological indices ---------------------------------------------------

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability outside [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double ti_syn(const FeatureMatrix& matrix) {
  require_binary(matrix);
  if (matrix.language_count() < 2) throw InputError("ti_syn needs at least 2 languages");
  const double n = static_cast<double>(matrix.language_count());
  double sum = 0.0;
  for (std::size_t f = 0; f < matrix.feature_count(); ++f) {
    std::size_t ones = 0;
    for (std::size_t l = 0; l < matrix.language_count(); ++l) ones += matrix.at(l, f);
    sum += binary_entropy(static_cast<double>(ones) / n);
  }
  return sum / static_cast<double>(matrix.feature_count());
}

double ti_morph(std::span<const double> values, double width) {
  if (values.size() < 2) throw InputError("ti_morph needs at least 2 values");
  const BinnedDistribution bins = bin_measurements(values, width);
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (const auto& [k, count] : bins.weights()) sum += binary_entropy(count / n);
  return sum / static_cast<double>(bins.weights().size());
}

DiversityReport ti_syn_report(const FeatureMatrix& matrix) {
  DiversityReport::Fields f;
  f.score = ScoreName::ti_syn;
  f.value = ti_syn(matrix);
  f.dataset_size = matrix.language_count();
  return DiversityReport(std::move(f));
}

DiversityReport ti_morph_report(std::span<const double> values, double width) {
  DiversityReport::Fields f;
  f.score = ScoreName::ti_morph;
  f.value = ti_morph(values, width);
  f.dataset_size = values.size();
  f.bin_width = width;
  f.notes.push_back("entropy averaged over occupied bins only");
  return DiversityReport(std::move(f));
}

}  // namespace divscore::diversity
