#pragma once

// Binning, size normalisation, minmax Jaccard and the typological indices.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "divscore/core.hpp"

namespace divscore::diversity {

class WeightVector {
 public:
  WeightVector(std::vector<std::string> labels, std::vector<double> weights);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return labels_.size(); }
  double total() const noexcept;

  WeightVector scaled(double factor) const;

  bool operator==(const WeightVector&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<double> weights_;
};

/// Each value adds weight 1 to bin floor(v / width).
BinnedDistribution bin_measurements(std::span<const double> values, double width);

/// max(a, b) / min(a, b); the smaller side's weights get multiplied by it.
double normalization_scalar(std::size_t size_a, std::size_t size_b);

/// Both distributions over the union of occupied bins, zero-filled, in bin order.
std::pair<WeightVector, WeightVector> align_bins(const BinnedDistribution& a,
                                                 const BinnedDistribution& b);

/// sum(min) / sum(max) over identically labelled vectors.
double jaccard_minmax(const WeightVector& a, const WeightVector& b);

/// Aligned weights after the size scalar has been applied to the smaller side.
struct ScaledComparison {
  WeightVector dataset;
  WeightVector reference;
  double c = 1.0;
  ScaledSide scaled_side = ScaledSide::none;
  std::size_t dataset_size = 0;
  std::size_t reference_size = 0;
};

ScaledComparison scale_and_align(const BinnedDistribution& dataset, std::size_t dataset_size,
                                 const BinnedDistribution& reference, std::size_t reference_size);

ScaledComparison scale_vectors(const WeightVector& dataset, std::size_t dataset_size,
                               const WeightVector& reference, std::size_t reference_size);

/// Report with one row per dimension; value is recomputed from those rows.
DiversityReport jmm_report(const ScaledComparison& cmp, ScoreName score,
                           std::optional<double> bin_width = {});

DiversityReport jmm_score(std::span<const double> dataset, std::span<const double> reference,
                          double width);

enum class SynDims {
  per_feature = 103,   // one dimension per feature: count of 1s
  per_value = 206,     // separate dimensions for the 0s and 1s of each feature
};

WeightVector syntactic_weights(const FeatureMatrix& matrix, SynDims dims = SynDims::per_feature);

ScaledComparison compare_syntax(const FeatureMatrix& dataset, const FeatureMatrix& reference,
                                SynDims dims = SynDims::per_feature);

DiversityReport jmm_syn(const FeatureMatrix& dataset, const FeatureMatrix& reference,
                        SynDims dims = SynDims::per_feature);

/// Shannon entropy in bits of a Bernoulli(p) variable.
double binary_entropy(double p);

/// Mean binary entropy of the per-feature share of 1s.
double ti_syn(const FeatureMatrix& matrix);

/// Mean binary entropy of bin membership, over occupied bins only.
double ti_morph(std::span<const double> values, double width);

DiversityReport ti_syn_report(const FeatureMatrix& matrix);
DiversityReport ti_morph_report(std::span<const double> values, double width);

}  // namespace divscore::diversity
