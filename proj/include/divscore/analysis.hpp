#pragma once

// Rank correlation, gap diagnosis and the comparison pipelines that attach
// gap reports to scores.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "divscore/core.hpp"
#include "divscore/diversity.hpp"

namespace divscore::analysis {

struct CorrelationResult {
  double rho = 0.0;
  std::size_t n = 0;
  std::vector<std::pair<double, double>> pairs;
};

/// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson correlation of the average ranks.
CorrelationResult spearman(std::span<const double> xs, std::span<const double> ys);

/// bin/dimension label -> reference languages that fall there
using BinMembers = std::map<std::string, std::vector<std::string>, std::less<>>;

/// Inputs are aligned and already size-scaled. Deficit bins list up to
/// `max_examples` reference languages, smallest iso first.
GapReport gap_report(const diversity::WeightVector& dataset,
                     const diversity::WeightVector& reference,
                     const BinMembers& reference_members, std::size_t max_examples = 5);

struct OverlapRow {
  std::string label;
  double a = 0.0;
  double b = 0.0;
  double min = 0.0;
  double max = 0.0;
};

std::vector<OverlapRow> overlap_series(const diversity::WeightVector& a,
                                       const diversity::WeightVector& b);

/// One language's value of a real-valued measure (e.g. MWL).
struct Measurement {
  IsoCode iso;
  double value = 0.0;
};

/// jmm for the level plus the typological index of each side.
struct Comparison {
  DiversityReport jmm;
  DiversityReport ti_dataset;
  DiversityReport ti_reference;
};

Comparison compare_morph(std::span<const Measurement> dataset,
                         std::span<const Measurement> reference, double bin_width);

Comparison compare_syn(const FeatureMatrix& dataset, const FeatureMatrix& reference,
                       diversity::SynDims dims = diversity::SynDims::per_feature);

/// Rows of `matrix` whose language is in `keep`, in matrix order.
/// Languages of `keep` absent from the matrix are appended to `missing`.
FeatureMatrix select_languages(const FeatureMatrix& matrix, std::span<const IsoCode> keep,
                               std::vector<IsoCode>* missing = nullptr);

}  // namespace divscore::analysis
