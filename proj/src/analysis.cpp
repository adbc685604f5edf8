#include "divscore/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "divscore/error.hpp"

namespace divscore::analysis {

using diversity::WeightVector;

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // positions i..j-1 hold equal values; ranks i+1..j
    const double r = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = r;
    i = j;
  }
  return ranks;
}

CorrelationResult spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw InputError("spearman: length mismatch (" + std::to_string(xs.size()) + " vs " +
                     std::to_string(ys.size()) + ")");
  }
  const std::size_t n = xs.size();
  if (n < 3) throw InputError("spearman: need at least 3 pairs, got " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw InputError("spearman: non-finite value at position " + std::to_string(i));
    }
  }
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  const double mean = (static_cast<double>(n) + 1.0) / 2.0;  // same for both rank vectors
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw InputError("spearman: zero rank variance");
  CorrelationResult out;
  out.rho = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  out.n = n;
  for (std::size_t i = 0; i < n; ++i) out.pairs.emplace_back(xs[i], ys[i]);
  return out;
}

namespace {

void require_aligned(const WeightVector& a, const WeightVector& b) {
  if (a.labels() != b.labels()) throw InputError("vectors are not aligned (label mismatch)");
}

}  // namespace

GapReport gap_report(const WeightVector& dataset, const WeightVector& reference,
                     const BinMembers& reference_members, std::size_t max_examples) {
  require_aligned(dataset, reference);
  std::vector<SurplusBin> surplus;
  std::vector<DeficitBin> deficit;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const double d = dataset.weights()[i];
    const double r = reference.weights()[i];
    const std::string& label = dataset.labels()[i];
    if (d > r) {
      surplus.push_back({label, d - r});
    } else if (d < r) {
      std::vector<std::string> examples;
      if (auto it = reference_members.find(label); it != reference_members.end()) {
        examples = it->second;
        std::sort(examples.begin(), examples.end());
        examples.erase(std::unique(examples.begin(), examples.end()), examples.end());
        if (examples.size() > max_examples) examples.resize(max_examples);
      }
      deficit.push_back({label, r - d, std::move(examples)});
    }
  }
  return GapReport(std::move(surplus), std::move(deficit));
}

std::vector<OverlapRow> overlap_series(const WeightVector& a, const WeightVector& b) {
  require_aligned(a, b);
  std::vector<OverlapRow> rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = a.weights()[i];
    const double y = b.weights()[i];
    rows.push_back({a.labels()[i], x, y, std::min(x, y), std::max(x, y)});
  }
  return rows;
}

namespace {

std::vector<double> values_of(std::span<const Measurement> ms) {
  std::vector<double> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.value);
  return out;
}

void require_unique(std::span<const Measurement> ms, const char* side) {
  std::set<IsoCode> seen;
  for (const auto& m : ms) {
    if (!seen.insert(m.iso).second) {
      throw InputError(std::string(side) + " lists " + m.iso.str() + " twice");
    }
  }
}

DiversityReport with_gap(const DiversityReport& r, GapReport gap) {
  auto f = r.fields();
  f.gap = std::move(gap);
  return DiversityReport(std::move(f));
}

}  // namespace

Comparison compare_morph(std::span<const Measurement> dataset,
                         std::span<const Measurement> reference, double bin_width) {
  require_unique(dataset, "dataset");
  require_unique(reference, "reference");
  const auto dv = values_of(dataset);
  const auto rv = values_of(reference);
  const auto cmp = diversity::scale_and_align(diversity::bin_measurements(dv, bin_width),
                                              dv.size(),
                                              diversity::bin_measurements(rv, bin_width),
                                              rv.size());
  BinMembers members;
  for (const auto& m : reference) {
    const auto k = BinnedDistribution::bin_index(m.value, bin_width);
    members[BinnedDistribution::bin_label(k, bin_width)].push_back(m.iso.str());
  }
  const auto jmm = diversity::jmm_report(cmp, ScoreName::jmm_morph, bin_width);
  if (dv.size() < 2 || rv.size() < 2) {
    throw InputError("ti_morph needs at least 2 languages on each side");
  }
  return {with_gap(jmm, gap_report(cmp.dataset, cmp.reference, members)),
          diversity::ti_morph_report(dv, bin_width), diversity::ti_morph_report(rv, bin_width)};
}

Comparison compare_syn(const FeatureMatrix& dataset, const FeatureMatrix& reference,
                       diversity::SynDims dims) {
  const auto cmp = diversity::compare_syntax(dataset, reference, dims);
  BinMembers members;
  for (std::size_t l = 0; l < reference.language_count(); ++l) {
    const auto row = reference.row(l);
    for (std::size_t f = 0; f < reference.feature_count(); ++f) {
      const std::string& feature = reference.features()[f];
      if (dims == diversity::SynDims::per_feature) {
        if (row[f] == 1) members[feature].push_back(reference.languages()[l].str());
      } else {
        members[feature + "=" + std::to_string(row[f])].push_back(
            reference.languages()[l].str());
      }
    }
  }
  auto jmm = diversity::jmm_report(cmp, ScoreName::jmm_syn);
  auto f = jmm.fields();
  f.gap = gap_report(cmp.dataset, cmp.reference, members);
  f.notes.push_back(dims == diversity::SynDims::per_feature
                        ? "one dimension per feature (count of 1s)"
                        : "two dimensions per feature (counts of 0s and 1s)");
  return {DiversityReport(std::move(f)), diversity::ti_syn_report(dataset),
          diversity::ti_syn_report(reference)};
}

FeatureMatrix select_languages(const FeatureMatrix& matrix, std::span<const IsoCode> keep,
                               std::vector<IsoCode>* missing) {
  const std::set<IsoCode> wanted(keep.begin(), keep.end());
  std::vector<IsoCode> langs;
  std::vector<int> values;
  std::set<IsoCode> found;
  for (std::size_t l = 0; l < matrix.language_count(); ++l) {
    if (!wanted.contains(matrix.languages()[l])) continue;
    langs.push_back(matrix.languages()[l]);
    found.insert(matrix.languages()[l]);
    const auto row = matrix.row(l);
    values.insert(values.end(), row.begin(), row.end());
  }
  if (missing) {
    for (const auto& iso : keep) {
      if (!found.contains(iso)) missing->push_back(iso);
    }
  }
  if (langs.empty()) throw InputError("none of the requested languages is in the matrix");
  std::vector<ValueRange> ranges;
  if (matrix.kind() == MatrixKind::morphological_ordinal) {
    for (std::size_t f = 0; f < matrix.feature_count(); ++f) ranges.push_back(matrix.range(f));
  }
  return FeatureMatrix(std::move(langs), matrix.features(), std::move(values), matrix.kind(),
                       std::move(ranges));
}

}  // namespace divscore::analysis
