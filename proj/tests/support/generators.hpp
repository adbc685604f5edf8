#pragma once

// Hand-rolled random input generators for property tests. Every generator
// takes the engine so a failing case can be replayed from its seed.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "divscore/core.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// 1..max_n values spread over at most max_bins distinct unit bins in [0, 15).
inline std::vector<double> measurements(Rng& rng, int max_n = 10, int max_bins = 6) {
  std::vector<int> bins;
  const int nb = uniform_int(rng, 1, max_bins);
  for (int i = 0; i < nb; ++i) bins.push_back(uniform_int(rng, 0, 14));
  std::vector<double> out;
  const int n = uniform_int(rng, 1, max_n);
  for (int i = 0; i < n; ++i) {
    const int k = bins[static_cast<std::size_t>(uniform_int(rng, 0, nb - 1))];
    // occasionally land exactly on a bin edge
    out.push_back(uniform_int(rng, 0, 4) == 0 ? static_cast<double>(k)
                                              : k + uniform_real(rng, 0.0, 1.0));
  }
  return out;
}

inline std::string iso_for(int i) {
  std::string s = "aaa";
  s[2] = static_cast<char>('a' + i % 26);
  s[1] = static_cast<char>('a' + (i / 26) % 26);
  s[0] = static_cast<char>('a' + (i / 676) % 26);
  return s;
}

inline divscore::FeatureMatrix binary_matrix(Rng& rng, int languages, int features,
                                             double p_one = 0.5) {
  std::vector<divscore::IsoCode> langs;
  for (int i = 0; i < languages; ++i) langs.emplace_back(iso_for(i));
  std::vector<std::string> feats;
  for (int f = 0; f < features; ++f) feats.push_back("F" + std::to_string(f));
  std::bernoulli_distribution coin(p_one);
  std::vector<int> values;
  for (int i = 0; i < languages * features; ++i) values.push_back(coin(rng) ? 1 : 0);
  return divscore::FeatureMatrix(langs, feats, values, divscore::MatrixKind::binary_syntactic);
}

inline divscore::FeatureMatrix flipped(const divscore::FeatureMatrix& m) {
  std::vector<int> values;
  for (std::size_t l = 0; l < m.language_count(); ++l) {
    for (int v : m.row(l)) values.push_back(1 - v);
  }
  return divscore::FeatureMatrix(m.languages(), m.features(), values, m.kind());
}

}  // namespace gen
