#pragma once

// Brute-force size-normalised minmax Jaccard, written without any library
// code: bins by floor division, scales the smaller side by max/min, then sums
// min and max per bin. Long double throughout.

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

namespace oracle {

inline long double jmm(const std::vector<double>& a, const std::vector<double>& b, double width) {
  std::map<long long, long double> ca;
  std::map<long long, long double> cb;
  for (double v : a) ca[static_cast<long long>(std::floor(static_cast<long double>(v) / width))] += 1;
  for (double v : b) cb[static_cast<long long>(std::floor(static_cast<long double>(v) / width))] += 1;
  const long double na = a.size();
  const long double nb = b.size();
  const long double c = std::max(na, nb) / std::min(na, nb);
  long double num = 0;
  long double den = 0;
  std::map<long long, int> keys;
  for (auto& [k, v] : ca) keys[k] = 1;
  for (auto& [k, v] : cb) keys[k] = 1;
  for (auto& [k, unused] : keys) {
    long double x = ca.count(k) ? ca[k] : 0;
    long double y = cb.count(k) ? cb[k] : 0;
    if (na < nb) x *= c;
    if (nb < na) y *= c;
    num += std::min(x, y);
    den += std::max(x, y);
  }
  return num / den;
}

}  // namespace oracle
