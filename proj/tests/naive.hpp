#pragma once

// Straight-from-the-definition reference used by the tests: every permutation of 1..n,
// filtered for 132, quadrants counted point by point. Shares nothing with the library's
// enumerator or its match counting.

#include <algorithm>
#include <array>
#include <map>
#include <vector>

namespace naive {

// -1 stands for an empty quadrant.
using Pattern = std::array<int, 4>;

inline bool avoids_132(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (v[i] < v[k] && v[k] < v[j]) return false;
  return true;
}

inline std::vector<std::vector<int>> avoiders(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    if (avoids_132(v)) out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline int count(const std::vector<int>& v, const Pattern& p) {
  const int n = static_cast<int>(v.size());
  int total = 0;
  for (int i = 0; i < n; ++i) {
    std::array<int, 4> q{};
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const bool right = j > i, above = v[j] > v[i];
      if (right && above) ++q[0];
      if (!right && above) ++q[1];
      if (!right && !above) ++q[2];
      if (right && !above) ++q[3];
    }
    bool ok = true;
    for (int c = 0; c < 4; ++c) ok = ok && (p[c] < 0 ? q[c] == 0 : q[c] >= p[c]);
    total += ok;
  }
  return total;
}

// Coefficient list of Q_n(x), ascending powers, trailing zeros trimmed.
inline std::vector<long long> Q(int n, const Pattern& p) {
  std::vector<long long> c;
  for (const auto& v : avoiders(n)) {
    const int k = count(v, p);
    if (static_cast<int>(c.size()) <= k) c.resize(k + 1);
    ++c[k];
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace naive
