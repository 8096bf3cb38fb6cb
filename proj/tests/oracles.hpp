#pragma once

#include <algorithm>
#include <vector>

#include "mpgerm/symrep.hpp"

namespace mpgerm::oracle {

// Permutation with the given cycle type, cycles on consecutive points.
inline std::vector<int> representative(const Partition& lambda) {
  std::vector<int> w;
  int start = 0;
  for (int len : lambda.parts) {
    for (int i = 0; i < len; ++i) w.push_back(start + (i + 1) % len);
    start += len;
  }
  return w;
}

// Row assignments of {0..k-1} with row sizes lambda fixed by w.
inline long fixed_tabloids(const Partition& lambda, const std::vector<int>& w) {
  const int k = lambda.size();
  std::vector<int> rows;
  for (std::size_t r = 0; r < lambda.parts.size(); ++r) rows.insert(rows.end(), lambda.parts[r], static_cast<int>(r));
  std::sort(rows.begin(), rows.end());
  long count = 0;
  do {
    bool fixed = true;
    for (int i = 0; i < k && fixed; ++i) fixed = rows[i] == rows[w[i]];
    count += fixed;
  } while (std::next_permutation(rows.begin(), rows.end()));
  return count;
}

// Irreducible characters from permutation modules by Gram-Schmidt along
// lexicographic order.
inline std::vector<std::vector<Rational>> oracle_table(int k) {
  auto parts = partitions(k);
  std::vector<Partition> cls(parts.rbegin(), parts.rend());
  std::vector<long> sizes;
  for (const auto& c : cls) sizes.push_back(class_size(c));
  auto inner = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += sizes[i] * a[i] * b[i];
    return Rational(s / factorial(k));
  };
  std::vector<std::vector<Rational>> chars;
  for (const auto& lambda : parts) {
    std::vector<Rational> m;
    for (const auto& c : cls) m.emplace_back(fixed_tabloids(lambda, representative(c)));
    for (const auto& prev : chars) {
      Rational mult = inner(m, prev);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] -= mult * prev[i];
    }
    chars.push_back(m);
  }
  return chars;
}

}  // namespace mpgerm::oracle
