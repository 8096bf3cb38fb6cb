#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "mpgerm/poly.hpp"
#include "mpgerm/rational.hpp"

namespace mpgerm {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by exact Gaussian elimination.
inline std::size_t rank(RationalMatrix a) {
  std::size_t rows = a.size();
  if (rows == 0) return 0;
  std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Linear parts of the polynomials at the origin, one row per polynomial.
inline RationalMatrix linear_parts(const std::vector<MultiPoly>& polys, std::size_t nvars) {
  RationalMatrix m(polys.size(), std::vector<Rational>(nvars));
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t v = 0; v < nvars; ++v)
      m[i][v] = polys[i].coefficient(Monomial::variable(nvars, v));
  return m;
}

inline std::size_t jacobian_rank_at_origin(const std::vector<MultiPoly>& polys, std::size_t nvars) {
  return rank(linear_parts(polys, nvars));
}

/// Determinant of the square submatrix with rows 0..k-1 and the given
/// columns, by cofactor expansion memoised on column subsets.
inline MultiPoly minor(const std::vector<std::vector<MultiPoly>>& m,
                       const std::vector<std::size_t>& cols) {
  const std::size_t k = cols.size();
  if (k == 0) throw DomainError("minor: empty column set");
  const VarSet::Ptr& vars = m[0][0].var_ptr();
  std::map<std::uint32_t, MultiPoly> memo;
  // det of rows [row..k) using the column positions in mask.
  std::function<MultiPoly(std::size_t, std::uint32_t)> det = [&](std::size_t row,
                                                                  std::uint32_t mask) {
    if (row == k) return MultiPoly::constant(vars, 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    MultiPoly r(vars);
    int sign = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (!(mask & (1u << j))) continue;
      const MultiPoly& e = m[row][cols[j]];
      if (!e.is_zero()) {
        MultiPoly sub = det(row + 1, mask & ~(1u << j));
        if (sign > 0) {
          r += e * sub;
        } else {
          r -= e * sub;
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, r);
    return r;
  };
  return det(0, (k == 32) ? 0xFFFFFFFFu : ((1u << k) - 1));
}

/// All maximal minors of a k x N polynomial matrix (k <= N), nonzero ones only.
inline std::vector<MultiPoly> maximal_minors(const std::vector<std::vector<MultiPoly>>& m,
                                             std::size_t ncols) {
  std::vector<MultiPoly> out;
  const std::size_t k = m.size();
  if (k == 0 || k > ncols) return out;
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  for (;;) {
    MultiPoly d = minor(m, cols);
    if (!d.is_zero()) out.push_back(std::move(d));
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == ncols - k + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return out;
}

}  // namespace mpgerm
