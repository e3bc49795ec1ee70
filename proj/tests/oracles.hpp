#pragma once

// Reference computations kept apart from the library code paths: ranks are
// taken over Q instead of F_p, restrictions are found by walking basis
// chains, dominance uses partial sums of sorted parts.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

using Int = std::int64_t;
using Matrix = std::vector<std::vector<Int>>;

inline int rational_rank(const Matrix& in) {
  using Q = boost::rational<Int>;
  std::vector<std::vector<Q>> m;
  for (const auto& row : in) m.emplace_back(row.begin(), row.end());
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c].numerator() == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].numerator() == 0) continue;
      Q f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Block-diagonal nilpotent matrix with the given block sizes.
inline Matrix block_matrix(const std::vector<int>& blocks) {
  int n = 0;
  for (int b : blocks) n += b;
  Matrix m(n, std::vector<Int>(n, 0));
  int off = 0;
  for (int b : blocks) {
    for (int k = 0; k + 1 < b; ++k) m[off + k + 1][off + k] = 1;
    off += b;
  }
  return m;
}

// Jordan multiplicities a_1..a_bound of a nilpotent integer matrix, over Q.
inline std::vector<Int> jordan_over_q(const Matrix& n, int bound) {
  const int dim = static_cast<int>(n.size());
  std::vector<int> r(bound + 2, 0);
  r[0] = dim;
  Matrix acc = n;
  for (int k = 1; k <= bound + 1; ++k) {
    r[k] = rational_rank(acc);
    acc = multiply(acc, n);
  }
  std::vector<Int> a(bound);
  for (int i = 1; i <= bound; ++i) a[i - 1] = r[i - 1] - 2 * r[i] + r[i + 1];
  return a;
}

inline int matrix_rank_of_power(const std::vector<int>& blocks, int m) {
  if (m == 0) {
    int n = 0;
    for (int b : blocks) n += b;
    return n;
  }
  Matrix base = block_matrix(blocks);
  Matrix acc = base;
  for (int k = 1; k < m; ++k) acc = multiply(acc, base);
  return rational_rank(acc);
}

// Chain decomposition of a single block [i] under t -> t^j.
inline std::vector<Int> restrict_by_chains(int i, int j, int bound) {
  std::vector<Int> a(bound, 0);
  for (int start = 0; start < std::min(i, j); ++start) {
    int len = 0;
    for (int v = start; v < i; v += j) ++len;
    a[len - 1] += 1;
  }
  return a;
}

// Parts in descending order.
inline std::vector<int> parts(const std::vector<Int>& mult) {
  std::vector<int> out;
  for (int i = static_cast<int>(mult.size()); i >= 1; --i)
    for (Int k = 0; k < mult[i - 1]; ++k) out.push_back(i);
  return out;
}

// Classic dominance of partitions of the same size:
// 1 a dominates b, -1 b dominates a, 0 equal, 2 incomparable.
inline int classic_dominance(std::vector<int> a, std::vector<int> b) {
  std::size_t len = std::max(a.size(), b.size());
  a.resize(len, 0);
  b.resize(len, 0);
  Int sa = 0, sb = 0;
  bool ge = true, le = true;
  for (std::size_t k = 0; k < len; ++k) {
    sa += a[k];
    sb += b[k];
    if (sa < sb) ge = false;
    if (sa > sb) le = false;
  }
  if (ge && le) return 0;
  if (ge) return 1;
  if (le) return -1;
  return 2;
}

inline std::vector<Int> random_mult(std::mt19937_64& rng, int p, int max_entry) {
  std::uniform_int_distribution<Int> d(0, max_entry);
  std::vector<Int> m(p);
  for (auto& x : m) x = d(rng);
  return m;
}

}  // namespace oracle
