#pragma once

#include <cstddef>
#include <vector>

#include "spectra/rational.hpp"

namespace oracle {

using spectra::Rat;
using Mat = std::vector<std::vector<Rat>>;

// Unipotent Jordan block: monodromy of the Atiyah bundle I_n.
inline Mat jordan(int n) {
  Mat m(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 1;
    if (i + 1 < n) m[i][i + 1] = 1;
  }
  return m;
}

inline Mat inverse_transpose_jordan(int n) {
  // J^{-1} has entries (-1)^{j-i} above the diagonal.
  Mat m(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) m[j][i] = (j - i) % 2 == 0 ? 1 : -1;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  const size_t n = a.size(), k = b.size();
  Mat out(n * k, std::vector<Rat>(n * k, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (a[i][j] != 0)
        for (size_t p = 0; p < k; ++p)
          for (size_t q = 0; q < k; ++q) out[i * k + p][j * k + q] = a[i][j] * b[p][q];
  return out;
}

inline size_t kernel_dim(Mat m) {
  const size_t n = m.size();
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < n; ++col) {
    size_t piv = rank;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    for (size_t i = 0; i < n; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const Rat f = m[i][col] / m[rank][col];
      for (size_t j = col; j < n; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return n - rank;
}

// Sections of a unipotent flat bundle are the invariants of its monodromy.
inline int invariants_end_twist(int a, int b) {
  Mat m = kron(kron(inverse_transpose_jordan(a), jordan(a)), jordan(b));
  for (size_t i = 0; i < m.size(); ++i) m[i][i] -= 1;
  return static_cast<int>(kernel_dim(m));
}

}  // namespace oracle
