#include "spectra/poly_matrix.hpp"

#include <utility>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

Poly exact_div(const Poly& p, const Poly& d) {
  auto q = divide_exact(p, d);
  if (!q) throw Falsification("matrix elimination: inexact division");
  return *q;
}

void remove_row_content(PolyVector& row) {
  Poly c;
  for (const auto& e : row) {
    if (e.is_zero()) continue;
    c = c.is_zero() ? e.monic() : gcd(c, e);
    if (c.is_constant()) return;
  }
  if (c.is_zero() || c.is_constant()) return;
  for (auto& e : row) e = exact_div(e, c);
}

struct Echelon {
  PolyMatrix rows;
  std::vector<int> pivot_cols;
};

/// Gauss-Jordan with cross multiplication; pivots restricted to the first
/// `columns` columns. Rows past the pivot rows are zero on those columns.
Echelon gauss_jordan(PolyMatrix m, int columns) {
  Echelon out;
  size_t next = 0;
  for (int c = 0; c < columns && next < m.size(); ++c) {
    size_t piv = next;
    while (piv < m.size() && m[piv][static_cast<size_t>(c)].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[next], m[piv]);
    const Poly p = m[next][static_cast<size_t>(c)];
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == next) continue;
      const Poly a = m[i][static_cast<size_t>(c)];
      if (a.is_zero()) continue;
      for (size_t j = 0; j < m[i].size(); ++j) m[i][j] = p * m[i][j] - a * m[next][j];
      remove_row_content(m[i]);
    }
    out.pivot_cols.push_back(c);
    ++next;
  }
  out.rows = std::move(m);
  return out;
}

Poly lcm(const Poly& a, const Poly& b) { return exact_div(a * b, gcd(a, b)); }

}  // namespace

Poly determinant(const PolyMatrix& m) {
  const size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  }
  if (n == 0) return Poly(1);
  PolyMatrix a = m;
  Poly prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t s = k + 1;
      while (s < n && a[s][k].is_zero()) ++s;
      if (s == n) return Poly();
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = Poly();
    }
    prev = a[k][k];
  }
  return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

std::vector<PolyVector> nullspace(const PolyMatrix& m, int columns) {
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != columns) throw DomainError("nullspace: ragged matrix");
  }
  const Echelon ech = gauss_jordan(m, columns);
  std::vector<bool> is_pivot(static_cast<size_t>(columns), false);
  for (int c : ech.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  Poly l(1);
  for (size_t i = 0; i < ech.pivot_cols.size(); ++i) {
    l = lcm(l, ech.rows[i][static_cast<size_t>(ech.pivot_cols[i])]);
  }
  std::vector<PolyVector> basis;
  for (int f = 0; f < columns; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    PolyVector vec(static_cast<size_t>(columns));
    vec[static_cast<size_t>(f)] = l;
    for (size_t i = 0; i < ech.pivot_cols.size(); ++i) {
      const Poly& p = ech.rows[i][static_cast<size_t>(ech.pivot_cols[i])];
      vec[static_cast<size_t>(ech.pivot_cols[i])] = -exact_div(ech.rows[i][static_cast<size_t>(f)] * l, p);
    }
    remove_row_content(vec);
    for (const auto& e : vec) {
      if (e.is_zero()) continue;
      const Rat scale = 1 / e.leading_coeff();
      for (auto& x : vec) x *= scale;
      break;
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

SolveResult solve_polynomial(const PolyMatrix& m, const PolyVector& rhs) {
  if (m.size() != rhs.size()) throw DomainError("solve: dimension mismatch");
  const int columns = m.empty() ? 0 : static_cast<int>(m[0].size());
  PolyMatrix aug = m;
  for (size_t i = 0; i < aug.size(); ++i) {
    if (static_cast<int>(aug[i].size()) != columns) throw DomainError("solve: ragged matrix");
    aug[i].push_back(rhs[i]);
  }
  const Echelon ech = gauss_jordan(std::move(aug), columns);
  SolveResult out;
  out.rank = static_cast<int>(ech.pivot_cols.size());
  out.unique = out.rank == columns;
  for (size_t i = ech.pivot_cols.size(); i < ech.rows.size(); ++i) {
    if (!ech.rows[i][static_cast<size_t>(columns)].is_zero()) {
      out.status = SolveStatus::inconsistent;
      return out;
    }
  }
  out.solution.assign(static_cast<size_t>(columns), Poly());
  for (size_t i = 0; i < ech.pivot_cols.size(); ++i) {
    const Poly& p = ech.rows[i][static_cast<size_t>(ech.pivot_cols[i])];
    auto q = divide_exact(ech.rows[i][static_cast<size_t>(columns)], p);
    if (!q) {
      out.status = SolveStatus::non_polynomial;
      out.solution.clear();
      return out;
    }
    out.solution[static_cast<size_t>(ech.pivot_cols[i])] = *q;
  }
  out.status = SolveStatus::ok;
  return out;
}

PolyVector mat_vec(const PolyMatrix& m, const PolyVector& y) {
  PolyVector out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(dot(row, y));
  return out;
}

Poly dot(const PolyVector& a, const PolyVector& b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  Poly acc;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

PolyMatrix transpose(const PolyMatrix& m, int columns) {
  PolyMatrix t(static_cast<size_t>(columns), PolyVector(m.size()));
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < static_cast<size_t>(columns); ++j) t[j][i] = m[i][j];
  }
  return t;
}

}  // namespace spectra
