#include "nkc/linear.hpp"

#include "nkc/error.hpp"

namespace nkc {

std::optional<LinearSolution> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Scalar> b,
                                           std::size_t unknowns) {
  if (a.size() != b.size()) throw InternalError("solve_linear: row count mismatch");
  for (const auto& row : a) {
    if (row.size() != unknowns) throw InternalError("solve_linear: column count mismatch");
  }
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = Rational(1) / a[r][col];
    for (auto& x : a[r]) x *= inv;
    b[r] = b[r].scaled(inv);
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || a[q][col].is_zero()) continue;
      const Rational f = a[q][col];
      for (std::size_t c = 0; c < unknowns; ++c) a[q][c] -= f * a[r][c];
      b[q] -= b[r].scaled(f);
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q) {
    if (!b[q].is_zero()) return std::nullopt;
  }

  LinearSolution out;
  out.particular.assign(unknowns, Scalar());
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) out.particular[pivot_cols[k]] = b[k];

  std::vector<bool> is_pivot(unknowns, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(unknowns, Rational(0));
    v[free] = Rational(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a[k][free];
    out.null_basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace nkc
