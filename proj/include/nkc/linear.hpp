#pragma once

#include "nkc/rational.hpp"
#include "nkc/scalar.hpp"

#include <optional>
#include <vector>

namespace nkc {

// Affine solution set x = particular + sum t_k null_basis[k].
struct LinearSolution {
  std::vector<Scalar> particular;
  std::vector<std::vector<Rational>> null_basis;
};

// Solves A x = b for A with rational entries and b with Scalar entries by
// Gauss-Jordan elimination. Free variables are set to zero in the particular
// solution. Returns nullopt when some reduced equation reads 0 = nonzero.
std::optional<LinearSolution> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Scalar> b,
                                           std::size_t unknowns);

}  // namespace nkc
