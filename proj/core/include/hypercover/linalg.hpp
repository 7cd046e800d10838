#pragma once

#include "hypercover/matrix.hpp"

#include <optional>
#include <vector>

namespace hypercover {

// Rank over the rationals via fraction-free (Bareiss) elimination. Every
// intermediate value is a minor of the input, so nothing ever rounds.
std::size_t rank_exact(const IntMatrix& m);

// Determinant of a square matrix by fraction-free elimination. The empty
// 0x0 matrix has determinant 1.
Int determinant_exact(const IntMatrix& m);

// A canonical nonzero integer vector v with m*v = 0, or nullopt when the
// columns are independent. Deterministic: v corresponds to the first free
// column of the reduced echelon form, with denominators cleared.
std::optional<KernelVector> kernel_vector(const IntMatrix& m);

// True when the selected columns are linearly independent over the rationals.
// Indices out of range are a usage error.
bool columns_independent(const IntMatrix& m, const std::vector<std::size_t>& cols);

// Particular rational solution of m*z = rhs with free variables pinned to
// zero, or nullopt when the system is inconsistent. When the columns of m are
// independent the solution is the unique one.
std::optional<std::vector<Rat>> solve_particular(const IntMatrix& m,
                                                 const std::vector<Int>& rhs);

} // namespace hypercover
