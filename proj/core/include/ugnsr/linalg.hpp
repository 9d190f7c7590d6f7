#pragma once

/**
 * @file linalg.hpp
 * @brief Exact linear algebra over the rational-function field: fraction-free
 *        (Bareiss) elimination with minimal-degree pivoting and nullspace
 *        extraction. Shared by the Verma singular-vector solver and the
 *        difference-operator eigenvector oracle.
 */

#include <vector>

#include "ugnsr/ratfunc.hpp"

namespace ugnsr {

using RatMatrix = std::vector<std::vector<RatFunc>>;
using RatVector = std::vector<RatFunc>;

/// Basis of the right nullspace { x : A x = 0 }.
std::vector<RatVector> nullspace(const RatMatrix& a);

/// A * x for a rows-by-cols matrix.
RatVector mat_vec(const RatMatrix& a, const RatVector& x);

} // namespace ugnsr
