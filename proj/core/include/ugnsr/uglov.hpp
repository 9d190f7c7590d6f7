#pragma once

/**
 * @file uglov.hpp
 * @brief Uglov symmetric functions P^{(gamma,2)}_mu: the exact hbar -> 0 limit
 *        of P_mu(q,t) along q = -e^h, t = -e^{gamma h}, taken coefficient-wise
 *        in the m-basis. The first-order coefficient is retained so its
 *        vanishing (evenness of the substituted series) is literally testable.
 */

#include "ugnsr/macdonald.hpp"

namespace ugnsr {

struct UglovPoly {
    Partition mu;
    RatFunc gamma;        ///< the symbol gamma, or a rational specialization
    SymFunc expansion;    ///< p-basis, coefficients in Q(z8)(gamma)
    SymFunc m_expansion;  ///< m-basis, unitriangular
    SymFunc first_order;  ///< m-basis hbar^1 coefficient (identically zero)
};

/// Symbolic-gamma Uglov function for l = 2.
UglovPoly uglov(const Partition& mu, MacdonaldEngine& engine);

/// Specialization at rational gamma. Evaluation at a pole of some coefficient
/// raises PoleError naming the coefficient.
UglovPoly uglov_at(const Partition& mu, const Rational& gamma, MacdonaldEngine& engine);

} // namespace ugnsr
