#pragma once

/**
 * @file vertex.hpp
 * @brief Mode extraction for normal-ordered vertex operators of the shape
 *
 *            C * exp( sum_j A_j p_j z^j ) * exp( sum_j B_j d/dp_j z^{-j} )
 *
 * acting on Lambda in the p-basis. On a homogeneous input of degree d only
 * finitely many expansion terms act: the derivative exponential contributes
 * partitions nu with |nu| <= d, the multiplication exponential partitions
 * kappa with |kappa| = m + |nu| for the z^m coefficient.
 */

#include <map>

#include "ugnsr/symfunc.hpp"

namespace ugnsr {

struct VertexOp {
    RatFunc prefactor{1L};
    std::map<int, RatFunc> up;   ///< A_j: coefficient of p_j z^j in the left exponent
    std::map<int, RatFunc> down; ///< B_j: coefficient of d/dp_j z^{-j} in the right exponent
};

/// Apply the z^m coefficient of the vertex operator to f (any mixed-degree f).
SymFunc vertex_mode_apply(const VertexOp& op, int m, const SymFunc& f);

/// exp(sum A_j p_j) expansion weights: maps each partition kappa with parts in
/// supp(A) and |kappa| = w to prod A_{kappa_i} / prod mult_j(kappa)!.
std::map<Partition, RatFunc> exp_weights(const std::map<int, RatFunc>& coeffs, int w);

} // namespace ugnsr
