#pragma once

/**
 * @file qvir.hpp
 * @brief The q-Virasoro current T(z) on Lambda in the half-power symbols
 *        qh, th (q = qh^2, t = th^2) with the Fock parameter u, its singular
 *        vectors at u = u_{r,s}, the hbar-expansion to the NSR + fermion
 *        currents in both sectors, and the Macdonald-operator decomposition
 *        and eigenvalue expansions.
 */

#include "ugnsr/nsr.hpp"

namespace ugnsr {

struct QVirParams {
    RatFunc u = RatFunc::symbol(Sym::u);
};

/// u_{r,s} = t^{(1+s)/2} q^{-(1+r)/2} = th^{1+s} / qh^{1+r}.
RatFunc u_rs(int r, int s);

/// Structure-function coefficients f_0..f_{order-1} of
/// f(z) = exp( sum (1/n) (1-q^n)(t^n-1)/(t^n+q^n) z^n ), two algorithms.
std::vector<RatFunc> structure_function_coeffs(int order);        ///< exp ODE recurrence
std::vector<RatFunc> structure_function_coeffs_direct(int order); ///< partition sums

/// T_n = [z^{-n}] T(z), exact on Lambda^{<= max_degree - ...}; the operator
/// lowers degree by n.
GradedOp T_mode(int n, const QVirParams& params);

/// T_n P_{(r^s)}(q,t) = 0 for 1 <= n <= rs at u = u_{r,s}, symbolic qh, th.
CheckReport verify_qvir_singular(int r, int s, MacdonaldEngine& engine);

using OpMatrix = std::vector<std::vector<RatFunc>>;

struct CurrentExpansion {
    /// order-0/order-1 matrices of q^{-1/2} t^{1/2} u^{-1} T_n keyed by
    /// (mode n, input degree); entries over Q(z8)(alpha, beta)
    std::map<std::pair<int, int>, OpMatrix> order0, order1;
    CheckReport report; ///< agreement with the printed T0/T1 current formulas
};

/// Expand the rescaled current at qh -> i e^{h/2}, th -> i e^{h/(2 beta^2)}
/// and the sector branch of u, and compare mode matrices with the printed
/// T0/T1 fermion + NSR formulas on Lambda^{<= max_degree}.
CurrentExpansion expand_T_current(Sector sector, int max_degree);

/// [z^0] eta(z) = sum_{n>=0} psi_{-n} T_n - q^{-1} t u^{-2} as an exact
/// operator identity on Lambda^{<= max_degree}, symbolic qh, th, u.
CheckReport macdonald_decomposition_check(int max_degree);

/// Closed-form eigenvalue expansions of the Macdonald operator at the limit.
Rational e0_closed(const Partition& mu);
RatFunc e1_closed(const Partition& mu); ///< coefficients in gamma

/// Order-0/order-1 action of [z^0] eta(z) on P^{gamma,2}_{(r^s)} against the
/// closed forms; in the R sector additionally extracts the G_0 eigenvalue and
/// checks the (-1)^s epsilon sign.
CheckReport limit_eigenvalue_check(int r, int s, int epsilon, MacdonaldEngine& engine);

} // namespace ugnsr
