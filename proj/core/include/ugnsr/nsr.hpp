#pragma once

/**
 * @file nsr.hpp
 * @brief NSR (super-Virasoro) generators L_n, G_k on Lambda through the
 *        free-field formulas L(z) = 1/2 :a(z)^2: + rho da(z) + 1/2 :df(z)f(z):
 *        and G(z) = f(z)a(z) + 2 rho df(z), with the sector fermion family.
 *
 * Mode formulas are derived from the currents with annihilators normal-ordered
 * to the right (fermionic swap signs; in the R sector f_0 sits to the right of
 * creation modes and :f_0 f_0: = 0, which puts the zero-point constant 1/16
 * into L_0). Their correctness is enforced by check_nsr_relations, not
 * assumed.
 */

#include "ugnsr/fock.hpp"
#include "ugnsr/uglov.hpp"

namespace ugnsr {

struct NSRContext {
    FockParams params;
    RatFunc rho;   ///< (beta - beta^{-1})/2
    RatFunc c;     ///< 3/2 - 12 rho^2
    RatFunc delta; ///< (alpha^2 - 2 rho alpha)/2 + (1 - 2 delta_sector)/16
};

NSRContext make_nsr_context(Sector sector, const RatFunc& alpha, int epsilon);

/// Highest-weight data of the (r,s) degenerate module.
struct HighestWeightData {
    int r = 0, s = 0;
    Sector sector = Sector::NS; ///< from the parity of r - s
    RatFunc alpha_rs;           ///< (1+r) beta/2 - (1+s)/(2 beta)
    RatFunc delta_rs;
    RatFunc lambda_rs;          ///< R sector only (zero in NS)
};

HighestWeightData highest_weight_data(int r, int s, int epsilon);

GradedOp L_mode(int n, const NSRContext& ctx);
/// G_k with twok = 2k; NS sector needs odd twok, R sector even twok.
GradedOp G_mode(int twok, const NSRContext& ctx);

/// NSR1-NSR3 as exact matrix identities on Lambda^{<= degree} for all index
/// pairs with |m|,|n|,|k|,|l| <= degree/2.
CheckReport check_nsr_relations(Sector sector, int degree);

/// Main-theorem annihilation checks on P := P^{1/beta^2,2}_{(r^s)}:
///   f^add_k P = 0 (0 < k <= rs/2 + 1),  G_k P = 0 (0 < k <= rs),
///   L_n P = 0 (0 < n <= rs), and in the R sector the G_0 eigenvalue
///   (-1)^s eps (r beta + s/beta) / (2 sqrt2). NS-sector parity is also
///   verified when r, s have equal parity.
CheckReport verify_singular_uglov(int r, int s, int epsilon, MacdonaldEngine& engine);

} // namespace ugnsr
