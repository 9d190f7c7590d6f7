#pragma once

/**
 * @file fock.hpp
 * @brief The Heisenberg-Clifford-Clifford algebra on Lambda via the odd
 *        bosonization: boson modes a_n in the even power sums and the two
 *        fermion families (half-integer NS modes, integer R modes) as modes of
 *        vertex operators in the odd power sums.
 *
 * Half-integer mode indices are passed as twice their value ("twok"), so the
 * NS family uses odd twok and the R family even twok. The Lambda-degree shift
 * of f_k is -2k = -twok and of a_n is -2n.
 */

#include <vector>

#include "ugnsr/graded_op.hpp"

namespace ugnsr {

enum class Sector { NS, R };

inline const char* sector_name(Sector s) { return s == Sector::NS ? "NS" : "R"; }

/// Which fermion family: the NS fermion f^{NS}_r (r in Z+1/2) or the R
/// fermion f^{R}_k (k in Z). In sector S the "sector fermion" is the family
/// of the same name and the other family is f^add.
using FermionFamily = Sector;

struct FockParams {
    Sector sector = Sector::NS;
    RatFunc alpha = RatFunc::symbol(Sym::alpha); ///< value of a_0
    int epsilon = +1;                            ///< R-sector f_0 sign

    FermionFamily sector_fermion() const { return sector; }
    FermionFamily additional_fermion() const {
        return sector == Sector::NS ? Sector::R : Sector::NS;
    }
};

/// a_n: n > 0 -> -2*beta*n d/dp_{2n}; n < 0 -> -(1/(2 beta)) p_{2|n|};
/// a_0 -> alpha.
GradedOp boson_mode(int n, const FockParams& params);

/// Mode f_k (index given as twok = 2k) of the family's vertex current.
/// NS family requires odd twok, R family even twok.
GradedOp fermion_mode(FermionFamily family, int twok, const FockParams& params);

/// Parity operator (sqrt2/epsilon) f^R_0; squares to the identity.
GradedOp parity_op(const FockParams& params);

struct CheckCase {
    std::string id;
    bool pass = false;
    std::string details;
};

struct CheckReport {
    std::vector<CheckCase> cases;
    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

/// Verify [a_n,a_m] = n delta, {f_k,f_l} = delta, [a_n,f_k] = 0 for all modes
/// with |index| <= degree/2 on the monomial basis up to `degree`, exactly.
/// The cross-family anticommutators are computed and reported (never
/// asserted): their observed vanishing is informational.
CheckReport check_ccr(int degree, const FockParams& params);

/// Fock-basis character count per degree vs. the number of partitions.
CheckReport character_check(int max_degree);

} // namespace ugnsr
