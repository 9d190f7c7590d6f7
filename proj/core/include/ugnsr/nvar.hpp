#pragma once

/**
 * @file nvar.hpp
 * @brief Symmetric polynomials in finitely many variables x_1..x_N and the
 *        Macdonald difference operator, used as an oracle independent of the
 *        bosonized construction.
 */

#include <map>
#include <vector>

#include "ugnsr/symfunc.hpp"

namespace ugnsr {

/// Polynomial in x_1..x_N with RatFunc (q,t,...) coefficients.
class NVarPoly {
public:
    using Expo = std::vector<int>; // length N, non-negative
    using TermMap = std::map<Expo, RatFunc>;

    explicit NVarPoly(int n_vars) : n_(n_vars) {}
    static NVarPoly constant(int n_vars, const RatFunc& c);
    static NVarPoly variable(int n_vars, int i, int e = 1);

    int n_vars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Expo& e, const RatFunc& c);

    NVarPoly operator-() const;
    NVarPoly& operator+=(const NVarPoly& o);
    NVarPoly& operator-=(const NVarPoly& o);
    friend NVarPoly operator+(NVarPoly a, const NVarPoly& b) { return a += b; }
    friend NVarPoly operator-(NVarPoly a, const NVarPoly& b) { return a -= b; }
    friend NVarPoly operator*(const NVarPoly& a, const NVarPoly& b);
    NVarPoly& scale(const RatFunc& c);

    bool operator==(const NVarPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const NVarPoly& o) const { return !(*this == o); }

    /// x_i -> factor * x_i (the q-shift operator T_{q,x_i} with factor = q).
    NVarPoly shift_var(int i, const RatFunc& factor) const;

    /// True if invariant under all transpositions of adjacent variables.
    bool is_symmetric() const;

    /// Exact division; throws ContractViolation when not exact.
    static NVarPoly exact_div(const NVarPoly& a, const NVarPoly& b);

    /// Collect a symmetric polynomial into monomial-basis coordinates
    /// (coefficient of the weakly-decreasing representative per orbit).
    std::map<Partition, RatFunc> to_m_coords() const;

    std::string to_string() const;

private:
    int n_;
    TermMap terms_;
};

/// Natural projection pi_N: substitute p_k -> x_1^k + ... + x_N^k.
/// Input is a SymFunc in the p-basis.
NVarPoly project_to_n_vars(const SymFunc& f, int n_vars);

/// m_mu in N variables (zero when the partition is longer than N).
NVarPoly monomial_sym_poly(const Partition& mu, int n_vars);

/// The Macdonald difference operator D_{q,t} = sum_i prod_{j != i}
/// (t x_i - x_j)/(x_i - x_j) T_{q,x_i}, exactly. The input must be symmetric;
/// a failed exact division raises ContractViolation.
NVarPoly apply_D_N(const NVarPoly& f);

/// Finite-N Macdonald eigenvalue E_{mu,N} = sum_{j=1}^N q^{mu_j} t^{N-j}.
RatFunc macdonald_eigenvalue_n(const Partition& mu, int n_vars);

} // namespace ugnsr
