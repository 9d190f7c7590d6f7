#pragma once

/**
 * @file symfunc.hpp
 * @brief The graded ring Lambda of symmetric functions with RatFunc
 *        coefficients. The internal canonical basis is the power-sum basis
 *        p_mu; the monomial basis exists through cached per-degree transition
 *        matrices.
 */

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ugnsr/partition.hpp"
#include "ugnsr/ratfunc.hpp"

namespace ugnsr {

enum class Basis { p, m };

/// A finite linear combination of basis elements indexed by partitions.
/// Which basis the indices refer to is contextual; library functions state it.
class SymFunc {
public:
    using TermMap = std::map<Partition, RatFunc>;

    SymFunc() = default;
    static SymFunc one() { return SymFunc::single(Partition{}, RatFunc(1L)); }
    static SymFunc p(int k); ///< the power sum p_k
    static SymFunc single(const Partition& mu, const RatFunc& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of the given partition (zero if absent).
    RatFunc coeff(const Partition& mu) const;
    void set_coeff(const Partition& mu, const RatFunc& c);

    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.weight(); }
    bool is_homogeneous(int* degree = nullptr) const;
    SymFunc homogeneous_part(int d) const;

    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    SymFunc& scale(const RatFunc& c);
    friend SymFunc operator*(const RatFunc& c, SymFunc f) { return f.scale(c); }

    /// Product in the p-basis (p_mu * p_nu = p_{mu union nu}).
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);

    /// Multiplication by p_k and the derivation d/dp_k, both in the p-basis.
    SymFunc mul_p(int k) const;
    SymFunc d_p(int k) const;

    /// Apply fn to every coefficient (dropping resulting zeros).
    SymFunc map_coeffs(const std::function<RatFunc(const RatFunc&)>& fn) const;

    bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    /// "c * p[mu] + ..." rendering with partitions as comma lists.
    std::string to_string(const std::string& letter = "p") const;

private:
    TermMap terms_;
};

/// Exact base change between the p and m bases; round trips are the identity.
/// Degrees above `max_degree` raise CapacityError (default cap 24).
SymFunc basis_change(const SymFunc& f, Basis from, Basis to, int max_degree = 24);

/// Macdonald q,t scalar product; f and g in the p-basis.
/// <p_lam, p_mu> = delta * z_lam * prod_i (1-q^{lam_i})/(1-t^{lam_i}).
RatFunc macdonald_inner(const SymFunc& f, const SymFunc& g);

/// If g == c * f for a single constant c (both nonzero), return c.
/// Returns nullopt when not proportional or either side is zero.
std::optional<RatFunc> proportionality_constant(const SymFunc& f, const SymFunc& g);

} // namespace ugnsr
