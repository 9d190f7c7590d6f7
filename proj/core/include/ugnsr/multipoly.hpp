#pragma once

/**
 * @file multipoly.hpp
 * @brief Multivariate polynomials over Q(z8) in the fixed ordered symbol set
 *        {q, t, qh, th, u, alpha, beta, gamma} (qh, th are the dedicated
 *        half-power symbols with q = qh^2, t = th^2 by explicit substitution
 *        only). Exponents are non-negative; negative powers live in RatFunc.
 *
 * Terms are kept in graded-lexicographic order; the leading term under that
 * order is the normalization anchor for monic denominators and gcds.
 */

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ugnsr/cyclo.hpp"

namespace ugnsr {

enum class Sym : unsigned char { q = 0, t, qh, th, u, alpha, beta, gamma };

inline constexpr std::size_t kNumSyms = 8;

const char* sym_name(Sym s);
std::optional<Sym> sym_from_name(const std::string& name);

using ExpVec = std::array<std::uint16_t, kNumSyms>;

inline unsigned total_degree(const ExpVec& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

/// Graded lex: total degree first, ties broken lexicographically on the
/// exponent vector in the fixed symbol order.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Cyclo, GrlexLess>;

    MultiPoly() = default;
    MultiPoly(const Cyclo& c);    // NOLINT: implicit constant
    MultiPoly(const Rational& r) : MultiPoly(Cyclo(r)) {}
    MultiPoly(long n) : MultiPoly(Cyclo(n)) {}
    static MultiPoly symbol(Sym s, unsigned e = 1);
    static MultiPoly term(const Cyclo& c, const ExpVec& e);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Cyclo constant_term() const;
    bool is_one() const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Leading (grlex-largest) term. Precondition: nonzero.
    const std::pair<const ExpVec, Cyclo>& leading() const { return *terms_.rbegin(); }

    unsigned degree() const; ///< total degree, 0 for the zero polynomial
    unsigned degree_in(Sym s) const;
    bool depends_on(Sym s) const { return degree_in(s) > 0; }
    std::vector<Sym> active_symbols() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly& mul_scalar(const Cyclo& c);

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Exact division; throws ContractViolation when the division is not exact.
    static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);
    /// Division attempt without exceptions; nullopt when not exact.
    static std::optional<MultiPoly> try_div(const MultiPoly& a, const MultiPoly& b);

    /// Monic (leading coefficient 1 in grlex) gcd. Bivariate inputs go through
    /// evaluation/interpolation with trial-division verification; deeper
    /// symbol counts through a subresultant PRS.
    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

    /// Substitute a numeric value for every symbol (z8 -> exp(i pi/4)).
    std::complex<double> eval_complex(const std::array<std::complex<double>, kNumSyms>& vals) const;

    std::string to_string() const;

private:
    void add_term(const ExpVec& e, const Cyclo& c);

    // Dense view in one symbol: coefficients of s^0..s^deg as polynomials
    // in the remaining symbols.
    static std::vector<MultiPoly> coeffs_in(const MultiPoly& p, Sym s);
    static MultiPoly from_coeffs_in(const std::vector<MultiPoly>& cs, Sym s);
    static MultiPoly content_in(const MultiPoly& p, Sym s);
    static MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b, Sym s);
    static MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, Sym s);
    static MultiPoly gcd_brown_bivariate(const MultiPoly& a, const MultiPoly& b, Sym x, Sym y);
    static MultiPoly gcd_subresultant(const MultiPoly& a, const MultiPoly& b, Sym s);

    friend class RatFunc;

    TermMap terms_;
};

} // namespace ugnsr
