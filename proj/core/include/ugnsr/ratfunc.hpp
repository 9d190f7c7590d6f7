#pragma once

/**
 * @file ratfunc.hpp
 * @brief Rational functions num/den over Q(z8) in the fixed symbol set.
 *
 * Canonical form: gcd(num, den) = 1 and den monic under graded-lex, so
 * equality is structural. All operations return canonical values.
 */

#include <complex>
#include <map>
#include <string>

#include "ugnsr/multipoly.hpp"

namespace ugnsr {

class RatFunc {
public:
    RatFunc() : num_(), den_(Cyclo(1L)) {}
    RatFunc(const MultiPoly& p) : num_(p), den_(Cyclo(1L)) {} // NOLINT
    RatFunc(const Cyclo& c) : num_(c), den_(Cyclo(1L)) {}     // NOLINT
    RatFunc(const Rational& r) : num_(Cyclo(r)), den_(Cyclo(1L)) {} // NOLINT
    RatFunc(long n) : num_(Cyclo(n)), den_(Cyclo(1L)) {}            // NOLINT
    RatFunc(long n, long d) : RatFunc(Rational(n, d)) { canon(); }
    RatFunc(MultiPoly num, MultiPoly den);

    static RatFunc symbol(Sym s, int e = 1); ///< s^e, e may be negative
    static RatFunc i() { return RatFunc(MultiPoly(Cyclo::i())); }
    static RatFunc sqrt2() { return RatFunc(MultiPoly(Cyclo::sqrt2())); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Precondition: is_constant().
    Cyclo constant_value() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    RatFunc inverse() const;
    RatFunc pow(int e) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    /// Deterministic total order (for use as a map key).
    bool operator<(const RatFunc& o) const;

    bool depends_on(Sym s) const { return num_.depends_on(s) || den_.depends_on(s); }
    unsigned total_degree() const { return num_.degree() + den_.degree(); }

    /// Substitute value for one symbol; exact. Throws PoleError if the
    /// denominator vanishes identically under the substitution.
    RatFunc substitute(Sym s, const RatFunc& value) const;
    /// Simultaneous substitution for several symbols.
    RatFunc substitute(const std::map<Sym, RatFunc>& values) const;

    /// Numeric embedding (z8 = exp(i pi/4)); unset symbols default to 0.
    std::complex<double> eval_complex(const std::map<Sym, std::complex<double>>& vals) const;

    /// Canonical text form: "num" when den == 1, otherwise "(num)/(den)".
    std::string to_string() const;
    /// Parse the canonical grammar (also accepts general +,-,*,/,^ expressions
    /// over integers, z8 and symbol names). Throws Error on bad syntax.
    static RatFunc parse(const std::string& text);

private:
    void canon();

    MultiPoly num_, den_;
};

} // namespace ugnsr
