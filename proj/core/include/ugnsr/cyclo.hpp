#pragma once

/**
 * @file cyclo.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(z8), z8 a primitive 8th
 *        root of unity (minimal polynomial x^4 + 1).
 *
 * The field houses both i = z8^2 and sqrt(2) = z8 - z8^3 in a single degree-4
 * extension of Q. Elements are kept in canonical reduced form
 * c0 + c1*z8 + c2*z8^2 + c3*z8^3 with rational ci.
 */

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "ugnsr/errors.hpp"

namespace ugnsr {

/// Exact rational numbers. GMP keeps gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;

class Cyclo {
public:
    Cyclo() = default;
    // GMP does not canonicalize two-argument constructions; do it here so a
    // Rational built as mpq_class(p, q) can never leak a non-reduced value in.
    Cyclo(const Rational& r) { c_[0] = r; c_[0].canonicalize(); } // NOLINT: implicit by design
    Cyclo(long n) { c_[0] = n; }                                  // NOLINT
    Cyclo(long num, long den) { c_[0] = Rational(num, den); c_[0].canonicalize(); }

    static Cyclo zeta(int k); ///< z8^k for any integer k (k may be negative)
    static Cyclo i() { return zeta(2); }
    static Cyclo sqrt2() { return zeta(1) - zeta(3); }

    const Rational& coeff(int k) const { return c_[k]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    const Rational& rational_part() const { return c_[0]; }

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    /// Multiplicative inverse; throws DivisionByZeroError on zero.
    Cyclo inverse() const;

    bool operator==(const Cyclo& o) const { return c_ == o.c_; }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    /// Galois conjugate z8 -> z8^k, k odd.
    Cyclo conjugate(int k) const;

    /// Numeric embedding with z8 = exp(i*pi/4).
    std::complex<double> to_complex() const;

    /// Canonical text form, e.g. "1/2", "z8^2", "1+ -...": see ratfunc printing
    /// for the composed grammar. Pure rationals print as plain fractions.
    std::string to_string() const;

private:
    std::array<Rational, 4> c_{}; // c0 + c1 z + c2 z^2 + c3 z^3, z^4 = -1
};

} // namespace ugnsr
