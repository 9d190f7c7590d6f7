#pragma once

/**
 * @file hbar.hpp
 * @brief Truncated power series in the expansion parameter hbar with RatFunc
 *        coefficients, plus the symbol -> series substitution that realizes
 *        limits of the form q = -exp(hbar), t = -exp(gamma*hbar).
 *
 * A series knows the coefficients of hbar^k for lead <= k < trunc; terms of
 * order >= trunc are unknown. The lead may be negative (a pole): limit_h0
 * reports the pole order instead of a value in that case.
 */

#include <map>
#include <vector>

#include "ugnsr/ratfunc.hpp"

namespace ugnsr {

class HbarSeries {
public:
    /// Exact (never-truncated) series are tagged with this order.
    static constexpr int kExact = 1 << 20;

    HbarSeries() : lead_(kExact), trunc_(kExact) {} ///< exact zero
    static HbarSeries constant(const RatFunc& c);
    static HbarSeries from_coeffs(std::vector<RatFunc> coeffs, int lead, int trunc);

    int lead() const { return lead_; }
    int truncation() const { return trunc_; }
    bool known_zero() const { return coef_.empty(); } ///< zero up to the truncation
    bool is_monomial() const { return coef_.size() == 1; }
    /// Forget coefficients at or above `order`.
    HbarSeries truncated(int order) const;

    /// Coefficient of hbar^k; zero below the lead, IncreaseTruncationError at
    /// or above the truncation order (unless the series is exact).
    RatFunc coeff(int k) const;

    HbarSeries operator-() const;
    friend HbarSeries operator+(const HbarSeries& a, const HbarSeries& b);
    friend HbarSeries operator-(const HbarSeries& a, const HbarSeries& b);
    friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b);
    HbarSeries& operator+=(const HbarSeries& o) { return *this = *this + o; }
    HbarSeries& operator*=(const HbarSeries& o) { return *this = *this * o; }

    /// Inverse; requires a nonzero known part (else IncreaseTruncationError).
    HbarSeries inverse() const;
    friend HbarSeries operator/(const HbarSeries& a, const HbarSeries& b) {
        return a * b.inverse();
    }
    HbarSeries pow(int e) const;

    std::string to_string() const;

private:
    void normalize();

    int lead_;
    int trunc_;
    std::vector<RatFunc> coef_; // coef_[j] multiplies hbar^(lead_+j); size = trunc_-lead_
};

/// exp(c * hbar) truncated at order n.
HbarSeries exp_hbar(const RatFunc& c, int order);

using HbarRules = std::map<Sym, HbarSeries>;

/// Substitution rules for the root-of-unity limit q = -e^h, t = -e^(gamma h);
/// gamma stays the symbol `gamma`.
HbarRules rules_qt_minus_exp(int order);

/// Branch-fixed rules for the half-power symbols: qh -> i e^(h/2),
/// th -> i e^(gamma h/2) with gamma substituted by gamma_value.
HbarRules rules_half_powers(const RatFunc& gamma_value, int order);

/// Substitute each ruled symbol by its series and expand f = num/den as a
/// series. The denominator's leading hbar power is factored out before the
/// series division. Throws IncreaseTruncationError when the denominator is
/// zero to the working order.
HbarSeries hbar_expand(const RatFunc& f, const HbarRules& rules, int order);

/// Order-0 coefficient of s. Throws PoleError when the series has a pole and
/// IncreaseTruncationError when s carries no usable orders.
RatFunc limit_h0(const HbarSeries& s);

/// Adaptive wrapper: hbar_expand with orders start, 2*start, ... up to cap,
/// retrying on IncreaseTruncationError, until coefficients 0..need-1 of the
/// result are available.
class AdaptiveExpander {
public:
    explicit AdaptiveExpander(int start = 4, int cap = 64) : start_(start), cap_(cap) {}

    /// rules_for(order) builds the substitution at a given truncation order.
    template <typename RulesFn>
    HbarSeries expand(const RatFunc& f, RulesFn rules_for, int need) const {
        for (int n = start_; n <= cap_; n *= 2) {
            try {
                HbarSeries s = hbar_expand(f, rules_for(n), n);
                if (s.truncation() >= need) return s;
            } catch (const IncreaseTruncationError&) {
            }
        }
        throw IncreaseTruncationError(cap_);
    }

private:
    int start_;
    int cap_;
};

} // namespace ugnsr
