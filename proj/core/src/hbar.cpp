#include "ugnsr/hbar.hpp"

#include <algorithm>

namespace ugnsr {

HbarSeries HbarSeries::constant(const RatFunc& c) {
    HbarSeries s;
    if (c.is_zero()) return s;
    s.lead_ = 0;
    s.trunc_ = kExact;
    s.coef_ = {c};
    return s;
}

HbarSeries HbarSeries::from_coeffs(std::vector<RatFunc> coeffs, int lead, int trunc) {
    HbarSeries s;
    s.lead_ = lead;
    s.trunc_ = trunc;
    s.coef_ = std::move(coeffs);
    s.coef_.resize(std::max(0, trunc - lead));
    s.normalize();
    return s;
}

void HbarSeries::normalize() {
    std::size_t drop = 0;
    while (drop < coef_.size() && coef_[drop].is_zero()) ++drop;
    if (drop > 0) {
        coef_.erase(coef_.begin(), coef_.begin() + static_cast<std::ptrdiff_t>(drop));
        lead_ += static_cast<int>(drop);
    }
    if (coef_.empty()) lead_ = trunc_;
}

HbarSeries HbarSeries::truncated(int order) const {
    if (order >= trunc_) return *this;
    HbarSeries r = *this;
    r.trunc_ = order;
    if (order <= r.lead_) {
        r.coef_.clear();
        r.lead_ = order;
    } else {
        r.coef_.resize(static_cast<std::size_t>(order - r.lead_));
    }
    r.normalize();
    return r;
}

RatFunc HbarSeries::coeff(int k) const {
    if (k >= trunc_) throw IncreaseTruncationError(trunc_);
    if (k < lead_ || coef_.empty()) return RatFunc();
    const int j = k - lead_;
    return j < static_cast<int>(coef_.size()) ? coef_[static_cast<std::size_t>(j)] : RatFunc();
}

HbarSeries HbarSeries::operator-() const {
    HbarSeries r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

HbarSeries operator+(const HbarSeries& a, const HbarSeries& b) {
    if (a.coef_.empty() && a.trunc_ >= b.trunc_) return b;
    if (b.coef_.empty() && b.trunc_ >= a.trunc_) return a;
    const int trunc = std::min(a.trunc_, b.trunc_);
    const int lead = std::min({a.lead_, b.lead_, trunc});
    std::vector<RatFunc> c(static_cast<std::size_t>(std::max(0, trunc - lead)));
    for (int k = lead; k < trunc; ++k) {
        RatFunc v;
        if (k >= a.lead_ && k < a.trunc_) v += a.coeff(k);
        if (k >= b.lead_ && k < b.trunc_) v += b.coeff(k);
        c[static_cast<std::size_t>(k - lead)] = v;
    }
    return HbarSeries::from_coeffs(std::move(c), lead, trunc);
}

HbarSeries operator-(const HbarSeries& a, const HbarSeries& b) { return a + (-b); }

HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
    if (a.coef_.empty() || b.coef_.empty()) {
        // 0 * x is zero, but known only to the order the inputs certify.
        HbarSeries z;
        long t = static_cast<long>(std::min(a.trunc_ + std::max(b.lead_, 0),
                                            b.trunc_ + std::max(a.lead_, 0)));
        if (a.trunc_ >= HbarSeries::kExact && b.trunc_ >= HbarSeries::kExact)
            t = HbarSeries::kExact;
        z.lead_ = z.trunc_ = static_cast<int>(std::min<long>(t, HbarSeries::kExact));
        return z;
    }
    long trunc = std::min<long>({static_cast<long>(a.trunc_) + b.lead_,
                                 static_cast<long>(b.trunc_) + a.lead_,
                                 HbarSeries::kExact});
    const int lead = a.lead_ + b.lead_;
    std::vector<RatFunc> c(static_cast<std::size_t>(std::max<long>(0, trunc - lead)));
    for (std::size_t i = 0; i < a.coef_.size(); ++i) {
        if (a.coef_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coef_.size(); ++j) {
            const long k = static_cast<long>(a.lead_) + static_cast<long>(i) + b.lead_ +
                           static_cast<long>(j);
            if (k >= trunc) break;
            if (b.coef_[j].is_zero()) continue;
            c[static_cast<std::size_t>(k - lead)] += a.coef_[i] * b.coef_[j];
        }
    }
    return HbarSeries::from_coeffs(std::move(c), lead, static_cast<int>(trunc));
}

HbarSeries HbarSeries::inverse() const {
    if (coef_.empty()) {
        if (trunc_ >= kExact) throw DivisionByZeroError("inversion of the zero series");
        throw IncreaseTruncationError(trunc_);
    }
    if (trunc_ >= kExact) {
        if (coef_.size() == 1) {
            // exact monomial: exact inverse
            HbarSeries r;
            r.lead_ = -lead_;
            r.trunc_ = kExact;
            r.coef_ = {coef_[0].inverse()};
            return r;
        }
        throw Error("inverse of a non-monomial exact series; truncate first");
    }
    // *this = c0 hbar^lead (1 + x), invert the unit part order by order.
    const int n = trunc_ - lead_;
    const RatFunc c0inv = coef_[0].inverse();
    std::vector<RatFunc> inv(static_cast<std::size_t>(n));
    inv[0] = c0inv;
    for (int k = 1; k < n; ++k) {
        RatFunc acc;
        for (int j = 1; j <= k && static_cast<std::size_t>(j) < coef_.size(); ++j) {
            if (coef_[static_cast<std::size_t>(j)].is_zero()) continue;
            acc += coef_[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
        }
        inv[static_cast<std::size_t>(k)] = -(c0inv * acc);
    }
    const long trunc = trunc_ >= kExact && n >= kExact
                           ? kExact
                           : static_cast<long>(-lead_) + n;
    return HbarSeries::from_coeffs(std::move(inv), -lead_,
                                   static_cast<int>(std::min<long>(trunc, kExact)));
}

HbarSeries HbarSeries::pow(int e) const {
    if (e == 0) return constant(RatFunc(1L));
    HbarSeries base = e > 0 ? *this : inverse();
    int n = e > 0 ? e : -e;
    HbarSeries acc = constant(RatFunc(1L));
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return acc;
}

std::string HbarSeries::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < coef_.size(); ++j) {
        if (coef_[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        const int k = lead_ + static_cast<int>(j);
        out += "(" + coef_[j].to_string() + ")";
        if (k != 0) out += "*h^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    if (trunc_ < kExact) out += " + O(h^" + std::to_string(trunc_) + ")";
    return out;
}

HbarSeries exp_hbar(const RatFunc& c, int order) {
    std::vector<RatFunc> coeffs(static_cast<std::size_t>(std::max(order, 0)));
    RatFunc term(1L);
    for (int k = 0; k < order; ++k) {
        coeffs[static_cast<std::size_t>(k)] = term;
        term = term * c / RatFunc(static_cast<long>(k + 1));
    }
    return HbarSeries::from_coeffs(std::move(coeffs), 0, order);
}

HbarRules rules_qt_minus_exp(int order) {
    HbarRules rules;
    rules[Sym::q] = HbarSeries::constant(RatFunc(-1L)) * exp_hbar(RatFunc(1L), order);
    rules[Sym::t] =
        HbarSeries::constant(RatFunc(-1L)) * exp_hbar(RatFunc::symbol(Sym::gamma), order);
    return rules;
}

HbarRules rules_half_powers(const RatFunc& gamma_value, int order) {
    HbarRules rules;
    const HbarSeries i = HbarSeries::constant(RatFunc::i());
    rules[Sym::qh] = i * exp_hbar(RatFunc(1L, 2L), order);
    rules[Sym::th] = i * exp_hbar(gamma_value / RatFunc(2L), order);
    rules[Sym::q] = rules[Sym::qh] * rules[Sym::qh];
    rules[Sym::t] = rules[Sym::th] * rules[Sym::th];
    return rules;
}

HbarSeries hbar_expand(const RatFunc& f, const HbarRules& rules, int order) {
    auto expand_poly = [&](const MultiPoly& p) {
        HbarSeries acc; // exact zero
        std::map<std::pair<Sym, unsigned>, HbarSeries> pow_cache;
        for (const auto& [e, c] : p.terms()) {
            HbarSeries t = HbarSeries::constant(RatFunc(MultiPoly(c)));
            for (std::size_t k = 0; k < kNumSyms; ++k) {
                if (e[k] == 0) continue;
                const Sym s = static_cast<Sym>(k);
                auto key = std::make_pair(s, static_cast<unsigned>(e[k]));
                auto it = pow_cache.find(key);
                if (it == pow_cache.end()) {
                    auto rit = rules.find(s);
                    HbarSeries base = rit != rules.end()
                                          ? rit->second
                                          : HbarSeries::constant(RatFunc::symbol(s));
                    it = pow_cache.emplace(key, base.pow(static_cast<int>(e[k]))).first;
                }
                t = t * it->second;
            }
            acc = acc + t;
        }
        return acc;
    };
    HbarSeries num = expand_poly(f.num());
    HbarSeries den = expand_poly(f.den());
    if (den.known_zero()) {
        if (den.truncation() >= HbarSeries::kExact)
            throw DivisionByZeroError("expanded denominator is identically zero");
        throw IncreaseTruncationError(std::min(den.truncation(), order));
    }
    // An exact multi-term denominator has no exact inverse; work to `order`.
    if (den.truncation() >= HbarSeries::kExact && !den.is_monomial())
        den = den.truncated(den.lead() + order);
    return num / den;
}

RatFunc limit_h0(const HbarSeries& s) {
    if (s.known_zero()) {
        if (s.truncation() >= 1) return RatFunc(); // O(h^t) with t >= 1 vanishes at h=0
        throw IncreaseTruncationError(s.truncation());
    }
    if (s.lead() < 0) throw PoleError(-s.lead());
    if (s.truncation() < 1) throw IncreaseTruncationError(s.truncation());
    return s.lead() > 0 ? RatFunc() : s.coeff(0);
}

} // namespace ugnsr
