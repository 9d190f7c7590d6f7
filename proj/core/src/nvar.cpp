#include "ugnsr/nvar.hpp"

#include <algorithm>

#include "ugnsr/errors.hpp"

namespace ugnsr {

NVarPoly NVarPoly::constant(int n_vars, const RatFunc& c) {
    NVarPoly p(n_vars);
    p.add_term(Expo(static_cast<std::size_t>(n_vars), 0), c);
    return p;
}

NVarPoly NVarPoly::variable(int n_vars, int i, int e) {
    NVarPoly p(n_vars);
    Expo ex(static_cast<std::size_t>(n_vars), 0);
    ex[static_cast<std::size_t>(i)] = e;
    p.add_term(ex, RatFunc(1L));
    return p;
}

void NVarPoly::add_term(const Expo& e, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NVarPoly NVarPoly::operator-() const {
    NVarPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

NVarPoly& NVarPoly::operator+=(const NVarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

NVarPoly& NVarPoly::operator-=(const NVarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

NVarPoly operator*(const NVarPoly& a, const NVarPoly& b) {
    NVarPoly r(a.n_vars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            NVarPoly::Expo e(ea.size());
            for (std::size_t k = 0; k < ea.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

NVarPoly& NVarPoly::scale(const RatFunc& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

NVarPoly NVarPoly::shift_var(int i, const RatFunc& factor) const {
    NVarPoly r(n_);
    for (const auto& [e, c] : terms_) {
        r.add_term(e, c * factor.pow(e[static_cast<std::size_t>(i)]));
    }
    return r;
}

bool NVarPoly::is_symmetric() const {
    for (int i = 0; i + 1 < n_; ++i) {
        for (const auto& [e, c] : terms_) {
            Expo s = e;
            std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i) + 1]);
            auto it = terms_.find(s);
            if (it == terms_.end() || it->second != c) return false;
        }
    }
    return true;
}

NVarPoly NVarPoly::exact_div(const NVarPoly& a, const NVarPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError("NVar division by zero");
    NVarPoly rem = a, quot(a.n_vars());
    const auto& lead_b = *b.terms_.rbegin();
    const RatFunc lb_inv = lead_b.second.inverse();
    while (!rem.is_zero()) {
        const auto& lead_r = *rem.terms_.rbegin();
        Expo e(lead_r.first.size());
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (lead_r.first[k] < lead_b.first[k])
                throw ContractViolation(
                    "difference-operator division is not exact (input not symmetric?)");
            e[k] = lead_r.first[k] - lead_b.first[k];
        }
        const RatFunc c = lead_r.second * lb_inv;
        NVarPoly t(a.n_vars());
        t.add_term(e, c);
        quot.add_term(e, c);
        rem -= b * t;
    }
    return quot;
}

std::map<Partition, RatFunc> NVarPoly::to_m_coords() const {
    std::map<Partition, RatFunc> out;
    for (const auto& [e, c] : terms_) {
        std::vector<int> sorted(e.begin(), e.end());
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (sorted == std::vector<int>(e.begin(), e.end())) {
            while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
            out.emplace(Partition(std::move(sorted)), c);
        }
    }
    return out;
}

std::string NVarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            out += "*x" + std::to_string(k + 1);
            if (e[k] > 1) out += "^" + std::to_string(e[k]);
        }
    }
    return out;
}

NVarPoly project_to_n_vars(const SymFunc& f, int n_vars) {
    NVarPoly out(n_vars);
    for (const auto& [mu, c] : f.terms()) {
        NVarPoly term = NVarPoly::constant(n_vars, c);
        for (int part : mu.parts()) {
            NVarPoly pk(n_vars);
            for (int i = 0; i < n_vars; ++i) pk += NVarPoly::variable(n_vars, i, part);
            term = term * pk;
        }
        out += term;
    }
    return out;
}

NVarPoly monomial_sym_poly(const Partition& mu, int n_vars) {
    NVarPoly out(n_vars);
    if (mu.length() > n_vars) return out;
    std::vector<int> e(mu.parts().begin(), mu.parts().end());
    e.resize(static_cast<std::size_t>(n_vars), 0);
    std::sort(e.begin(), e.end());
    do {
        out.add_term(e, RatFunc(1L));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

namespace {

// prod over pairs j<k, j != skip, k != skip of (x_j - x_k)
NVarPoly vandermonde_excluding(int n_vars, int skip) {
    NVarPoly v = NVarPoly::constant(n_vars, RatFunc(1L));
    for (int j = 0; j < n_vars; ++j) {
        if (j == skip) continue;
        for (int k = j + 1; k < n_vars; ++k) {
            if (k == skip) continue;
            v = v * (NVarPoly::variable(n_vars, j) - NVarPoly::variable(n_vars, k));
        }
    }
    return v;
}

} // namespace

NVarPoly apply_D_N(const NVarPoly& f) {
    const int n = f.n_vars();
    if (!f.is_symmetric())
        throw ContractViolation("apply_D_N requires a symmetric input polynomial");
    const RatFunc q = RatFunc::symbol(Sym::q);
    const RatFunc t = RatFunc::symbol(Sym::t);

    // Common denominator: V = prod_{j<k}(x_j - x_k). Term i enters with sign
    // (-1)^i from reordering the factors that involve x_i.
    NVarPoly numer(n);
    for (int i = 0; i < n; ++i) {
        NVarPoly factors = NVarPoly::constant(n, RatFunc((i % 2 == 0) ? 1L : -1L));
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            NVarPoly lin = NVarPoly::variable(n, i);
            lin.scale(t);
            lin -= NVarPoly::variable(n, j);
            factors = factors * lin;
        }
        numer += factors * vandermonde_excluding(n, i) * f.shift_var(i, q);
    }
    NVarPoly v = vandermonde_excluding(n, -1);
    return NVarPoly::exact_div(numer, v);
}

RatFunc macdonald_eigenvalue_n(const Partition& mu, int n_vars) {
    RatFunc e;
    for (int j = 0; j < n_vars; ++j)
        e += RatFunc::symbol(Sym::q, mu.part(j)) * RatFunc::symbol(Sym::t, n_vars - 1 - j);
    return e;
}

} // namespace ugnsr
