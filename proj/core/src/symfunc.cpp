#include "ugnsr/symfunc.hpp"

#include <mutex>

#include "ugnsr/errors.hpp"

namespace ugnsr {

SymFunc SymFunc::p(int k) {
    if (k <= 0) throw Error("p_k needs k > 0");
    return single(Partition({k}), RatFunc(1L));
}

SymFunc SymFunc::single(const Partition& mu, const RatFunc& c) {
    SymFunc f;
    if (!c.is_zero()) f.terms_.emplace(mu, c);
    return f;
}

RatFunc SymFunc::coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? RatFunc() : it->second;
}

void SymFunc::set_coeff(const Partition& mu, const RatFunc& c) {
    if (c.is_zero())
        terms_.erase(mu);
    else
        terms_[mu] = c;
}

bool SymFunc::is_homogeneous(int* degree) const {
    if (terms_.empty()) {
        if (degree) *degree = 0;
        return true;
    }
    const int d = terms_.begin()->first.weight();
    for (const auto& [mu, c] : terms_)
        if (mu.weight() != d) return false;
    if (degree) *degree = d;
    return true;
}

SymFunc SymFunc::homogeneous_part(int d) const {
    SymFunc out;
    for (const auto& [mu, c] : terms_)
        if (mu.weight() == d) out.terms_.emplace(mu, c);
    return out;
}

SymFunc SymFunc::operator-() const {
    SymFunc out;
    for (const auto& [mu, c] : terms_) out.terms_.emplace(mu, -c);
    return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    for (const auto& [mu, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(mu, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc& SymFunc::scale(const RatFunc& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, v] : terms_) v *= c;
    return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    SymFunc out;
    for (const auto& [mu, cm] : a.terms()) {
        for (const auto& [nu, cn] : b.terms()) {
            std::vector<int> parts = mu.parts();
            parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
            SymFunc t = SymFunc::single(Partition(std::move(parts)), cm * cn);
            out += t;
        }
    }
    return out;
}

SymFunc SymFunc::mul_p(int k) const {
    SymFunc out;
    for (const auto& [mu, c] : terms_) out += single(mu.add_part(k), c);
    return out;
}

SymFunc SymFunc::d_p(int k) const {
    SymFunc out;
    for (const auto& [mu, c] : terms_) {
        const int m = mu.multiplicity(k);
        if (m == 0) continue;
        out += single(mu.remove_part(k), RatFunc(static_cast<long>(m)) * c);
    }
    return out;
}

SymFunc SymFunc::map_coeffs(const std::function<RatFunc(const RatFunc&)>& fn) const {
    SymFunc out;
    for (const auto& [mu, c] : terms_) {
        RatFunc v = fn(c);
        if (!v.is_zero()) out.terms_.emplace(mu, v);
    }
    return out;
}

std::string SymFunc::to_string(const std::string& letter) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mu, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*" + letter + "[" + mu.to_string() + "]";
    }
    return out;
}

// ---------------------------------------------------------------------------
// p <-> m transition matrices.
//
// p_lambda is expanded in the m basis by iterated multiplication with the
// rule  p_k * m_mu = sum_v mult_{v+k}(nu) m_nu,  nu = mu - {v} + {v+k},
// v ranging over the distinct parts of mu and v = 0. This realizes the
// finite-variable expansion (any N >= degree gives these matrices) without
// materializing exponent vectors. The integer matrices are inverted over Q
// once per degree and cached.
// ---------------------------------------------------------------------------

namespace {

using MExpansion = std::map<Partition, Rational>;

MExpansion mul_pk_m(const MExpansion& f, int k) {
    MExpansion out;
    for (const auto& [mu, c] : f) {
        std::vector<int> values{0};
        for (const auto& [v, m] : mu.multiplicities()) values.push_back(v);
        for (int v : values) {
            Partition nu = (v == 0) ? mu.add_part(k) : mu.remove_part(v).add_part(v + k);
            out[nu] += c * nu.multiplicity(v + k);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

struct DegreeTables {
    std::vector<Partition> parts;                  // partitions of n, map order
    std::map<Partition, std::size_t> index;
    std::vector<std::vector<Rational>> p_to_m;     // [lambda][mu]: p_lam = sum R m_mu
    std::vector<std::vector<Rational>> m_to_p;     // inverse
};

std::vector<std::vector<Rational>> invert_rational(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw StructuralError("transition matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

const DegreeTables& degree_tables(int n) {
    static std::map<int, DegreeTables> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    DegreeTables t;
    t.parts = partitions_of(n);
    std::sort(t.parts.begin(), t.parts.end()); // canonical map order
    for (std::size_t j = 0; j < t.parts.size(); ++j) t.index.emplace(t.parts[j], j);

    const std::size_t dim = t.parts.size();
    t.p_to_m.assign(dim, std::vector<Rational>(dim, Rational(0)));
    for (std::size_t row = 0; row < dim; ++row) {
        MExpansion e{{Partition{}, Rational(1)}};
        for (int k : t.parts[row].parts()) e = mul_pk_m(e, k);
        for (const auto& [mu, c] : e) t.p_to_m[row][t.index.at(mu)] = c;
    }
    t.m_to_p = invert_rational(t.p_to_m);
    return cache.emplace(n, std::move(t)).first->second;
}

SymFunc apply_transition(const SymFunc& f, bool p_to_m, int max_degree) {
    SymFunc out;
    if (f.is_zero()) return out;
    if (f.max_degree() > max_degree)
        throw CapacityError("basis change above the configured degree cap " +
                            std::to_string(max_degree));
    std::map<int, SymFunc> by_degree;
    for (const auto& [mu, c] : f.terms()) by_degree[mu.weight()] += SymFunc::single(mu, c);
    for (const auto& [n, comp] : by_degree) {
        const DegreeTables& t = degree_tables(n);
        const auto& mat = p_to_m ? t.p_to_m : t.m_to_p;
        for (const auto& [mu, c] : comp.terms()) {
            const std::size_t row = t.index.at(mu);
            for (std::size_t col = 0; col < t.parts.size(); ++col) {
                if (mat[row][col] == 0) continue;
                out += SymFunc::single(t.parts[col], RatFunc(mat[row][col]) * c);
            }
        }
    }
    return out;
}

} // namespace

SymFunc basis_change(const SymFunc& f, Basis from, Basis to, int max_degree) {
    if (from == to) return f;
    return apply_transition(f, from == Basis::p, max_degree);
}

RatFunc macdonald_inner(const SymFunc& f, const SymFunc& g) {
    RatFunc acc;
    const RatFunc one(1L);
    for (const auto& [mu, cf] : f.terms()) {
        const RatFunc cg = g.coeff(mu);
        if (cg.is_zero()) continue;
        RatFunc factor{MultiPoly(Cyclo(mu.z()))};
        for (int part : mu.parts()) {
            const RatFunc qn = RatFunc::symbol(Sym::q, part);
            const RatFunc tn = RatFunc::symbol(Sym::t, part);
            factor *= (one - qn) / (one - tn);
        }
        acc += cf * cg * factor;
    }
    return acc;
}

std::optional<RatFunc> proportionality_constant(const SymFunc& f, const SymFunc& g) {
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    if (f.terms().size() != g.terms().size()) return std::nullopt;
    RatFunc c;
    for (const auto& [mu, cf] : f.terms()) {
        const RatFunc cg = g.coeff(mu);
        if (cg.is_zero()) return std::nullopt;
        if (c.is_zero()) {
            c = cg / cf;
        } else if (cg != c * cf) {
            return std::nullopt;
        }
    }
    return c;
}

} // namespace ugnsr
