#include "ugnsr/multipoly.hpp"

#include <algorithm>
#include <limits>

namespace ugnsr {

namespace {
constexpr const char* kSymNames[kNumSyms] = {"q", "t", "qh", "th", "u", "alpha", "beta", "gamma"};
} // namespace

const char* sym_name(Sym s) { return kSymNames[static_cast<std::size_t>(s)]; }

std::optional<Sym> sym_from_name(const std::string& name) {
    for (std::size_t k = 0; k < kNumSyms; ++k)
        if (name == kSymNames[k]) return static_cast<Sym>(k);
    return std::nullopt;
}

MultiPoly::MultiPoly(const Cyclo& c) {
    if (!c.is_zero()) terms_.emplace(ExpVec{}, c);
}

MultiPoly MultiPoly::symbol(Sym s, unsigned e) {
    MultiPoly p;
    if (e == 0) return MultiPoly(Cyclo(1L));
    ExpVec ev{};
    ev[static_cast<std::size_t>(s)] = static_cast<std::uint16_t>(e);
    p.terms_.emplace(ev, Cyclo(1L));
    return p;
}

MultiPoly MultiPoly::term(const Cyclo& c, const ExpVec& e) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExpVec{});
}

Cyclo MultiPoly::constant_term() const {
    auto it = terms_.find(ExpVec{});
    return it == terms_.end() ? Cyclo() : it->second;
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ExpVec{} &&
           terms_.begin()->second == Cyclo(1L);
}

unsigned MultiPoly::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

unsigned MultiPoly::degree_in(Sym s) const {
    unsigned d = 0;
    const auto k = static_cast<std::size_t>(s);
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[k]);
    return d;
}

std::vector<Sym> MultiPoly::active_symbols() const {
    std::array<bool, kNumSyms> seen{};
    for (const auto& [e, c] : terms_)
        for (std::size_t k = 0; k < kNumSyms; ++k)
            if (e[k] > 0) seen[k] = true;
    std::vector<Sym> out;
    for (std::size_t k = 0; k < kNumSyms; ++k)
        if (seen[k]) out.push_back(static_cast<Sym>(k));
    return out;
}

void MultiPoly::add_term(const ExpVec& e, const Cyclo& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    const MultiPoly& rows = a.terms_.size() <= b.terms_.size() ? a : b;
    const MultiPoly& base = a.terms_.size() <= b.terms_.size() ? b : a;
    for (const auto& [ea, ca] : rows.terms_) {
        for (const auto& [eb, cb] : base.terms_) {
            ExpVec e;
            for (std::size_t k = 0; k < kNumSyms; ++k)
                e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly& MultiPoly::mul_scalar(const Cyclo& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& a, const MultiPoly& b) {
    auto q = try_div(a, b);
    if (!q) throw ContractViolation("polynomial division is not exact");
    return *std::move(q);
}

std::optional<MultiPoly> MultiPoly::try_div(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    MultiPoly rem = a, quot;
    const auto& [eb, cb] = b.leading();
    const Cyclo cb_inv = cb.inverse();
    while (!rem.is_zero()) {
        const auto& [er, cr] = rem.leading();
        ExpVec e;
        for (std::size_t k = 0; k < kNumSyms; ++k) {
            if (er[k] < eb[k]) return std::nullopt;
            e[k] = static_cast<std::uint16_t>(er[k] - eb[k]);
        }
        Cyclo c = cr * cb_inv;
        quot.add_term(e, c);
        rem -= b * MultiPoly::term(c, e);
    }
    return quot;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(const MultiPoly& p, Sym s) {
    const auto k = static_cast<std::size_t>(s);
    std::vector<MultiPoly> cs(p.degree_in(s) + 1);
    for (const auto& [e, c] : p.terms_) {
        ExpVec rest = e;
        const unsigned d = e[k];
        rest[k] = 0;
        cs[d].add_term(rest, c);
    }
    return cs;
}

MultiPoly MultiPoly::from_coeffs_in(const std::vector<MultiPoly>& cs, Sym s) {
    MultiPoly r;
    for (std::size_t d = 0; d < cs.size(); ++d)
        r += cs[d] * MultiPoly::symbol(s, static_cast<unsigned>(d));
    return r;
}

MultiPoly MultiPoly::content_in(const MultiPoly& p, Sym s) {
    MultiPoly g;
    for (const auto& c : coeffs_in(p, s)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Univariate (single active symbol, field coefficients): monic Euclid.
MultiPoly MultiPoly::gcd_univariate(const MultiPoly& a, const MultiPoly& b, Sym s) {
    auto da = coeffs_in(a, s);
    auto db = coeffs_in(b, s);
    auto degree_of = [](const std::vector<MultiPoly>& v) -> int {
        for (int d = static_cast<int>(v.size()) - 1; d >= 0; --d)
            if (!v[d].is_zero()) return d;
        return -1;
    };
    while (true) {
        int nb = degree_of(db);
        if (nb < 0) break;
        int na = degree_of(da);
        if (na < nb) {
            std::swap(da, db);
            continue;
        }
        // da -= lc(da)/lc(db) * s^(na-nb) * db
        Cyclo f = da[na].constant_term() / db[nb].constant_term();
        for (int j = 0; j <= nb; ++j) {
            MultiPoly sub = db[j];
            sub.mul_scalar(f);
            da[na - nb + j] -= sub;
        }
        if (degree_of(da) < nb) std::swap(da, db);
    }
    int n = degree_of(da);
    if (n < 0) return MultiPoly();
    MultiPoly g = from_coeffs_in(da, s);
    Cyclo lc = g.leading().second;
    g.mul_scalar(lc.inverse());
    return g;
}

// Pseudo-remainder with the exact classical scaling:
// lc(b)^(deg a - deg b + 1) * a = q * b + rem.
MultiPoly MultiPoly::pseudo_rem(const MultiPoly& a, const MultiPoly& b, Sym s) {
    auto ra = coeffs_in(a, s);
    const auto rb = coeffs_in(b, s);
    auto degree_of = [](const std::vector<MultiPoly>& v) -> int {
        for (int d = static_cast<int>(v.size()) - 1; d >= 0; --d)
            if (!v[d].is_zero()) return d;
        return -1;
    };
    const int nb = degree_of(rb);
    const MultiPoly& lb = rb[static_cast<std::size_t>(nb)];
    int na = degree_of(ra);
    int scalings = 0;
    const int target = na - nb + 1;
    while (na >= nb) {
        const MultiPoly la = ra[static_cast<std::size_t>(na)];
        for (auto& c : ra) c = c * lb;
        ++scalings;
        for (int j = 0; j <= nb; ++j)
            ra[static_cast<std::size_t>(na - nb + j)] -= la * rb[static_cast<std::size_t>(j)];
        int n2 = degree_of(ra);
        if (n2 >= na) throw StructuralError("pseudo-remainder failed to reduce degree");
        na = n2;
        if (na < 0) break;
    }
    ra.resize(static_cast<std::size_t>(std::max(na + 1, 0)));
    MultiPoly rem = from_coeffs_in(ra, s);
    for (int j = scalings; j < target; ++j) rem *= lb;
    return rem;
}

namespace {

ExpVec min_exponents(const MultiPoly::TermMap& terms) {
    ExpVec e;
    e.fill(std::numeric_limits<std::uint16_t>::max());
    for (const auto& [ev, c] : terms)
        for (std::size_t k = 0; k < kNumSyms; ++k) e[k] = std::min(e[k], ev[k]);
    return e;
}

bool is_unit_exp(const ExpVec& e) {
    for (auto x : e)
        if (x != 0) return false;
    return true;
}

} // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    auto monic = [](MultiPoly p) {
        if (!p.is_zero()) p.mul_scalar(p.leading().second.inverse());
        return p;
    };
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return MultiPoly(Cyclo(1L));

    // Pull out the common monomial factor first; it also settles the frequent
    // monomial-vs-polynomial case (beta-power denominators) without a PRS.
    {
        ExpVec ma = min_exponents(a.terms_), mb = min_exponents(b.terms_);
        ExpVec common;
        for (std::size_t k = 0; k < kNumSyms; ++k) common[k] = std::min(ma[k], mb[k]);
        if (!is_unit_exp(ma) || !is_unit_exp(mb)) {
            auto strip = [](const MultiPoly& p, const ExpVec& m) {
                MultiPoly r;
                for (const auto& [ev, c] : p.terms_) {
                    ExpVec e;
                    for (std::size_t k = 0; k < kNumSyms; ++k)
                        e[k] = static_cast<std::uint16_t>(ev[k] - m[k]);
                    r.terms_.emplace(e, c);
                }
                return r;
            };
            MultiPoly g = gcd(strip(a, ma), strip(b, mb));
            return monic(g * MultiPoly::term(Cyclo(1L), common));
        }
    }

    std::array<bool, kNumSyms> act{};
    for (Sym s : a.active_symbols()) act[static_cast<std::size_t>(s)] = true;
    for (Sym s : b.active_symbols()) act[static_cast<std::size_t>(s)] = true;
    std::vector<Sym> syms;
    for (std::size_t k = 0; k < kNumSyms; ++k)
        if (act[k]) syms.push_back(static_cast<Sym>(k));

    if (syms.size() == 1) return gcd_univariate(a, b, syms[0]);

    const Sym s = syms[0];
    if (!a.depends_on(s)) return gcd(a, content_in(b, s));
    if (!b.depends_on(s)) return gcd(b, content_in(a, s));

    MultiPoly g = syms.size() == 2 ? gcd_brown_bivariate(a, b, syms[0], syms[1])
                                   : gcd_subresultant(a, b, s);
    Cyclo lc = g.leading().second;
    if (lc != Cyclo(1L)) g.mul_scalar(lc.inverse());
    return g;
}

// Classic subresultant PRS in s with content/primitive-part bookkeeping;
// the fallback for three or more active symbols.
MultiPoly MultiPoly::gcd_subresultant(const MultiPoly& a, const MultiPoly& b, Sym s) {
    MultiPoly ca = content_in(a, s), cb = content_in(b, s);
    MultiPoly pa = exact_div(a, ca), pb = exact_div(b, cb);
    const MultiPoly cont = gcd(ca, cb);
    if (pa.degree_in(s) < pb.degree_in(s)) std::swap(pa, pb);

    MultiPoly g(Cyclo(1L)), h(Cyclo(1L));
    while (true) {
        if (pb.is_zero()) break;
        if (pb.degree_in(s) == 0) {
            pa = MultiPoly(Cyclo(1L)); // coprime primitive parts
            break;
        }
        const unsigned delta = pa.degree_in(s) - pb.degree_in(s);
        MultiPoly r = pseudo_rem(pa, pb, s);
        pa = pb;
        if (r.is_zero()) {
            pb = MultiPoly();
        } else {
            MultiPoly divisor = g;
            for (unsigned j = 0; j < delta; ++j) divisor *= h;
            pb = exact_div(r, divisor);
        }
        g = coeffs_in(pa, s).back();
        // h = g^delta h^(1-delta)
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            MultiPoly num(Cyclo(1L));
            for (unsigned j = 0; j < delta; ++j) num *= g;
            MultiPoly den(Cyclo(1L));
            for (unsigned j = 0; j + 1 < delta; ++j) den *= h;
            h = exact_div(num, den);
        }
    }
    if (!pa.is_constant()) pa = exact_div(pa, content_in(pa, s));
    return cont * pa;
}

// ---------------------------------------------------------------------------
// Bivariate gcd by evaluation and Newton interpolation (Brown). Evaluate y at
// rational points, take monic univariate gcds in x over Q(z8), scale by
// gamma = gcd(lc_x) evaluated there, interpolate, and verify by trial
// division, so the result is correct regardless of unlucky points.
// ---------------------------------------------------------------------------

namespace {

using DensePoly = std::vector<Cyclo>;           // univariate, index = exponent
using Dense2 = std::vector<DensePoly>;          // [x-exponent][y-exponent]

int dense_degree(const DensePoly& p) {
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
        if (!p[static_cast<std::size_t>(d)].is_zero()) return d;
    return -1;
}

void dense_trim(DensePoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

DensePoly dense_monic_gcd(DensePoly u, DensePoly v) {
    dense_trim(u);
    dense_trim(v);
    while (!v.empty()) {
        const Cyclo lv = v.back().inverse();
        while (u.size() >= v.size() && !u.empty()) {
            const Cyclo f = u.back() * lv;
            const std::size_t off = u.size() - v.size();
            for (std::size_t j = 0; j < v.size(); ++j) u[off + j] -= f * v[j];
            dense_trim(u);
        }
        std::swap(u, v);
    }
    if (!u.empty()) {
        const Cyclo inv = u.back().inverse();
        for (auto& c : u) c *= inv;
    }
    return u;
}

Cyclo horner(const DensePoly& p, const Cyclo& c) {
    Cyclo acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * c + *it;
    return acc;
}

DensePoly eval_rows(const Dense2& f, const Cyclo& c) {
    DensePoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = horner(f[i], c);
    dense_trim(out);
    return out;
}

Dense2 to_dense2(const MultiPoly& p, Sym x, Sym y) {
    Dense2 f(p.degree_in(x) + 1);
    const std::size_t dy = p.degree_in(y) + 1;
    for (auto& row : f) row.assign(dy, Cyclo());
    for (const auto& [e, c] : p.terms())
        f[e[static_cast<std::size_t>(x)]][e[static_cast<std::size_t>(y)]] += c;
    return f;
}

MultiPoly from_dense2(const Dense2& f, Sym x, Sym y) {
    MultiPoly out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < f[i].size(); ++j) {
            if (f[i][j].is_zero()) continue;
            ExpVec e{};
            e[static_cast<std::size_t>(x)] = static_cast<std::uint16_t>(i);
            e[static_cast<std::size_t>(y)] = static_cast<std::uint16_t>(j);
            out += MultiPoly::term(f[i][j], e);
        }
    }
    return out;
}

} // namespace

MultiPoly MultiPoly::gcd_brown_bivariate(const MultiPoly& a, const MultiPoly& b, Sym x, Sym y) {
    // contents and primitive parts with respect to x (contents univariate in y)
    MultiPoly ca = content_in(a, x), cb = content_in(b, x);
    MultiPoly pa = exact_div(a, ca), pb = exact_div(b, cb);
    const MultiPoly cont = gcd_univariate(ca, cb, y);

    const Dense2 fa = to_dense2(pa, x, y);
    const Dense2 fb = to_dense2(pb, x, y);
    const MultiPoly gamma_poly =
        gcd_univariate(coeffs_in(pa, x).back(), coeffs_in(pb, x).back(), y);
    DensePoly gamma(gamma_poly.degree_in(y) + 1);
    for (const auto& [e, c] : gamma_poly.terms()) gamma[e[static_cast<std::size_t>(y)]] += c;

    const int cap = static_cast<int>(pa.degree_in(y) + pb.degree_in(y) + gamma_poly.degree_in(y)) + 3;

    Dense2 interp;              // current Newton interpolant
    DensePoly basis{Cyclo(1L)}; // prod (y - c_i), dense in y
    int dmin = -1;

    long next = 0;
    for (int used = 0; used <= cap; ++next) {
        const Cyclo c((next % 2 == 0) ? Rational(next / 2) : Rational(-(next / 2 + 1)));
        const Cyclo gs = horner(gamma, c);
        if (gs.is_zero()) continue;
        DensePoly fc = eval_rows(fa, c), gc = eval_rows(fb, c);
        if (dense_degree(fc) + 1 != static_cast<int>(fa.size())) continue; // lc vanished
        if (dense_degree(gc) + 1 != static_cast<int>(fb.size())) continue;
        DensePoly u = dense_monic_gcd(std::move(fc), std::move(gc));
        const int d = dense_degree(u);
        if (d == 0) return cont; // coprime primitive parts

        if (dmin == -1 || d < dmin) {
            interp.clear();
            basis = {Cyclo(1L)};
            dmin = d;
            used = 0;
        } else if (d > dmin) {
            continue; // unlucky point
        }
        for (auto& cc : u) cc *= gs;

        // Newton update: (value - interp(c)) / basis(c) attached to basis(y)
        DensePoly val = std::move(u);
        if (!interp.empty()) {
            if (val.size() < interp.size()) val.resize(interp.size());
            for (std::size_t i = 0; i < interp.size(); ++i) val[i] -= horner(interp[i], c);
            dense_trim(val);
        }
        if (val.empty()) {
            // stabilized: verify the candidate by trial division
            MultiPoly cand = from_dense2(interp, x, y);
            if (!cand.is_zero()) {
                cand = exact_div(cand, content_in(cand, x));
                if (try_div(pa, cand) && try_div(pb, cand)) return cont * cand;
            }
        } else {
            const Cyclo bin = horner(basis, c).inverse();
            if (interp.size() < val.size()) interp.resize(val.size());
            for (std::size_t i = 0; i < val.size(); ++i) {
                if (val[i].is_zero()) continue;
                const Cyclo f = val[i] * bin;
                auto& row = interp[i];
                if (row.size() < basis.size()) row.resize(basis.size());
                for (std::size_t j = 0; j < basis.size(); ++j) row[j] += f * basis[j];
            }
        }
        // basis *= (y - c)
        DensePoly nb(basis.size() + 1);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            nb[j + 1] += basis[j];
            nb[j] -= basis[j] * c;
        }
        basis = std::move(nb);
        ++used;
    }
    // Interpolation failed to stabilize within the bound; fall back.
    return gcd_subresultant(a, b, x);
}

std::complex<double> MultiPoly::eval_complex(
    const std::array<std::complex<double>, kNumSyms>& vals) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> m = c.to_complex();
        for (std::size_t k = 0; k < kNumSyms; ++k)
            for (unsigned j = 0; j < e[k]; ++j) m *= vals[k];
        acc += m;
    }
    return acc;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Leading term first (descending grlex) for a stable human-friendly form.
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t k = 0; k < kNumSyms; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += kSymNames[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        std::string cs;
        const bool needs_parens = !c.is_rational() &&
            [&] { int n = 0; for (int j = 0; j < 4; ++j) n += (c.coeff(j) != 0); return n > 1; }();
        if (mono.empty()) {
            cs = needs_parens ? "(" + c.to_string() + ")" : c.to_string();
        } else if (c == Cyclo(1L)) {
            cs = mono;
        } else if (c == Cyclo(-1L)) {
            cs = "-" + mono;
        } else if (needs_parens) {
            cs = "(" + c.to_string() + ")*" + mono;
        } else {
            cs = c.to_string() + "*" + mono;
        }
        if (!out.empty() && cs[0] != '-') out += "+";
        out += cs;
    }
    return out;
}

} // namespace ugnsr
