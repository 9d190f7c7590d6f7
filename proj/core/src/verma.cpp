#include "ugnsr/verma.hpp"

#include <algorithm>
#include <functional>

#include "ugnsr/errors.hpp"
#include "ugnsr/linalg.hpp"

namespace ugnsr {

int PBWWord::twice_level() const {
    int lv = 0;
    for (int m : l) lv += 2 * m;
    for (int tk : g_twice) lv += tk;
    return lv;
}

bool PBWWord::operator<(const PBWWord& o) const {
    if (l.size() != o.l.size()) return l.size() > o.l.size();
    if (l != o.l) return l < o.l;
    return g_twice < o.g_twice;
}

std::string PBWWord::to_string(Sector sector) const {
    std::string out;
    for (int m : l) out += "L_{-" + std::to_string(m) + "}";
    for (int tk : g_twice) {
        out += "G_{-";
        if (sector == Sector::NS)
            out += std::to_string(tk) + "/2";
        else
            out += std::to_string(tk / 2);
        out += "}";
    }
    return out;
}

void VermaVector::add(const PBWWord& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

VermaVector& VermaVector::scale(const RatFunc& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [w, v] : terms) v *= c;
    return *this;
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
}

bool VermaVector::is_homogeneous(int* twice_level) const {
    if (terms.empty()) {
        if (twice_level) *twice_level = 0;
        return true;
    }
    const int lv = terms.begin()->first.twice_level();
    for (const auto& [w, c] : terms)
        if (w.twice_level() != lv) return false;
    if (twice_level) *twice_level = lv;
    return true;
}

std::string VermaVector::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms) {
        if (!out.empty()) out += " + ";
        const std::string ws = w.to_string(hw.sector);
        out += "(" + c.to_string() + ")" + (ws.empty() ? "" : "*" + ws);
    }
    out += " |Delta>";
    return out;
}

// ---------------------------------------------------------------------------
// Rewriting engine
// ---------------------------------------------------------------------------

namespace {

VermaVector apply_word(Gen g, const PBWWord& w, const VermaHW& hw);

VermaVector apply_vec(Gen g, const VermaVector& v) {
    VermaVector out;
    out.hw = v.hw;
    for (const auto& [w, c] : v.terms) {
        VermaVector part = apply_word(g, w, v.hw);
        part.scale(c);
        out += part;
    }
    return out;
}

VermaVector single_word(const VermaHW& hw, const PBWWord& w, const RatFunc& c) {
    VermaVector v;
    v.hw = hw;
    v.add(w, c);
    return v;
}

VermaVector apply_word(Gen g, const PBWWord& w, const VermaHW& hw) {
    VermaVector zero;
    zero.hw = hw;

    if (!g.is_l && (((g.idx % 2) + 2) % 2) != (hw.sector == Sector::NS ? 1 : 0))
        throw Error("G index parity does not match the sector");

    // Highest-weight vector.
    if (w.l.empty() && w.g_twice.empty()) {
        if (g.is_l) {
            if (g.idx > 0) return zero;
            if (g.idx == 0) return single_word(hw, w, hw.delta);
            return single_word(hw, PBWWord{{-g.idx}, {}}, RatFunc(1L));
        }
        if (g.idx > 0) return zero;
        if (g.idx == 0) {
            if (hw.sector != Sector::R) throw Error("G_0 exists only in the R sector");
            return single_word(hw, w, hw.lambda);
        }
        return single_word(hw, PBWWord{{}, {-g.idx}}, RatFunc(1L));
    }

    // Word starting with an L factor.
    if (!w.l.empty()) {
        const int a = w.l.front();
        PBWWord rest = w;
        rest.l.erase(rest.l.begin());

        if (g.is_l && g.idx < 0 && -g.idx >= a) {
            PBWWord nw = w;
            nw.l.insert(nw.l.begin(), -g.idx);
            return single_word(hw, nw, RatFunc(1L));
        }
        if (g.is_l) {
            // L_n L_{-a} = L_{-a} L_n + (n+a) L_{n-a} + (c/12)(n^3-n) delta_{n,a}
            const int n = g.idx;
            VermaVector out = apply_vec(Gen::L(-a), apply_word(Gen::L(n), rest, hw));
            VermaVector t2 = apply_word(Gen::L(n - a), rest, hw);
            t2.scale(RatFunc(static_cast<long>(n) + a));
            out += t2;
            if (n == a) {
                VermaVector t3 = single_word(hw, rest, RatFunc(1L));
                t3.scale(hw.c / RatFunc(12L) *
                         RatFunc(static_cast<long>(n) * n * n - n));
                out += t3;
            }
            return out;
        }
        // G_k L_{-a} = L_{-a} G_k + (a/2 + k) G_{k-a}
        const int tk = g.idx;
        VermaVector out = apply_vec(Gen::L(-a), apply_word(Gen::G(tk), rest, hw));
        VermaVector t2 = apply_word(Gen::G(tk - 2 * a), rest, hw);
        t2.scale(RatFunc(a + tk, 2));
        out += t2;
        return out;
    }

    // Word starting with a G factor (no L factors present).
    const int b = w.g_twice.front();
    PBWWord rest = w;
    rest.g_twice.erase(rest.g_twice.begin());

    if (g.is_l) {
        if (g.idx < 0) {
            PBWWord nw = w;
            nw.l.insert(nw.l.begin(), -g.idx);
            return single_word(hw, nw, RatFunc(1L));
        }
        // L_n G_{-b/2} = G_{-b/2} L_n + (n/2 + b/2) G_{n - b/2}
        const int n = g.idx;
        VermaVector out = apply_vec(Gen::G(-b), apply_word(Gen::L(n), rest, hw));
        VermaVector t2 = apply_word(Gen::G(2 * n - b), rest, hw);
        t2.scale(RatFunc(static_cast<long>(n) + b, 2));
        out += t2;
        return out;
    }

    const int tk = g.idx;
    if (tk < 0 && -tk > b) {
        PBWWord nw = w;
        nw.g_twice.insert(nw.g_twice.begin(), -tk);
        return single_word(hw, nw, RatFunc(1L));
    }
    if (tk < 0 && -tk == b) {
        // G_{-b/2}^2 = L_{-b}
        return apply_word(Gen::L(-b), rest, hw);
    }
    // G_k G_{-b/2} = -G_{-b/2} G_k + 2 L_{k - b/2} + (c/3)(k^2 - 1/4) delta
    VermaVector out = apply_vec(Gen::G(-b), apply_word(Gen::G(tk), rest, hw));
    out.scale(RatFunc(-1L));
    VermaVector t2 = apply_word(Gen::L((tk - b) / 2), rest, hw);
    t2.scale(RatFunc(2L));
    out += t2;
    if (tk == b) {
        VermaVector t3 = single_word(hw, rest, RatFunc(1L));
        t3.scale(hw.c / RatFunc(3L) *
                 (RatFunc(tk, 2) * RatFunc(tk, 2) - RatFunc(1L, 4L)));
        out += t3;
    }
    return out;
}

} // namespace

VermaVector apply_generator(Gen g, const VermaVector& v) { return apply_vec(g, v); }

std::vector<PBWWord> pbw_basis(Sector sector, int twice_level) {
    std::vector<PBWWord> words;
    const int gpar = sector == Sector::NS ? 1 : 0;
    // choose a strictly decreasing set of G indices, then partition the rest
    std::vector<int> gset;
    std::function<void(int, int)> rec = [&](int remaining, int max_tk) {
        if (remaining % 2 == 0) {
            for (const Partition& lp : partitions_of(remaining / 2)) {
                PBWWord w;
                w.l = lp.parts();
                w.g_twice = gset;
                words.push_back(std::move(w));
            }
        }
        for (int tk = std::min(remaining, max_tk); tk >= 1; --tk) {
            if ((((tk % 2) + 2) % 2) != gpar) continue;
            gset.push_back(tk);
            rec(remaining - tk, tk - 1);
            gset.pop_back();
        }
    };
    if (twice_level >= 0) rec(twice_level, twice_level);
    std::sort(words.begin(), words.end());
    return words;
}

namespace {

VermaHW degenerate_hw(int r, int s, int epsilon) {
    const HighestWeightData data = highest_weight_data(r, s, epsilon);
    const NSRContext ctx = make_nsr_context(data.sector, data.alpha_rs, epsilon);
    VermaHW hw;
    hw.sector = data.sector;
    hw.c = ctx.c;
    hw.delta = data.delta_rs;
    hw.lambda = data.lambda_rs;
    return hw;
}

std::vector<Gen> generating_annihilators(Sector sector) {
    if (sector == Sector::NS) return {Gen::G(1), Gen::G(3)};
    return {Gen::L(1), Gen::G(2)};
}

std::vector<Gen> all_annihilators(Sector sector, int max_rs) {
    std::vector<Gen> gens;
    for (int n = 1; n <= max_rs; ++n) gens.push_back(Gen::L(n));
    const int gpar = sector == Sector::NS ? 1 : 0;
    for (int tk = 2 - gpar; tk <= 2 * max_rs; tk += 2) gens.push_back(Gen::G(tk));
    return gens;
}

} // namespace

VermaVector singular_vector(int r, int s, int epsilon) {
    const VermaHW hw = degenerate_hw(r, s, epsilon);
    const int twice_level = r * s;
    const std::vector<PBWWord> basis = pbw_basis(hw.sector, twice_level);
    if (basis.empty()) throw StructuralError("empty PBW basis at the singular level");

    // Rows: coefficients of every output word of each generating annihilator.
    RatMatrix rows;
    for (const Gen& g : generating_annihilators(hw.sector)) {
        std::vector<VermaVector> images;
        images.reserve(basis.size());
        std::map<PBWWord, std::size_t> out_index;
        for (const PBWWord& w : basis) {
            images.push_back(apply_word(g, w, hw));
            for (const auto& [ow, c] : images.back().terms)
                out_index.emplace(ow, out_index.size());
        }
        const std::size_t first_row = rows.size();
        rows.resize(first_row + out_index.size(), std::vector<RatFunc>(basis.size()));
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (const auto& [ow, c] : images[j].terms)
                rows[first_row + out_index.at(ow)][j] = c;
    }

    const auto kernel = nullspace(rows);
    if (kernel.size() != 1)
        throw StructuralError("singular-vector kernel has dimension " +
                              std::to_string(kernel.size()) + " at symbolic beta for (r,s) = (" +
                              std::to_string(r) + "," + std::to_string(s) + ")");

    // Normalize on the first word with a nonzero coefficient (canonically the
    // L_{-1}-power word).
    RatVector vec = kernel[0];
    RatFunc lead;
    for (const auto& c : vec) {
        if (!c.is_zero()) {
            lead = c;
            break;
        }
    }
    VermaVector chi;
    chi.hw = hw;
    for (std::size_t j = 0; j < basis.size(); ++j) chi.add(basis[j], vec[j] / lead);

    // Full re-verification: every positive generator up to index rs.
    for (const Gen& g : all_annihilators(hw.sector, r * s)) {
        VermaVector img = apply_generator(g, chi);
        if (!img.is_zero())
            throw StructuralError("singular vector not annihilated by a positive generator");
    }
    return chi;
}

SymFunc bosonize(const VermaVector& v, int r, int s, int epsilon) {
    const HighestWeightData data = highest_weight_data(r, s, epsilon);
    const NSRContext ctx = make_nsr_context(data.sector, data.alpha_rs, epsilon);
    SymFunc out;
    for (const auto& [w, c] : v.terms) {
        SymFunc cur = SymFunc::one();
        for (auto it = w.g_twice.rbegin(); it != w.g_twice.rend(); ++it)
            cur = G_mode(-*it, ctx)(cur);
        for (auto it = w.l.rbegin(); it != w.l.rend(); ++it)
            cur = L_mode(-*it, ctx)(cur);
        cur.scale(c);
        out += cur;
    }
    return out;
}

UglovComparison compare_uglov(int r, int s, int epsilon, MacdonaldEngine& engine) {
    UglovComparison cmp;
    cmp.bosonized = bosonize(singular_vector(r, s, epsilon), r, s, epsilon);
    const UglovPoly up = uglov(Partition::rectangle(r, s), engine);
    cmp.uglov_image = up.expansion.map_coeffs(
        [](const RatFunc& c) { return c.substitute(Sym::gamma, RatFunc::symbol(Sym::beta).pow(-2)); });
    const auto ratio = proportionality_constant(cmp.bosonized, cmp.uglov_image);
    cmp.proportional = ratio.has_value();
    if (ratio) cmp.constant = *ratio;
    return cmp;
}

SingularPair even_odd_singular(int r, int s, int epsilon) {
    if ((r - s) % 2 == 0)
        throw Error("even_odd_singular applies to the R sector (r - s odd)");
    const VermaVector chi_plus = singular_vector(r, s, epsilon);
    const RatFunc lambda = chi_plus.hw.lambda;
    if (lambda.is_zero())
        throw UnsupportedCaseError("Delta = c/24 (lambda = 0) is not supported");

    SingularPair out;
    for (const auto& [w, c] : chi_plus.terms)
        (w.g_count() % 2 == 0 ? out.d0 : out.d1)[w] = c;
    for (const auto& [w, c] : out.d1) out.g0_coeffs[w] = c / lambda;

    // chi- in M(c,-lambda): the sigma image (D0 - D1) on the flipped module.
    VermaHW hw_minus = chi_plus.hw;
    hw_minus.lambda = -lambda;
    VermaVector chi_minus;
    chi_minus.hw = hw_minus;
    for (const auto& [w, c] : chi_plus.terms)
        chi_minus.add(w, (w.g_count() % 2 == 0) ? c : -c);

    auto check = [&](const std::string& id, bool ok, const std::string& details) {
        out.report.cases.push_back({id, ok, details});
    };
    const std::string tag =
        "even-odd/(" + std::to_string(r) + "," + std::to_string(s) + ")/";

    // sigma image of chi+ is the (-epsilon) singular vector.
    {
        const VermaVector direct = singular_vector(r, s, -epsilon);
        bool same = direct.terms == chi_minus.terms && direct.hw.lambda == hw_minus.lambda;
        check(tag + "sigma-flip", same, same ? "" : "sigma(chi+) != chi-(-lambda)");
    }

    // chi~even = (chi+ - chi-)/(2 lambda), chi~odd = (chi+ + chi-)/2,
    // as components in M(lambda) + M(-lambda).
    const RatFunc half(1L, 2L);
    out.even_plus = chi_plus;
    out.even_plus.scale(half / lambda);
    out.even_minus = chi_minus;
    out.even_minus.scale(-half / lambda);
    out.odd_plus = chi_plus;
    out.odd_plus.scale(half);
    out.odd_minus = chi_minus;
    out.odd_minus.scale(half);

    // Independent route: (D0 + D1 G0/lambda) applied on |Delta+> components
    // (1/(2 lambda)) v+ and (-1/(2 lambda)) v-, with G0 going through the
    // rewriting engine.
    {
        auto apply_operator = [&](const VermaHW& hw, const RatFunc& hw_coef,
                                  bool with_g0_route) {
            VermaVector acc;
            acc.hw = hw;
            VermaVector base;
            base.hw = hw;
            base.add(PBWWord{}, hw_coef);
            auto apply_word_ops = [&](const PBWWord& w, VermaVector v) {
                for (auto it = w.g_twice.rbegin(); it != w.g_twice.rend(); ++it)
                    v = apply_generator(Gen::G(-*it), v);
                for (auto it = w.l.rbegin(); it != w.l.rend(); ++it)
                    v = apply_generator(Gen::L(-*it), v);
                return v;
            };
            for (const auto& [w, c] : out.d0) {
                VermaVector t = apply_word_ops(w, base);
                t.scale(c);
                acc += t;
            }
            for (const auto& [w, c] : out.d1) {
                VermaVector start = with_g0_route ? apply_generator(Gen::G(0), base) : base;
                VermaVector t = apply_word_ops(w, start);
                t.scale(with_g0_route ? c / lambda : c);
                acc += t;
            }
            return acc;
        };
        const VermaVector via_plus =
            apply_operator(chi_plus.hw, half / lambda, /*with_g0_route=*/true);
        const VermaVector via_minus =
            apply_operator(hw_minus, -half / lambda, /*with_g0_route=*/true);
        const bool ok = via_plus.terms == out.even_plus.terms &&
                        via_minus.terms == out.even_minus.terms;
        check(tag + "g0-route", ok, ok ? "" : "D0 + D1 G0/lambda route disagrees");
    }

    // L_1 and G_1 annihilate both singular vectors of the tilde presentation.
    for (const Gen g : {Gen::L(1), Gen::G(2)}) {
        const std::string gn = g.is_l ? "L1" : "G1";
        const bool ok = apply_generator(g, out.even_plus).is_zero() &&
                        apply_generator(g, out.even_minus).is_zero() &&
                        apply_generator(g, out.odd_plus).is_zero() &&
                        apply_generator(g, out.odd_minus).is_zero();
        check(tag + gn + "-annihilation", ok, "");
    }
    return out;
}

} // namespace ugnsr
