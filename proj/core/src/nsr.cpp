#include "ugnsr/nsr.hpp"

#include <map>

#include "ugnsr/errors.hpp"

namespace ugnsr {

namespace {

const RatFunc kBeta = RatFunc::symbol(Sym::beta);

RatFunc rho_of_beta() { return (kBeta - kBeta.inverse()) / RatFunc(2L); }

int mode_rank(int tw) { return tw < 0 ? 0 : (tw == 0 ? 1 : 2); } // creation, zero, annihilation

} // namespace

NSRContext make_nsr_context(Sector sector, const RatFunc& alpha, int epsilon) {
    NSRContext ctx;
    ctx.params = FockParams{sector, alpha, epsilon};
    ctx.rho = rho_of_beta();
    ctx.c = RatFunc(3L, 2L) - RatFunc(12L) * ctx.rho * ctx.rho;
    const RatFunc sector_const =
        sector == Sector::NS ? RatFunc() : RatFunc(1L, 16L); // (1 - 2 delta)/16
    ctx.delta = (alpha * alpha - RatFunc(2L) * ctx.rho * alpha) / RatFunc(2L) + sector_const;
    return ctx;
}

HighestWeightData highest_weight_data(int r, int s, int epsilon) {
    if (r <= 0 || s <= 0) throw Error("highest_weight_data: r, s must be positive");
    HighestWeightData hw;
    hw.r = r;
    hw.s = s;
    hw.sector = ((r - s) % 2 == 0) ? Sector::NS : Sector::R;
    const RatFunc binv = kBeta.inverse();
    hw.alpha_rs = RatFunc(1 + r, 2) * kBeta - RatFunc(1 + s, 2) * binv;
    const RatFunc rb_minus = RatFunc(static_cast<long>(r)) * kBeta -
                             RatFunc(static_cast<long>(s)) * binv;
    const RatFunc rho = rho_of_beta();
    const RatFunc sector_const = hw.sector == Sector::NS ? RatFunc() : RatFunc(1L, 16L);
    hw.delta_rs = rb_minus * rb_minus / RatFunc(8L) - rho * rho / RatFunc(2L) + sector_const;
    if (hw.sector == Sector::R) {
        hw.lambda_rs = RatFunc(static_cast<long>(epsilon)) * rb_minus /
                       (RatFunc(2L) * RatFunc::sqrt2());
    }
    return hw;
}

namespace {

// N(a_i a_j) applied to f: annihilator acts first (bosons commute; the
// contraction dropped by normal ordering never appears since i + j != 0 terms
// commute anyway and i + j = 0 pairs are ordered creation-left).
SymFunc normal_boson_pair(int i, int j, const FockParams& params, const SymFunc& f) {
    if (i > 0 && j <= 0) std::swap(i, j);
    // now the right factor is the annihilator whenever there is one
    const GradedOp right = boson_mode(j, params);
    SymFunc mid = right(f);
    if (mid.is_zero()) return mid;
    return boson_mode(i, params)(mid);
}

// N(f_a f_b) applied to f, indices twice-valued, same family.
SymFunc normal_fermion_pair(FermionFamily fam, int ta, int tb, const FockParams& params,
                            const SymFunc& f) {
    if (ta == 0 && tb == 0) return SymFunc(); // :f_0 f_0: = 0
    int sign = 1;
    if (mode_rank(ta) > mode_rank(tb)) {
        std::swap(ta, tb);
        sign = -1;
    }
    SymFunc mid = fermion_mode(fam, tb, params)(f);
    if (mid.is_zero()) return mid;
    SymFunc out = fermion_mode(fam, ta, params)(mid);
    if (sign < 0) out.scale(RatFunc(-1L));
    return out;
}

} // namespace

GradedOp L_mode(int n, const NSRContext& ctx) {
    const NSRContext c = ctx;
    const FermionFamily fam = ctx.params.sector_fermion();
    return GradedOp(-2 * n, Parity::even, "L" + std::to_string(n), [n, c, fam](const SymFunc& f) {
        if (f.is_zero()) return SymFunc();
        const int d = f.max_degree();
        SymFunc acc;

        // 1/2 sum_m N(a_{n-m} a_m)
        const int mw = std::abs(n) + d / 2 + 2;
        for (int m = -mw; m <= mw; ++m) {
            SymFunc term = normal_boson_pair(n - m, m, c.params, f);
            if (term.is_zero()) continue;
            term.scale(RatFunc(1L, 2L));
            acc += term;
        }

        // - rho (n+1) a_n
        if (n != -1) {
            SymFunc term = boson_mode(n, c.params)(f);
            if (!term.is_zero()) {
                term.scale(-c.rho * RatFunc(static_cast<long>(n + 1)));
                acc += term;
            }
        }

        // 1/2 sum_{k+l=n} (-k - 1/2) N(f_k f_l), sector-fermion moding
        const int tw = 2 * std::abs(n) + d + 3;
        const int par = fam == Sector::NS ? 1 : 0;
        for (int tk = -tw; tk <= tw; ++tk) {
            if ((((tk % 2) + 2) % 2) != par) continue;
            const int tl = 2 * n - tk;
            SymFunc term = normal_fermion_pair(fam, tk, tl, c.params, f);
            if (term.is_zero()) continue;
            term.scale(RatFunc(-(tk + 1), 4)); // (1/2) * (-(2k+1)/2)
            acc += term;
        }

        // R-sector zero-point constant from the f_0 ordering
        if (n == 0 && c.params.sector == Sector::R) {
            SymFunc term = f;
            term.scale(RatFunc(1L, 16L));
            acc += term;
        }
        return acc;
    });
}

GradedOp G_mode(int twok, const NSRContext& ctx) {
    const NSRContext c = ctx;
    const FermionFamily fam = ctx.params.sector_fermion();
    const bool odd_index = (((twok % 2) + 2) % 2) == 1;
    if ((ctx.params.sector == Sector::NS) != odd_index)
        throw Error("G-mode index parity does not match the sector");
    const std::string label =
        "G" + (odd_index ? std::to_string(twok) + "/2" : std::to_string(twok / 2));
    return GradedOp(-twok, Parity::odd, label, [twok, c, fam](const SymFunc& f) {
        if (f.is_zero()) return SymFunc();
        const int d = f.max_degree();
        SymFunc acc;

        // sum_m N(f_{k-m} a_m): a and f commute, so order by annihilators.
        const int mw = (std::abs(twok) + d) / 2 + 2;
        for (int m = -mw; m <= mw; ++m) {
            const int tf = twok - 2 * m; // fermion index (twice)
            SymFunc term;
            if (m > 0) {
                SymFunc mid = boson_mode(m, c.params)(f);
                if (mid.is_zero()) continue;
                term = fermion_mode(fam, tf, c.params)(mid);
            } else {
                SymFunc mid = fermion_mode(fam, tf, c.params)(f);
                if (mid.is_zero()) continue;
                term = boson_mode(m, c.params)(mid);
            }
            acc += term;
        }

        // 2 rho (-k - 1/2) f_k
        SymFunc term = fermion_mode(fam, twok, c.params)(f);
        if (!term.is_zero()) {
            term.scale(c.rho * RatFunc(-(twok + 1), 1));
            acc += term;
        }
        return acc;
    });
}

// ---------------------------------------------------------------------------
// Relation suite
// ---------------------------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<RatFunc>>;

// Matrix of op2 o op1 on Lambda^d, via cached per-degree mode matrices.
struct ModeMatrixCache {
    const NSRContext& ctx;
    std::map<std::pair<int, int>, Matrix> l_cache;  // (n, d)
    std::map<std::pair<int, int>, Matrix> g_cache;  // (twok, d)

    const Matrix& l_mat(int n, int d) {
        auto key = std::make_pair(n, d);
        auto it = l_cache.find(key);
        if (it == l_cache.end())
            it = l_cache.emplace(key, L_mode(n, ctx).matrix_on_degree(d)).first;
        return it->second;
    }
    const Matrix& g_mat(int twok, int d) {
        auto key = std::make_pair(twok, d);
        auto it = g_cache.find(key);
        if (it == g_cache.end())
            it = g_cache.emplace(key, G_mode(twok, ctx).matrix_on_degree(d)).first;
        return it->second;
    }
};

std::size_t dim_of_degree(int d) { return d < 0 ? 0 : p_basis_of_degree(d).size(); }

// rows(a) x cols(b) product where a is rows x mid, b is mid x cols; an empty
// `a` or `b` (negative intermediate degree) yields the zero matrix.
Matrix matmul(const Matrix& a, const Matrix& b, std::size_t rows, std::size_t mid,
              std::size_t cols) {
    Matrix r(rows, std::vector<RatFunc>(cols));
    if (a.size() != rows || b.size() != mid || mid == 0) return r;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < mid; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

Matrix scaled_matrix(Matrix m, const RatFunc& c) {
    for (auto& row : m)
        for (auto& e : row)
            if (!e.is_zero()) e *= c;
    return m;
}

Matrix matrix_sum(Matrix a, const Matrix& b, const RatFunc& coef_b) {
    if (a.size() < b.size()) a.resize(b.size(), std::vector<RatFunc>(b.empty() ? 0 : b[0].size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b[i].size(); ++j)
            if (!b[i][j].is_zero()) a[i][j] += coef_b * b[i][j];
    return a;
}

bool matrix_zero(const Matrix& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

} // namespace

CheckReport check_nsr_relations(Sector sector, int degree) {
    CheckReport report;
    const NSRContext ctx = make_nsr_context(sector, RatFunc::symbol(Sym::alpha), +1);
    ModeMatrixCache cache{ctx, {}, {}};
    const int w = degree / 2;

    auto bracket = [&](auto get_a, int shift_a, auto get_b, int shift_b, int sign, int d) {
        // sign = -1: [A,B]; +1: {A,B}
        const std::size_t cols = dim_of_degree(d);
        const std::size_t rows = dim_of_degree(d - shift_a - shift_b);
        Matrix ab = matmul(get_a(d - shift_b), get_b(d), rows, dim_of_degree(d - shift_b), cols);
        Matrix ba = matmul(get_b(d - shift_a), get_a(d), rows, dim_of_degree(d - shift_a), cols);
        return matrix_sum(std::move(ab), ba, RatFunc(static_cast<long>(sign)));
    };

    auto check_all_degrees = [&](const std::string& id, auto lhs_fn, auto rhs_fn) {
        for (int d = 0; d <= degree; ++d) {
            Matrix lhs = lhs_fn(d);
            Matrix rhs = rhs_fn(d);
            Matrix diff = matrix_sum(std::move(lhs), rhs, RatFunc(-1L));
            if (!matrix_zero(diff)) {
                report.cases.push_back({id, false, "mismatch at degree " + std::to_string(d)});
                return;
            }
        }
        report.cases.push_back({id, true, ""});
    };

    auto l_get = [&](int n) { return [&cache, n](int d) -> const Matrix& { return cache.l_mat(n, d); }; };
    auto g_get = [&](int tk) { return [&cache, tk](int d) -> const Matrix& { return cache.g_mat(tk, d); }; };

    auto identity_times = [&](const RatFunc& c, int d) {
        const std::size_t n = dim_of_degree(d);
        Matrix m(n, std::vector<RatFunc>(n));
        for (std::size_t j = 0; j < n; ++j) m[j][j] = c;
        return m;
    };

    // NSR1: [L_m, L_n] = (m-n) L_{m+n} + (c/12)(m^3 - m) delta_{m+n,0}
    for (int m = -w; m <= w; ++m) {
        for (int n = m; n <= w; ++n) {
            const std::string id = "nsr/" + std::string(sector_name(sector)) + "/[L" +
                                   std::to_string(m) + ",L" + std::to_string(n) + "]";
            check_all_degrees(
                id,
                [&, m, n](int d) { return bracket(l_get(m), 2 * m, l_get(n), 2 * n, -1, d); },
                [&, m, n](int d) {
                    Matrix rhs = scaled_matrix(cache.l_mat(m + n, d),
                                               RatFunc(static_cast<long>(m - n)));
                    if (m + n == 0) {
                        const RatFunc central = ctx.c / RatFunc(12L) *
                                                RatFunc(static_cast<long>(m) * m * m - m);
                        rhs = matrix_sum(std::move(rhs), identity_times(RatFunc(1L), d), central);
                    }
                    return rhs;
                });
        }
    }

    // NSR2: [L_n, G_k] = (n/2 - k) G_{n+k}
    const int kpar = sector == Sector::NS ? 1 : 0;
    for (int n = -w; n <= w; ++n) {
        for (int tk = -2 * w + kpar; tk <= 2 * w; tk += 2) {
            const std::string id = "nsr/" + std::string(sector_name(sector)) + "/[L" +
                                   std::to_string(n) + ",G(" + std::to_string(tk) + "/2)]";
            check_all_degrees(
                id,
                [&, n, tk](int d) { return bracket(l_get(n), 2 * n, g_get(tk), tk, -1, d); },
                [&, n, tk](int d) {
                    return scaled_matrix(cache.g_mat(2 * n + tk, d), RatFunc(n - tk, 2));
                });
        }
    }

    // NSR3: {G_k, G_l} = 2 L_{k+l} + (c/3)(k^2 - 1/4) delta_{k+l,0}
    for (int tk = -2 * w + kpar; tk <= 2 * w; tk += 2) {
        for (int tl = tk; tl <= 2 * w; tl += 2) {
            const std::string id = "nsr/" + std::string(sector_name(sector)) + "/{G(" +
                                   std::to_string(tk) + "/2),G(" + std::to_string(tl) + "/2)}";
            check_all_degrees(
                id,
                [&, tk, tl](int d) { return bracket(g_get(tk), tk, g_get(tl), tl, +1, d); },
                [&, tk, tl](int d) {
                    Matrix rhs = scaled_matrix(cache.l_mat((tk + tl) / 2, d), RatFunc(2L));
                    if (tk + tl == 0) {
                        const RatFunc central = ctx.c / RatFunc(3L) *
                                                (RatFunc(tk, 2) * RatFunc(tk, 2) - RatFunc(1L, 4L));
                        rhs = matrix_sum(std::move(rhs), identity_times(RatFunc(1L), d), central);
                    }
                    return rhs;
                });
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Main-theorem checks against Uglov functions
// ---------------------------------------------------------------------------

CheckReport verify_singular_uglov(int r, int s, int epsilon, MacdonaldEngine& engine) {
    CheckReport report;
    const HighestWeightData hw = highest_weight_data(r, s, epsilon);
    const NSRContext ctx = make_nsr_context(hw.sector, hw.alpha_rs, epsilon);
    const int rs = r * s;
    const std::string tag = "singular/(" + std::to_string(r) + "," + std::to_string(s) + ")/";

    const UglovPoly up = uglov(Partition::rectangle(r, s), engine);
    const RatFunc gamma_value = kBeta.pow(-2);
    SymFunc P = up.expansion.map_coeffs(
        [&](const RatFunc& c) { return c.substitute(Sym::gamma, gamma_value); });

    auto residual_case = [&](const std::string& id, const SymFunc& res) {
        report.cases.push_back(
            {id, res.is_zero(), res.is_zero() ? "" : "residual = " + res.to_string()});
    };

    // (i) f^add_k P = 0 for 0 < k <= rs/2 + 1
    const FermionFamily add = ctx.params.additional_fermion();
    const int add_par = add == Sector::NS ? 1 : 0;
    for (int tk = 2 - add_par; tk <= rs + 2; tk += 2) {
        const GradedOp f = fermion_mode(add, tk, ctx.params);
        residual_case(tag + f.label() + "add", f(P));
    }

    // (ii) G_k P = 0 for 0 < k <= rs
    const int g_par = hw.sector == Sector::NS ? 1 : 0;
    for (int tk = 2 - g_par; tk <= 2 * rs; tk += 2) {
        const GradedOp g = G_mode(tk, ctx);
        residual_case(tag + g.label(), g(P));
    }

    // (iii) L_n P = 0 for 0 < n <= rs
    for (int n = 1; n <= rs; ++n) {
        const GradedOp l = L_mode(n, ctx);
        residual_case(tag + l.label(), l(P));
    }

    // (iv) R sector: G_0 P = (-1)^s eps (r beta + s/beta)/(2 sqrt2) P
    if (hw.sector == Sector::R) {
        const RatFunc eig = RatFunc(static_cast<long>((s % 2 == 0 ? 1 : -1) * epsilon)) *
                            (RatFunc(static_cast<long>(r)) * kBeta +
                             RatFunc(static_cast<long>(s)) * kBeta.inverse()) /
                            (RatFunc(2L) * RatFunc::sqrt2());
        SymFunc expect = P;
        expect.scale(eig);
        SymFunc got = G_mode(0, ctx)(P);
        const bool ok = got == expect;
        report.cases.push_back({tag + "G0-eigenvalue", ok,
                                ok ? "eigenvalue " + eig.to_string()
                                   : "G0 P = " + got.to_string()});
    } else {
        // NS parity: eigenvector of the parity operator, +1 for r,s even,
        // -1 for r,s odd.
        const GradedOp pi = parity_op(ctx.params);
        SymFunc got = pi(P);
        SymFunc expect = P;
        if (r % 2 == 1) expect.scale(RatFunc(-1L));
        const bool ok = got == expect;
        report.cases.push_back(
            {tag + "parity", ok, ok ? (r % 2 ? "odd" : "even") : "not a parity eigenvector"});
    }
    return report;
}

} // namespace ugnsr
