#include "ugnsr/qvir.hpp"

#include "ugnsr/errors.hpp"
#include "ugnsr/hbar.hpp"
#include "ugnsr/vertex.hpp"

namespace ugnsr {

namespace {

const RatFunc kOne(1L);

RatFunc qh_pow(int e) { return RatFunc::symbol(Sym::qh, e); }
RatFunc th_pow(int e) { return RatFunc::symbol(Sym::th, e); }

/// (1 - t^j)/(t^j + q^j) in half-power symbols.
RatFunc t_ratio(int j) {
    return (kOne - th_pow(2 * j)) / (th_pow(2 * j) + qh_pow(2 * j));
}

/// The two vertex terms of T(z), coefficients populated for letters <= cap.
std::pair<VertexOp, VertexOp> t_current_terms(const RatFunc& u, int up_cap, int down_cap) {
    VertexOp pos, neg;
    pos.prefactor = qh_pow(1) * th_pow(-1) * u;
    neg.prefactor = th_pow(1) * qh_pow(-1) / u;
    for (int j = 1; j <= std::max(up_cap, down_cap); ++j) {
        const RatFunc tr = t_ratio(j);
        const RatFunc jj(static_cast<long>(j));
        if (j <= up_cap) {
            pos.up[j] = -tr * th_pow(j) * qh_pow(-j) / jj;
            neg.up[j] = tr * qh_pow(j) * th_pow(-j) / jj;
        }
        if (j <= down_cap) {
            pos.down[j] = -(kOne - qh_pow(2 * j)) * qh_pow(j) * th_pow(-j);
            neg.down[j] = (kOne - qh_pow(2 * j)) * th_pow(j) * qh_pow(-j);
        }
    }
    return {pos, neg};
}

} // namespace

RatFunc u_rs(int r, int s) { return th_pow(1 + s) * qh_pow(-(1 + r)); }

std::vector<RatFunc> structure_function_coeffs(int order) {
    // f = exp(g), f' = g' f: l f_l = sum_{k=1}^{l} k g_k f_{l-k}.
    std::vector<RatFunc> g(static_cast<std::size_t>(order), RatFunc());
    for (int n = 1; n < order; ++n)
        g[static_cast<std::size_t>(n)] =
            (kOne - qh_pow(2 * n)) * (th_pow(2 * n) - kOne) /
            ((th_pow(2 * n) + qh_pow(2 * n)) * RatFunc(static_cast<long>(n)));
    std::vector<RatFunc> f(static_cast<std::size_t>(order), RatFunc());
    f[0] = kOne;
    for (int l = 1; l < order; ++l) {
        RatFunc acc;
        for (int k = 1; k <= l; ++k)
            acc += RatFunc(static_cast<long>(k)) * g[static_cast<std::size_t>(k)] *
                   f[static_cast<std::size_t>(l - k)];
        f[static_cast<std::size_t>(l)] = acc / RatFunc(static_cast<long>(l));
    }
    return f;
}

std::vector<RatFunc> structure_function_coeffs_direct(int order) {
    std::map<int, RatFunc> g;
    for (int n = 1; n < order; ++n)
        g[n] = (kOne - qh_pow(2 * n)) * (th_pow(2 * n) - kOne) /
               ((th_pow(2 * n) + qh_pow(2 * n)) * RatFunc(static_cast<long>(n)));
    std::vector<RatFunc> f(static_cast<std::size_t>(order), RatFunc());
    for (int l = 0; l < order; ++l) {
        RatFunc acc;
        for (const auto& [kappa, w] : exp_weights(g, l)) acc += w;
        f[static_cast<std::size_t>(l)] = acc;
    }
    return f;
}

GradedOp T_mode(int n, const QVirParams& params) {
    const RatFunc u = params.u;
    return GradedOp(-n, Parity::even, "T" + std::to_string(n), [n, u](const SymFunc& f) {
        const int d = f.max_degree();
        const int up_cap = std::max(0, d - n);
        auto [pos, neg] = t_current_terms(u, up_cap, d);
        SymFunc out = vertex_mode_apply(pos, -n, f);
        out += vertex_mode_apply(neg, -n, f);
        return out;
    });
}

CheckReport verify_qvir_singular(int r, int s, MacdonaldEngine& engine) {
    CheckReport report;
    const std::map<Sym, RatFunc> half{{Sym::q, qh_pow(2)}, {Sym::t, th_pow(2)}};
    const MacdonaldPoly& mp = engine.macdonald(Partition::rectangle(r, s));
    const SymFunc P = mp.expansion.map_coeffs([&](const RatFunc& c) { return c.substitute(half); });
    const QVirParams params{u_rs(r, s)};
    const std::string tag =
        "qvir/(" + std::to_string(r) + "," + std::to_string(s) + ")/";
    for (int n = 1; n <= r * s; ++n) {
        SymFunc res = T_mode(n, params)(P);
        report.cases.push_back({tag + "T" + std::to_string(n), res.is_zero(),
                                res.is_zero() ? "" : "residual = " + res.to_string()});
    }
    return report;
}

// ---------------------------------------------------------------------------
// hbar expansion of the current
// ---------------------------------------------------------------------------

namespace {

HbarRules limit_rules(Sector sector, int order) {
    const RatFunc beta = RatFunc::symbol(Sym::beta);
    HbarRules rules = rules_half_powers(beta.pow(-2), order);
    const RatFunc ab = RatFunc::symbol(Sym::alpha) / beta;
    // u^2 -> +-(1 - 2 h alpha/beta + O(h^2)); the branch fixes T0's phase.
    std::vector<RatFunc> ucoef{sector == Sector::NS ? kOne : RatFunc::i(),
                               sector == Sector::NS ? -ab : -(RatFunc::i() * ab)};
    rules[Sym::u] = HbarSeries::from_coeffs(std::move(ucoef), 0, 2);
    return rules;
}

using Matrix = OpMatrix;

Matrix expand_matrix(const Matrix& m, const HbarRules& rules, int want_order, int work_order) {
    Matrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (m[i][j].is_zero()) continue;
            const HbarSeries s = hbar_expand(m[i][j], rules, work_order);
            if (s.lead() < 0)
                throw StructuralError("current expansion produced a pole");
            out[i][j] = s.coeff(want_order);
        }
    }
    return out;
}

Matrix matrix_of_scaled(const GradedOp& op, const RatFunc& scale, int d) {
    Matrix m = op.matrix_on_degree(d);
    for (auto& row : m)
        for (auto& e : row)
            if (!e.is_zero()) e *= scale;
    return m;
}

Matrix zero_like(std::size_t rows, std::size_t cols) {
    return Matrix(rows, std::vector<RatFunc>(cols));
}

bool matrices_equal(const Matrix& a, const Matrix& b) { return same_matrix(a, b); }

} // namespace

CurrentExpansion expand_T_current(Sector sector, int max_degree) {
    CurrentExpansion out;
    const HbarRules rules = limit_rules(sector, 4);
    const QVirParams params; // symbolic u
    const RatFunc rescale = th_pow(1) * qh_pow(-1) * RatFunc::symbol(Sym::u, -1);

    const RatFunc beta = RatFunc::symbol(Sym::beta);
    const RatFunc alpha = RatFunc::symbol(Sym::alpha);
    const RatFunc binv = beta.inverse();
    const RatFunc sqrt2 = RatFunc::sqrt2();
    const RatFunc i = RatFunc::i();
    const int epsilon = +1;
    const FockParams fparams{sector, alpha, epsilon};
    const NSRContext ctx = make_nsr_context(sector, alpha, epsilon);
    const FermionFamily add = fparams.additional_fermion();
    const RatFunc eps(static_cast<long>(epsilon));
    // T0(z) = pref * z f^add(z^2); the mode of z f^add(z^2) at z^{-n} is
    // f_{n/2}, so T0 lives on n of the f^add parity (even in NS, odd in R).
    const RatFunc t0_pref = (sector == Sector::NS ? eps : i) * RatFunc(2L) * sqrt2;
    // T1(z) = g_pref z^3 G(z^2)
    //       - f_pref [ z^2 d_z f^add(z^2) + z f^add(z^2) (2 - 2 alpha/beta - 1/beta^2) ];
    // modes: (n of f^add parity) f_pref ((n+1) - scalar) f^add_{n/2},
    //        (other parity)      g_pref G_{n/2}.
    const RatFunc t1_scalar = RatFunc(2L) - RatFunc(2L) * alpha * binv - binv * binv;
    const RatFunc t1_fpref = (sector == Sector::NS ? eps : i) * sqrt2;
    const RatFunc t1_gpref = -(sector == Sector::NS ? i : eps) * RatFunc(2L) * sqrt2 * binv;

    for (int n = -max_degree; n <= max_degree; ++n) {
        const GradedOp tn = T_mode(n, params);
        const bool f_parity = (sector == Sector::NS) == (((n % 2) + 2) % 2 == 0);
        bool ok0 = true, ok1 = true;
        for (int d = 0; d <= max_degree; ++d) {
            if (d - n < 0) continue;
            const Matrix raw = matrix_of_scaled(tn, rescale, d);
            const Matrix m0 = expand_matrix(raw, rules, 0, 4);
            const Matrix m1 = expand_matrix(raw, rules, 1, 4);
            out.order0.emplace(std::make_pair(n, d), m0);
            out.order1.emplace(std::make_pair(n, d), m1);

            const std::size_t rows = m0.size(), cols = rows ? m0[0].size() : 0;
            Matrix rhs0 = zero_like(rows, cols);
            Matrix rhs1 = zero_like(rows, cols);
            if (f_parity) {
                const GradedOp f = fermion_mode(add, n, fparams);
                rhs0 = matrix_of_scaled(f, t0_pref, d);
                rhs1 = matrix_of_scaled(
                    f, t1_fpref * (RatFunc(static_cast<long>(n + 1)) - t1_scalar), d);
            } else {
                rhs1 = matrix_of_scaled(G_mode(n, ctx), t1_gpref, d);
            }
            if (!matrices_equal(m0, rhs0)) ok0 = false;
            if (!matrices_equal(m1, rhs1)) ok1 = false;
        }
        const std::string tag = "limit-current/" + std::string(sector_name(sector)) + "/";
        out.report.cases.push_back({tag + "T0[" + std::to_string(n) + "]", ok0, ""});
        out.report.cases.push_back({tag + "T1[" + std::to_string(n) + "]", ok1, ""});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Macdonald-operator decomposition and eigenvalue expansion
// ---------------------------------------------------------------------------

namespace {

/// eta(z) in half-power symbols; [z^0] mode on Lambda.
GradedOp eta_zero_half() {
    return GradedOp(0, Parity::even, "eta0h", [](const SymFunc& f) {
        const int d = f.max_degree();
        VertexOp op;
        for (int j = 1; j <= d; ++j) {
            op.up[j] = (kOne - th_pow(-2 * j)) / RatFunc(static_cast<long>(j));
            op.down[j] = -(kOne - qh_pow(2 * j));
        }
        return vertex_mode_apply(op, 0, f);
    });
}

/// psi_{-n}: the z^n coefficient of psi(z) (a pure multiplication operator).
GradedOp psi_minus(int n) {
    return GradedOp(n, Parity::even, "psi-" + std::to_string(n), [n](const SymFunc& f) {
        VertexOp op;
        op.prefactor = th_pow(1) * qh_pow(-1) * RatFunc::symbol(Sym::u, -1);
        for (int j = 1; j <= n; ++j)
            op.up[j] = -t_ratio(j) * qh_pow(j) * th_pow(-j) / RatFunc(static_cast<long>(j));
        return vertex_mode_apply(op, n, f);
    });
}

} // namespace

CheckReport macdonald_decomposition_check(int max_degree) {
    CheckReport report;
    const QVirParams params; // symbolic u
    const GradedOp eta = eta_zero_half();
    const RatFunc tail = qh_pow(-2) * th_pow(2) * RatFunc::symbol(Sym::u, -2);
    for (int d = 0; d <= max_degree; ++d) {
        const Matrix lhs = eta.matrix_on_degree(d);
        const std::size_t dim = p_basis_of_degree(d).size();
        Matrix rhs = zero_like(dim, dim);
        for (int n = 0; n <= d; ++n) {
            // psi_{-n} T_n : Lambda^d -> Lambda^{d-n} -> Lambda^d
            const Matrix tm = T_mode(n, params).matrix_on_degree(d);
            const Matrix pm = psi_minus(n).matrix_on_degree(d - n);
            const std::size_t mid = p_basis_of_degree(d - n).size();
            for (std::size_t i2 = 0; i2 < dim; ++i2)
                for (std::size_t k = 0; k < mid; ++k) {
                    if (pm[i2][k].is_zero()) continue;
                    for (std::size_t j = 0; j < dim; ++j) {
                        if (tm[k][j].is_zero()) continue;
                        rhs[i2][j] += pm[i2][k] * tm[k][j];
                    }
                }
        }
        for (std::size_t j = 0; j < dim; ++j) rhs[j][j] -= tail;
        report.cases.push_back({"decomposition/degree-" + std::to_string(d),
                                matrices_equal(lhs, rhs), ""});
    }
    return report;
}

Rational e0_closed(const Partition& mu) {
    Rational acc(1);
    for (int i = 1; i <= mu.length(); ++i) {
        const int par_mu = mu.part(i - 1) % 2 == 0 ? 1 : -1;
        const int par_i = i % 2 == 0 ? 1 : -1;
        acc -= Rational(2) * (par_mu - 1) * par_i;
    }
    return acc;
}

RatFunc e1_closed(const Partition& mu) {
    const RatFunc gamma = RatFunc::symbol(Sym::gamma);
    RatFunc acc;
    for (int i = 1; i <= mu.length(); ++i) {
        const long par_mu = mu.part(i - 1) % 2 == 0 ? 1 : -1;
        const long par_i = i % 2 == 0 ? 1 : -1;
        RatFunc term = RatFunc(2L * par_mu * mu.part(i - 1)) +
                       gamma * RatFunc(static_cast<long>(1 - 2 * i)) * RatFunc(par_mu - 1);
        acc -= RatFunc(par_i) * term;
    }
    return acc;
}

CheckReport limit_eigenvalue_check(int r, int s, int epsilon, MacdonaldEngine& engine) {
    CheckReport report;
    const Partition mu = Partition::rectangle(r, s);
    const int d = mu.weight();
    const std::string tag = "eigenvalues/(" + std::to_string(r) + "," + std::to_string(s) + ")/";

    const UglovPoly up = uglov(mu, engine);

    // Vector of P in the degree-d p-basis.
    const auto& basis = p_basis_of_degree(d);
    std::vector<RatFunc> pvec(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) pvec[j] = up.expansion.coeff(basis[j]);

    // eta0 matrix over q,t expanded to orders 0 and 1 at q=-e^h, t=-e^{gamma h}.
    const Matrix em = eta_zero().matrix_on_degree(d);
    const HbarRules rules = rules_qt_minus_exp(6);
    const Matrix c0 = expand_matrix(em, rules, 0, 6);
    const Matrix c1 = expand_matrix(em, rules, 1, 6);

    auto apply = [&](const Matrix& m) {
        std::vector<RatFunc> out(m.size());
        for (std::size_t i2 = 0; i2 < m.size(); ++i2)
            for (std::size_t j = 0; j < pvec.size(); ++j) {
                if (m[i2][j].is_zero() || pvec[j].is_zero()) continue;
                out[i2] += m[i2][j] * pvec[j];
            }
        return out;
    };
    auto scaled_p = [&](const RatFunc& c) {
        std::vector<RatFunc> out(pvec.size());
        for (std::size_t j = 0; j < pvec.size(); ++j)
            if (!pvec[j].is_zero()) out[j] = c * pvec[j];
        return out;
    };

    const RatFunc e0{MultiPoly(Cyclo(e0_closed(mu)))};
    const RatFunc e1 = e1_closed(mu);
    report.cases.push_back({tag + "E0", apply(c0) == scaled_p(e0), "E0 = " + e0.to_string()});
    report.cases.push_back({tag + "E1", apply(c1) == scaled_p(e1), "E1 = " + e1.to_string()});

    // Parity bullets for the rectangle.
    {
        const bool r_even = r % 2 == 0, s_even = s % 2 == 0;
        const Rational expected0 = (!r_even && !s_even) ? Rational(-3) : Rational(1);
        RatFunc expected1;
        const RatFunc gamma = RatFunc::symbol(Sym::gamma);
        if (r_even && s_even) {
            expected1 = RatFunc();
        } else if (!r_even && !s_even) {
            expected1 = RatFunc(-2L * r) + RatFunc(2L * s) * gamma;
        } else if (r_even) {
            expected1 = RatFunc(2L * r);
        } else {
            expected1 = RatFunc(-2L * s) * gamma;
        }
        const bool ok = e0_closed(mu) == expected0 && e1 == expected1;
        report.cases.push_back({tag + "parity-bullet", ok,
                                ok ? "" : "closed form disagrees with the sector constant"});
    }

    // R sector: the first-order identity expresses G_0, pinning its eigenvalue.
    if ((r - s) % 2 != 0) {
        const RatFunc beta = RatFunc::symbol(Sym::beta);
        const RatFunc binv = beta.inverse();
        const HighestWeightData hwd = highest_weight_data(r, s, epsilon);
        const NSRContext ctx = make_nsr_context(Sector::R, hwd.alpha_rs, epsilon);
        const RatFunc gval = beta.pow(-2);
        auto to_beta = [&](const RatFunc& c) { return c.substitute(Sym::gamma, gval); };

        SymFunc P = up.expansion.map_coeffs(to_beta);
        SymFunc lhs;
        {
            std::vector<RatFunc> v = apply(c1);
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (!v[j].is_zero()) lhs.set_coeff(basis[j], to_beta(v[j]));
        }
        SymFunc g0p = G_mode(0, ctx)(P);
        SymFunc rhs = g0p;
        rhs.scale(RatFunc(static_cast<long>(-epsilon)) * RatFunc(2L) * RatFunc::sqrt2() * binv);
        SymFunc scal = P;
        scal.scale(kOne - RatFunc(2L) * binv * hwd.alpha_rs - gval);
        rhs -= scal;
        report.cases.push_back({tag + "C1-G0-relation", lhs == rhs, ""});

        const RatFunc g0_eig = RatFunc(static_cast<long>((s % 2 == 0 ? 1 : -1) * epsilon)) *
                               (RatFunc(static_cast<long>(r)) * beta +
                                RatFunc(static_cast<long>(s)) * binv) /
                               (RatFunc(2L) * RatFunc::sqrt2());
        SymFunc expect = P;
        expect.scale(g0_eig);
        report.cases.push_back({tag + "G0-sign", g0p == expect,
                                "eigenvalue " + g0_eig.to_string()});
    }
    return report;
}

} // namespace ugnsr
