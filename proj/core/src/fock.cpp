#include "ugnsr/fock.hpp"

#include "ugnsr/errors.hpp"
#include "ugnsr/partition.hpp"
#include "ugnsr/vertex.hpp"

namespace ugnsr {

GradedOp boson_mode(int n, const FockParams& params) {
    const RatFunc beta = RatFunc::symbol(Sym::beta);
    if (n == 0) return GradedOp::scalar(params.alpha).relabeled("a0");
    if (n > 0) {
        const RatFunc c = RatFunc(-2L) * beta * RatFunc(static_cast<long>(n));
        return GradedOp::d_p(2 * n).scaled(c).relabeled("a" + std::to_string(n));
    }
    const RatFunc c = RatFunc(-1L) / (RatFunc(2L) * beta);
    return GradedOp::mul_p(-2 * n).scaled(c).relabeled("a" + std::to_string(n));
}

namespace {

/// z^m coefficient of e^{s phi_-(z)} e^{s phi_+(z)} applied to f, where
/// phi_-(z) = -sum_{odd j} p_j z^j / j and phi_+(z) = sum_{odd j} 2 d_j z^{-j}.
SymFunc odd_exponentials_mode(int sign, int m, const SymFunc& f) {
    VertexOp op;
    const int d = f.max_degree();
    const int up_bound = std::max(0, m + d) + 1;
    for (int j = 1; j <= std::max(d, up_bound); j += 2) {
        if (j <= up_bound)
            op.up[j] = RatFunc(static_cast<long>(-sign), static_cast<long>(j));
        if (j <= d) op.down[j] = RatFunc(static_cast<long>(2 * sign));
    }
    return vertex_mode_apply(op, m, f);
}

} // namespace

GradedOp fermion_mode(FermionFamily family, int twok, const FockParams& params) {
    const bool odd_index = (((twok % 2) + 2) % 2) == 1;
    if (family == Sector::NS && !odd_index)
        throw Error("NS fermion modes have half-integer index (odd twok)");
    if (family == Sector::R && odd_index)
        throw Error("R fermion modes have integer index (even twok)");

    // f(z^2) = sum_k f_k z^{-2k-1}: the mode is the z^{-twok} coefficient of
    // the bracketed combination times the printed prefactor over 2 sqrt2.
    const RatFunc pref = family == Sector::NS
                             ? RatFunc::i() / (RatFunc(2L) * RatFunc::sqrt2())
                             : RatFunc(static_cast<long>(params.epsilon)) /
                                   (RatFunc(2L) * RatFunc::sqrt2());
    const int rel_sign = family == Sector::NS ? -1 : +1;
    const std::string label = std::string(family == Sector::NS ? "fNS[" : "fR[") +
                              (odd_index ? std::to_string(twok) + "/2" : std::to_string(twok / 2)) + "]";
    return GradedOp(-twok, Parity::odd, label, [pref, rel_sign, twok](const SymFunc& f) {
        SymFunc plus = odd_exponentials_mode(+1, -twok, f);
        SymFunc minus = odd_exponentials_mode(-1, -twok, f);
        minus.scale(RatFunc(static_cast<long>(rel_sign)));
        SymFunc out = plus + minus;
        out.scale(pref);
        return out;
    });
}

GradedOp parity_op(const FockParams& params) {
    const RatFunc c = RatFunc::sqrt2() / RatFunc(static_cast<long>(params.epsilon));
    return fermion_mode(Sector::R, 0, params).scaled(c).relabeled("parity");
}

// ---------------------------------------------------------------------------
// Relation checks
// ---------------------------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<RatFunc>>;

Matrix add_matrices(const Matrix& a, const Matrix& b, int sign) {
    Matrix r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j)
            r[i][j] += RatFunc(static_cast<long>(sign)) * b[i][j];
    return r;
}

bool matrix_is_zero(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

/// [A,B] -/+ on every degree 0..max_degree; returns first failing witness.
struct BracketCheck {
    const GradedOp& a;
    const GradedOp& b;
    int sign; // +1 anticommutator, -1 commutator
    // expected scalar multiple of the identity (only meaningful when the
    // total degree shift vanishes)
    RatFunc expected_scalar;

    bool run(int max_degree, std::string* witness) const {
        for (int d = 0; d <= max_degree; ++d) {
            if (d + b.degree_shift() < 0 && d + a.degree_shift() < 0) continue;
            const Matrix ab = (a * b).matrix_on_degree(d);
            const Matrix ba = (b * a).matrix_on_degree(d);
            Matrix lhs = add_matrices(ab, ba, sign);
            if (a.degree_shift() + b.degree_shift() == 0 && !expected_scalar.is_zero()) {
                for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j][j] -= expected_scalar;
            }
            if (!matrix_is_zero(lhs)) {
                if (witness)
                    *witness = "degree " + std::to_string(d) + ": [" + a.label() + ", " +
                               b.label() + "]_" + (sign > 0 ? "+" : "-") + " mismatch";
                return false;
            }
        }
        return true;
    }
};

} // namespace

CheckReport check_ccr(int degree, const FockParams& params) {
    CheckReport report;
    const int window = degree / 2;

    auto add_case = [&](const std::string& id, bool pass, const std::string& details) {
        report.cases.push_back({id, pass, details});
    };

    // Bosons: [a_n, a_m] = n delta_{n+m,0}
    for (int n = -window; n <= window; ++n) {
        for (int m = n; m <= window; ++m) {
            if (n == 0 || m == 0) continue; // a_0 is scalar
            const GradedOp an = boson_mode(n, params), am = boson_mode(m, params);
            const RatFunc expected =
                (n + m == 0) ? RatFunc(static_cast<long>(n)) : RatFunc();
            std::string witness;
            const bool ok = BracketCheck{an, am, -1, expected}.run(degree, &witness);
            add_case("ccr/[a" + std::to_string(n) + ",a" + std::to_string(m) + "]", ok, witness);
        }
    }

    // Fermions within each family: {f_k, f_l} = delta_{k+l,0}
    for (FermionFamily fam : {Sector::NS, Sector::R}) {
        const int lo = fam == Sector::NS ? -(2 * window - 1) : -(2 * window);
        for (int twok = lo; twok <= 2 * window; ++twok) {
            if ((((twok % 2) + 2) % 2 == 1) != (fam == Sector::NS)) continue;
            for (int twol = twok; twol <= 2 * window; ++twol) {
                if ((((twol % 2) + 2) % 2 == 1) != (fam == Sector::NS)) continue;
                const GradedOp fk = fermion_mode(fam, twok, params);
                const GradedOp fl = fermion_mode(fam, twol, params);
                const RatFunc expected = (twok + twol == 0) ? RatFunc(1L) : RatFunc();
                std::string witness;
                const bool ok = BracketCheck{fk, fl, +1, expected}.run(degree, &witness);
                add_case("ccr/{" + fk.label() + "," + fl.label() + "}", ok, witness);
            }
        }
    }

    // [a_n, f_k] = 0 across both families
    for (int n = -window; n <= window; ++n) {
        if (n == 0) continue;
        const GradedOp an = boson_mode(n, params);
        for (FermionFamily fam : {Sector::NS, Sector::R}) {
            for (int twok = -2 * window; twok <= 2 * window; ++twok) {
                if ((((twok % 2) + 2) % 2 == 1) != (fam == Sector::NS)) continue;
                const GradedOp fk = fermion_mode(fam, twok, params);
                std::string witness;
                const bool ok = BracketCheck{an, fk, -1, RatFunc()}.run(degree, &witness);
                add_case("ccr/[a" + std::to_string(n) + "," + fk.label() + "]", ok, witness);
            }
        }
    }

    // Cross-family brackets: reported, not asserted. Observed: the families
    // anticommute (a single Clifford algebra on the odd power sums).
    {
        bool anticommute = true;
        for (int twor = -3; twor <= 3 && anticommute; twor += 2) {
            for (int twok = -2; twok <= 2 && anticommute; twok += 2) {
                const GradedOp fr = fermion_mode(Sector::NS, twor, params);
                const GradedOp fk = fermion_mode(Sector::R, twok, params);
                std::string witness;
                anticommute = BracketCheck{fr, fk, +1, RatFunc()}.run(degree, &witness);
            }
        }
        add_case("ccr/cross-family", true,
                 std::string("observed {fNS_r, fR_k} = ") + (anticommute ? "0" : "nonzero"));
    }
    return report;
}

CheckReport character_check(int max_degree) {
    CheckReport report;
    if (max_degree > 20) throw CapacityError("character_check: degree cap is 20");

    // ch = prod 1/(1-x^{2m}) * prod_{k>=1} (1+x^{2k}) * prod_{odd j} (1+x^j)
    std::vector<long> count(static_cast<std::size_t>(max_degree) + 1, 0);
    count[0] = 1;
    for (int m = 1; 2 * m <= max_degree; ++m) { // bosons a_{-m}, degree 2m, unbounded
        for (int d = 2 * m; d <= max_degree; ++d)
            count[static_cast<std::size_t>(d)] += count[static_cast<std::size_t>(d - 2 * m)];
    }
    for (int k = 1; 2 * k <= max_degree; ++k) { // R fermions f_{-k}, degree 2k, at most once
        for (int d = max_degree; d >= 2 * k; --d)
            count[static_cast<std::size_t>(d)] += count[static_cast<std::size_t>(d - 2 * k)];
    }
    for (int j = 1; j <= max_degree; j += 2) { // NS fermions f_{-j/2}, degree j, at most once
        for (int d = max_degree; d >= j; --d)
            count[static_cast<std::size_t>(d)] += count[static_cast<std::size_t>(d - j)];
    }

    const std::vector<long> p = partition_counts(max_degree);
    for (int d = 0; d <= max_degree; ++d) {
        const bool ok = count[static_cast<std::size_t>(d)] == p[static_cast<std::size_t>(d)];
        report.cases.push_back({"character/degree-" + std::to_string(d), ok,
                                "fock = " + std::to_string(count[static_cast<std::size_t>(d)]) +
                                    ", p(n) = " + std::to_string(p[static_cast<std::size_t>(d)])});
    }
    return report;
}

} // namespace ugnsr
