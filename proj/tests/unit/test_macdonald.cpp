#include "doctest.h"

#include <filesystem>

#include "ugnsr/linalg.hpp"
#include "ugnsr/macdonald.hpp"
#include "ugnsr/nvar.hpp"
#include "ugnsr/uglov.hpp"

using namespace ugnsr;

namespace {

MacdonaldEngine& engine() {
    static MacdonaldEngine e(24);
    return e;
}

const RatFunc kOne(1L);
const RatFunc kQ = RatFunc::symbol(Sym::q);
const RatFunc kT = RatFunc::symbol(Sym::t);

} // namespace

TEST_CASE("small Macdonald polynomials") {
    // P_(1) = m_(1) = p_1
    const MacdonaldPoly& p1 = engine().macdonald(Partition({1}));
    CHECK(p1.expansion == SymFunc::p(1));

    // P_(2) = m_2 + (1+q)(1-t)/(1-qt) m_11  (eigenvector of the N=2 operator)
    const MacdonaldPoly& p2 = engine().macdonald(Partition({2}));
    CHECK(p2.m_expansion.coeff(Partition({2})) == kOne);
    CHECK(p2.m_expansion.coeff(Partition({1, 1})) ==
          (kOne + kQ) * (kOne - kT) / (kOne - kQ * kT));

    // P_(1,1) = m_11 (dominance-minimal)
    const MacdonaldPoly& p11 = engine().macdonald(Partition({1, 1}));
    CHECK(p11.m_expansion.coeff(Partition({1, 1})) == kOne);
    CHECK(p11.m_expansion.terms().size() == 1);
}

TEST_CASE("eta_zero eigenvalue identity for |mu| <= 5") {
    const GradedOp eta = eta_zero();
    CHECK(eta(SymFunc::one()) == SymFunc::one()); // E_empty = 1

    // p_1 is P_(1): eigenvalue 1 + (t-1)(q-1)/t
    SymFunc got = eta(SymFunc::p(1));
    SymFunc expect = SymFunc::p(1);
    expect.scale(kOne + (kT - kOne) * (kQ - kOne) / kT);
    CHECK(got == expect);

    for (int n = 1; n <= 5; ++n) {
        for (const auto& mu : partitions_of(n)) {
            const MacdonaldPoly& p = engine().macdonald(mu);
            SymFunc lhs = eta(p.expansion);
            SymFunc rhs = p.expansion;
            rhs.scale(macdonald_eigenvalue(mu));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("difference-operator oracle agrees for |mu| <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const int nv = n;
        for (const auto& mu : partitions_of(n)) {
            const MacdonaldPoly& p = engine().macdonald(mu);
            const NVarPoly proj = project_to_n_vars(p.expansion, nv);
            NVarPoly expect = proj;
            expect.scale(macdonald_eigenvalue_n(mu, nv));
            CHECK(apply_D_N(proj) == expect);
        }
    }
}

TEST_CASE("independent eigenvector construction matches Gram-Schmidt, |mu| <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const int nv = n;
        const auto parts = partitions_of(n);
        // matrix of D_N on the m-basis of weight n
        std::vector<Partition> idx = parts;
        std::sort(idx.begin(), idx.end());
        RatMatrix dmat(idx.size(), RatVector(idx.size()));
        for (std::size_t j = 0; j < idx.size(); ++j) {
            const auto coords = apply_D_N(monomial_sym_poly(idx[j], nv)).to_m_coords();
            for (const auto& [mu, c] : coords) {
                auto pos = std::lower_bound(idx.begin(), idx.end(), mu);
                REQUIRE(pos != idx.end());
                dmat[static_cast<std::size_t>(pos - idx.begin())][j] = c;
            }
        }
        for (std::size_t target = 0; target < idx.size(); ++target) {
            RatMatrix shifted = dmat;
            const RatFunc eig = macdonald_eigenvalue_n(idx[target], nv);
            for (std::size_t j = 0; j < idx.size(); ++j) shifted[j][j] -= eig;
            const auto kernel = nullspace(shifted);
            REQUIRE(kernel.size() == 1);
            // unitriangular normalization: coefficient of m_mu equals 1
            RatVector v = kernel[0];
            const RatFunc lead = v[target];
            REQUIRE(!lead.is_zero());
            const MacdonaldPoly& p = engine().macdonald(idx[target]);
            for (std::size_t j = 0; j < idx.size(); ++j)
                CHECK(v[j] / lead == p.m_expansion.coeff(idx[j]));
        }
    }
}

TEST_CASE("inversion symmetry P(q,t) = P(1/q, 1/t) for |mu| <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n))
            CHECK(inversion_symmetric(engine().macdonald(mu)));
}

TEST_CASE("eigenvalues pairwise distinct per degree for |mu| <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto parts = partitions_of(n);
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a + 1; b < parts.size(); ++b)
                CHECK(macdonald_eigenvalue(parts[a]) != macdonald_eigenvalue(parts[b]));
    }
}

TEST_CASE("disk cache round trip and corruption recovery") {
    const std::string dir = "/tmp/ugnsr-test-cache";
    std::filesystem::remove_all(dir);
    {
        MacdonaldEngine e(24, dir);
        const MacdonaldPoly p = e.macdonald(Partition({2, 1}));
        MacdonaldEngine e2(24, dir); // load from disk
        CHECK(e2.macdonald(Partition({2, 1})).expansion == p.expansion);
    }
    // corrupt the file: checksum mismatch must fall back to recomputation
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        std::filesystem::resize_file(entry.path(), 10);
    }
    MacdonaldEngine e3(24, dir);
    CHECK(e3.macdonald(Partition({2, 1})).expansion ==
          engine().macdonald(Partition({2, 1})).expansion);
    std::filesystem::remove_all(dir);
}

TEST_CASE("capacity guard") {
    MacdonaldEngine tiny(3);
    CHECK_THROWS_AS(tiny.macdonald(Partition({4})), CapacityError);
}

TEST_CASE("uglov examples") {
    // (1): p_1
    CHECK(uglov(Partition({1}), engine()).expansion == SymFunc::p(1));

    const RatFunc gamma = RatFunc::symbol(Sym::gamma);

    // (2): m_2 + 2/(1+gamma) m_11
    const UglovPoly u2 = uglov(Partition({2}), engine());
    CHECK(u2.m_expansion.coeff(Partition({2})) == kOne);
    CHECK(u2.m_expansion.coeff(Partition({1, 1})) == RatFunc(2L) / (kOne + gamma));

    // (3): proportional to (2/3)p_3 + (1/3)p_1^3 + gamma p_2 p_1 after the
    // gamma = 1/beta^2 identification; here the symbolic-gamma form itself.
    const UglovPoly u3 = uglov(Partition({3}), engine());
    {
        SymFunc expect;
        expect.set_coeff(Partition({3}), RatFunc(2L, 3L));
        expect.set_coeff(Partition({1, 1, 1}), RatFunc(1L, 3L));
        expect.set_coeff(Partition({2, 1}), gamma);
        const auto c = proportionality_constant(expect, u3.expansion);
        REQUIRE(c.has_value());
        CHECK(*c == kOne); // the m-unitriangular normalization matches exactly
    }

    // (1,1,1): proportional to 2p_3 - 3 p_2 p_1 + p_1^3, gamma-independent
    const UglovPoly u111 = uglov(Partition({1, 1, 1}), engine());
    {
        SymFunc expect;
        expect.set_coeff(Partition({3}), RatFunc(2L));
        expect.set_coeff(Partition({2, 1}), RatFunc(-3L));
        expect.set_coeff(Partition({1, 1, 1}), RatFunc(1L));
        const auto c = proportionality_constant(expect, u111.expansion);
        REQUIRE(c.has_value());
        for (const auto& [mu, coef] : u111.expansion.terms())
            CHECK_FALSE(coef.depends_on(Sym::gamma));
    }
}

TEST_CASE("uglov first-order coefficient vanishes for |mu| <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n))
            CHECK(uglov(mu, engine()).first_order.is_zero());
}

TEST_CASE("uglov m-unitriangularity survives the limit") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& mu : partitions_of(n)) {
            const UglovPoly u = uglov(mu, engine());
            CHECK(u.m_expansion.coeff(mu) == kOne);
            for (const auto& [nu, c] : u.m_expansion.terms())
                if (nu != mu)
                    CHECK(dominance_compare(nu, mu) == Dominance::less);
        }
    }
}

TEST_CASE("uglov_at specialization") {
    // (2) at gamma = 1: m_2 + m_11
    const UglovPoly u = uglov_at(Partition({2}), Rational(1), engine());
    CHECK(u.m_expansion.coeff(Partition({1, 1})) == kOne);

    // (1) at gamma = 3/7: p_1
    CHECK(uglov_at(Partition({1}), Rational(3, 7), engine()).expansion == SymFunc::p(1));

    // (2) at gamma = -1: pole in the 2/(1+gamma) coefficient
    CHECK_THROWS_AS(uglov_at(Partition({2}), Rational(-1), engine()), PoleError);
}

TEST_CASE("uglov symbolic/substitute commutation at 20 rational gamma values") {
    const UglovPoly sym = uglov(Partition({2, 1}), engine());
    for (int k = 1; k <= 20; ++k) {
        const Rational g(k, 7);
        const UglovPoly at = uglov_at(Partition({2, 1}), g, engine());
        const RatFunc gv{MultiPoly(Cyclo(g))};
        for (const auto& [mu, c] : sym.expansion.terms())
            CHECK(at.expansion.coeff(mu) == c.substitute(Sym::gamma, gv));
    }
}
