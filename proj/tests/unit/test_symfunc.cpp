#include "doctest.h"

#include <map>

#include "ugnsr/graded_op.hpp"
#include "ugnsr/nvar.hpp"
#include "ugnsr/symfunc.hpp"

using namespace ugnsr;

namespace {

// Independent oracle: expand p_lambda literally in N variables (exponent
// vectors, no symmetric-function machinery) and collect the coefficient of
// the weakly-decreasing representative of mu.
Rational p_to_m_bruteforce(const Partition& lambda, const Partition& mu) {
    const int n = lambda.weight();
    std::map<std::vector<int>, long> expansion{{std::vector<int>(static_cast<std::size_t>(n), 0), 1}};
    for (int part : lambda.parts()) {
        std::map<std::vector<int>, long> next;
        for (const auto& [e, c] : expansion) {
            for (int i = 0; i < n; ++i) {
                std::vector<int> e2 = e;
                e2[static_cast<std::size_t>(i)] += part;
                next[e2] += c;
            }
        }
        expansion = std::move(next);
    }
    std::vector<int> rep(mu.parts());
    rep.resize(static_cast<std::size_t>(n), 0);
    auto it = expansion.find(rep);
    return it == expansion.end() ? Rational(0) : Rational(it->second);
}

} // namespace

TEST_CASE("dominance order") {
    CHECK(dominance_compare(Partition({2, 1}), Partition({1, 1, 1})) == Dominance::greater);
    CHECK(dominance_compare(Partition({3, 3}), Partition({4, 1, 1})) == Dominance::incomparable);
    CHECK(dominance_compare(Partition({2}), Partition({1, 1, 1})) == Dominance::different_weight);
    CHECK(dominance_compare(Partition({2, 1}), Partition({2, 1})) == Dominance::equal);
}

TEST_CASE("dominance is a partial order on weights <= 8") {
    for (int n = 1; n <= 8; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts) {
            for (const auto& b : parts) {
                const Dominance ab = dominance_compare(a, b);
                const Dominance ba = dominance_compare(b, a);
                // antisymmetry
                if (ab == Dominance::greater) CHECK(ba == Dominance::less);
                if (ab == Dominance::equal) CHECK(a == b);
                for (const auto& c : parts) {
                    // transitivity
                    if (ab == Dominance::greater &&
                        dominance_compare(b, c) == Dominance::greater)
                        CHECK(dominance_compare(a, c) == Dominance::greater);
                }
            }
        }
    }
}

TEST_CASE("partitions_of") {
    const auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(10).size() == 42);
    // independent counting oracle (pentagonal recurrence)
    const auto counts = partition_counts(12);
    for (int n = 0; n <= 12; ++n)
        CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[static_cast<std::size_t>(n)]));
    CHECK_THROWS_AS(partitions_of(-1), CapacityError);
}

TEST_CASE("basis change: frozen examples") {
    const SymFunc m11 = basis_change(SymFunc::single(Partition({1, 1}), RatFunc(1L)),
                                     Basis::m, Basis::p);
    // m_{(1,1)} = (p_1^2 - p_2)/2
    CHECK(m11.coeff(Partition({1, 1})) == RatFunc(1L, 2L));
    CHECK(m11.coeff(Partition({2})) == RatFunc(-1L, 2L));

    const SymFunc p2 = basis_change(SymFunc::p(2), Basis::p, Basis::m);
    CHECK(p2.coeff(Partition({2})) == RatFunc(1L));
    CHECK(p2.terms().size() == 1);

    const SymFunc p1 = basis_change(SymFunc::p(1), Basis::p, Basis::m);
    CHECK(p1.coeff(Partition({1})) == RatFunc(1L));
    CHECK(p1.terms().size() == 1);

    CHECK_THROWS_AS(
        basis_change(SymFunc::single(Partition({25}), RatFunc(1L)), Basis::p, Basis::m),
        CapacityError);
}

TEST_CASE("basis change agrees with the finite-variable oracle") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const SymFunc in_m =
                basis_change(SymFunc::single(lambda, RatFunc(1L)), Basis::p, Basis::m);
            for (const auto& mu : partitions_of(n)) {
                CHECK(in_m.coeff(mu) == RatFunc(Rational(p_to_m_bruteforce(lambda, mu))));
            }
        }
    }
}

TEST_CASE("basis change round trip is the identity up to degree 8") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& mu : partitions_of(n)) {
            const SymFunc f = SymFunc::single(mu, RatFunc(1L));
            CHECK(basis_change(basis_change(f, Basis::p, Basis::m), Basis::m, Basis::p) == f);
            CHECK(basis_change(basis_change(f, Basis::m, Basis::p), Basis::p, Basis::m) == f);
        }
    }
}

TEST_CASE("macdonald inner product") {
    const RatFunc one(1L);
    const RatFunc q = RatFunc::symbol(Sym::q), t = RatFunc::symbol(Sym::t);
    const SymFunc p2 = SymFunc::p(2);
    const SymFunc p11 = SymFunc::single(Partition({1, 1}), RatFunc(1L));

    CHECK(macdonald_inner(p2, p2) ==
          RatFunc(2L) * (one - q * q) / (one - t * t));
    CHECK(macdonald_inner(p11, p2).is_zero());
    CHECK(macdonald_inner(p11, p11) ==
          RatFunc(2L) * (one - q) * (one - q) / ((one - t) * (one - t)));

    // symmetry and bilinearity spot checks
    const SymFunc f = p2 + RatFunc(3L) * SymFunc::single(Partition({1, 1}), RatFunc(1L));
    CHECK(macdonald_inner(f, p2) == macdonald_inner(p2, f));
    CHECK(macdonald_inner(f, f) ==
          macdonald_inner(p2, p2) + RatFunc(9L) * macdonald_inner(p11, p11));
}

TEST_CASE("dimension of degree-m component matches both bases") {
    for (int m = 0; m <= 8; ++m) {
        const auto dim = partitions_of(m).size();
        // p-basis indexing is by partitions; m-basis via invertible transition
        const auto& basis = p_basis_of_degree(m);
        CHECK(basis.size() == dim);
    }
}

TEST_CASE("N-variable difference operator") {
    // f = 1, N = 2: eigenvalue t + 1 on the empty partition
    const RatFunc one(1L);
    const RatFunc q = RatFunc::symbol(Sym::q), t = RatFunc::symbol(Sym::t);
    const NVarPoly f1 = NVarPoly::constant(2, one);
    CHECK(apply_D_N(f1) == NVarPoly::constant(2, t + one));

    // f = x1 + x2: eigenvalue q t + 1
    NVarPoly x12 = NVarPoly::variable(2, 0) + NVarPoly::variable(2, 1);
    NVarPoly expect = x12;
    expect.scale(q * t + one);
    CHECK(apply_D_N(x12) == expect);

    CHECK(macdonald_eigenvalue_n(Partition({1}), 2) == q * t + one);
    CHECK(macdonald_eigenvalue_n(Partition{}, 2) == t + one);
    CHECK(macdonald_eigenvalue_n(Partition({2}), 2) == q * q * t + one);

    // non-symmetric input is rejected
    CHECK_THROWS_AS(apply_D_N(NVarPoly::variable(2, 0)), ContractViolation);
}

TEST_CASE("projection to N variables") {
    // pi_2(p_2) = x1^2 + x2^2; pi_2(m_{(1,1)}) = x1 x2
    const NVarPoly p2 = project_to_n_vars(SymFunc::p(2), 2);
    NVarPoly expect = NVarPoly::variable(2, 0, 2) + NVarPoly::variable(2, 1, 2);
    CHECK(p2 == expect);

    const SymFunc m11_p = basis_change(SymFunc::single(Partition({1, 1}), RatFunc(1L)),
                                       Basis::m, Basis::p);
    const NVarPoly m11 = project_to_n_vars(m11_p, 2);
    CHECK(m11 == monomial_sym_poly(Partition({1, 1}), 2));
    CHECK(m11.is_symmetric());
}
