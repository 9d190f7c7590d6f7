#pragma once

/**
 * @file verma.hpp
 * @brief Abstract NSR Verma modules in both sectors: canonical PBW words
 *        (L's left of G's, L indices weakly decreasing, G indices strictly
 *        decreasing), a normal-ordering rewriting engine driven by the defining
 *        relations, singular vectors by exact linear solve at level rs/2,
 *        bosonization into Lambda, and comparison with Uglov functions.
 */

#include "ugnsr/nsr.hpp"

namespace ugnsr {

struct PBWWord {
    std::vector<int> l;        ///< L_{-m} factors, m > 0, weakly decreasing
    std::vector<int> g_twice;  ///< G_{-k} factors as 2k > 0, strictly decreasing

    int twice_level() const;
    int g_count() const { return static_cast<int>(g_twice.size()); }

    bool operator==(const PBWWord& o) const { return l == o.l && g_twice == o.g_twice; }
    /// Words with more L factors come first; the first word at any level is
    /// the L_{-1}-power word (the classical normalization anchor).
    bool operator<(const PBWWord& o) const;

    std::string to_string(Sector sector) const;
};

struct VermaHW {
    Sector sector = Sector::NS;
    RatFunc c;      ///< central charge
    RatFunc delta;  ///< L_0 eigenvalue
    RatFunc lambda; ///< G_0 eigenvalue (R sector)
};

struct VermaVector {
    VermaHW hw;
    std::map<PBWWord, RatFunc> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const PBWWord& w, const RatFunc& c);
    VermaVector& scale(const RatFunc& c);
    VermaVector& operator+=(const VermaVector& o);
    bool is_homogeneous(int* twice_level = nullptr) const;
    std::string to_string() const;
};

/// A generator L_n (is_l, index n) or G_k (index as twok).
struct Gen {
    bool is_l = true;
    int idx = 0; ///< n for L, 2k for G
    static Gen L(int n) { return {true, n}; }
    static Gen G(int twok) { return {false, twok}; }
};

/// Commute the generator through to the highest-weight vector using the
/// defining relations; the result is in canonical PBW order.
VermaVector apply_generator(Gen g, const VermaVector& v);

/// All PBW words of the given twice-level in the sector, canonically ordered.
std::vector<PBWWord> pbw_basis(Sector sector, int twice_level);

/// The level-rs/2 singular vector of the (r,s) degenerate Verma module,
/// normalized so the first basis word has coefficient 1. Imposes the
/// generating annihilators (NS: G_{1/2}, G_{3/2}; R: L_1, G_1) as an exact
/// linear system, checks the kernel is one-dimensional, then re-verifies
/// annihilation by every positive generator up to index rs.
VermaVector singular_vector(int r, int s, int epsilon);

/// Image in Lambda: each PBW word acts through the free-field modes on the
/// vacuum at alpha = alpha_{r,s}.
SymFunc bosonize(const VermaVector& v, int r, int s, int epsilon);

struct UglovComparison {
    bool proportional = false;
    RatFunc constant; ///< uglov = constant * bosonized image
    SymFunc bosonized;
    SymFunc uglov_image;
};

/// bosonize(singular_vector(r,s)) against P^{1/beta^2,2}_{(r^s)}.
UglovComparison compare_uglov(int r, int s, int epsilon, MacdonaldEngine& engine);

/// sigma-even/odd split of the singular vector operator (R sector) and the
/// two singular vectors of the two-highest-weight presentation, with the
/// G_0/lambda route cross-checked against the (chi+ -/+ chi-) combinations.
struct SingularPair {
    std::map<PBWWord, RatFunc> d0; ///< sigma-even part of the chi+ operator
    std::map<PBWWord, RatFunc> d1; ///< sigma-odd part
    /// coefficients of the words w G_0 in the tilde operator D0 + D1 G0/lambda
    std::map<PBWWord, RatFunc> g0_coeffs;
    /// components of chi~even and chi~odd in M(c,lambda) + M(c,-lambda)
    VermaVector even_plus, even_minus, odd_plus, odd_minus;
    CheckReport report;
};

SingularPair even_odd_singular(int r, int s, int epsilon);

} // namespace ugnsr
