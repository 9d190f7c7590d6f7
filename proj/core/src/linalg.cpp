#include "ugnsr/linalg.hpp"

#include <algorithm>

#include "ugnsr/errors.hpp"

namespace ugnsr {

namespace {

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly();
    return MultiPoly::exact_div(a * b, MultiPoly::gcd(a, b));
}

} // namespace

std::vector<RatVector> nullspace(const RatMatrix& a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;

    // Clear denominators row by row; Bareiss stays in the polynomial ring.
    std::vector<std::vector<MultiPoly>> w(m, std::vector<MultiPoly>(n));
    for (std::size_t i = 0; i < m; ++i) {
        MultiPoly l(Cyclo(1L));
        for (const auto& e : a[i])
            if (!e.is_zero()) l = poly_lcm(l, e.den());
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j].is_zero()) continue;
            w[i][j] = a[i][j].num() * MultiPoly::exact_div(l, a[i][j].den());
        }
    }

    // Fraction-free forward elimination, pivot row chosen by minimal degree.
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    MultiPoly prev(Cyclo(1L));
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t best = m;
        unsigned best_deg = 0;
        for (std::size_t i = r; i < m; ++i) {
            if (w[i][col].is_zero()) continue;
            const unsigned d = w[i][col].degree();
            if (best == m || d < best_deg) {
                best = i;
                best_deg = d;
            }
        }
        if (best == m) continue;
        std::swap(w[r], w[best]);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                MultiPoly v = w[i][j] * w[r][col] - w[i][col] * w[r][j];
                w[i][j] = v.is_zero() ? MultiPoly() : MultiPoly::exact_div(v, prev);
            }
            w[i][col] = MultiPoly();
        }
        prev = w[r][col];
        pivots.emplace_back(r, col);
        ++r;
    }

    // Back-substitution over the fraction field.
    std::vector<bool> is_pivot_col(n, false);
    for (const auto& [pr, pc] : pivots) is_pivot_col[pc] = true;

    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot_col[f]) continue;
        RatVector x(n);
        x[f] = RatFunc(1L);
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            const auto [pr, pc] = *it;
            RatFunc acc;
            for (std::size_t j = pc + 1; j < n; ++j) {
                if (w[pr][j].is_zero() || x[j].is_zero()) continue;
                acc += RatFunc(w[pr][j]) * x[j];
            }
            x[pc] = -acc / RatFunc(w[pr][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

RatVector mat_vec(const RatMatrix& a, const RatVector& x) {
    RatVector y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        RatFunc acc;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (a[i][j].is_zero() || x[j].is_zero()) continue;
            acc += a[i][j] * x[j];
        }
        y[i] = acc;
    }
    return y;
}

} // namespace ugnsr
