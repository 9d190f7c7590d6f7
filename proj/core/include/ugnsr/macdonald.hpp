#pragma once

/**
 * @file macdonald.hpp
 * @brief Macdonald symmetric functions P_mu(q,t): Gram-Schmidt construction
 *        against the q,t scalar product with dominance unitriangularity, the
 *        bosonized eta_0 operator, eigenvalue formulas, and an advisory disk
 *        cache keyed by partition.
 */

#include <mutex>
#include <optional>
#include <string>

#include "ugnsr/graded_op.hpp"
#include "ugnsr/symfunc.hpp"

namespace ugnsr {

struct MacdonaldPoly {
    Partition mu;
    SymFunc expansion;   ///< p-basis
    SymFunc m_expansion; ///< m-basis (unitriangular: coefficient of m_mu is 1)
};

class MacdonaldEngine {
public:
    explicit MacdonaldEngine(int max_degree = 24, std::string cache_dir = {});

    /// P_mu(q,t). Cached in memory and, when a cache directory is set, on disk
    /// (stale or corrupt files are recomputed silently).
    const MacdonaldPoly& macdonald(const Partition& mu);

    int max_degree() const { return max_degree_; }
    const std::string& cache_dir() const { return cache_dir_; }

private:
    MacdonaldPoly construct(const Partition& mu);
    std::optional<MacdonaldPoly> load_from_disk(const Partition& mu) const;
    void store_to_disk(const MacdonaldPoly& p) const;

    int max_degree_;
    std::string cache_dir_;
    std::map<Partition, MacdonaldPoly> cache_;
    std::recursive_mutex mtx_;
};

/// The operator eta_0 = [z^0] exp(sum (1-t^{-n}) p_n z^n / n)
///                            exp(-sum (1-q^n) d/dp_n z^{-n});
/// degree preserving, P_mu is an eigenvector with eigenvalue
/// macdonald_eigenvalue(mu).
GradedOp eta_zero();

/// E_mu(q,t) = 1 + (t-1) sum_i (q^{mu_i} - 1) t^{-i}.
RatFunc macdonald_eigenvalue(const Partition& mu);

/// P_mu(q^{-1}, t^{-1}) == P_mu(q, t) (inversion symmetry of the coefficients).
bool inversion_symmetric(const MacdonaldPoly& p);

} // namespace ugnsr
