#pragma once

/**
 * @file partition.hpp
 * @brief Integer partitions: the index set for all symmetric-function bases.
 */

#include <map>
#include <string>
#include <vector>

#include "ugnsr/cyclo.hpp"

namespace ugnsr {

enum class Dominance { less, greater, equal, incomparable, different_weight };

class Partition {
public:
    Partition() = default;
    /// Parts are sorted and validated; zero parts are dropped.
    explicit Partition(std::vector<int> parts);
    static Partition rectangle(int r, int s); ///< (r^s): s parts equal to r

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    /// Multiplicity of the value v among the parts.
    int multiplicity(int v) const;
    std::map<int, int> multiplicities() const;

    /// z_mu = prod_i i^{m_i} m_i!
    Rational z() const;

    /// Remove one part equal to v (precondition: present).
    Partition remove_part(int v) const;
    /// Insert one part equal to v > 0.
    Partition add_part(int v) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    /// Weight first, then ascending lex on the part lists: a canonical total
    /// order used for map keys and serialization.
    bool operator<(const Partition& o) const {
        if (weight_ != o.weight_) return weight_ < o.weight_;
        return parts_ < o.parts_;
    }

    std::string to_string() const;          ///< comma list, "" for the empty partition
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

Dominance dominance_compare(const Partition& mu, const Partition& nu);

/// All partitions of n in reverse-lexicographic order ((n) first, (1^n) last).
/// Throws CapacityError when n < 0 or n > max.
std::vector<Partition> partitions_of(int n, int max = 64);

/// Partitions of n with all parts drawn from `allowed` (values distinct, > 0).
std::vector<Partition> partitions_of_with_parts(int n, const std::vector<int>& allowed);

/// Partition counting via the Euler pentagonal-number recurrence.
/// Independent of the enumeration above; used as a counting oracle.
std::vector<long> partition_counts(int max_n);

} // namespace ugnsr
