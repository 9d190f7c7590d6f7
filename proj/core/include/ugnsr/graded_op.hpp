#pragma once

/**
 * @file graded_op.hpp
 * @brief Degree-shifting linear operators on Lambda with parity metadata and
 *        per-degree matrix extraction (deg p_k = k).
 */

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ugnsr/symfunc.hpp"

namespace ugnsr {

enum class Parity { even, odd };

inline Parity operator*(Parity a, Parity b) {
    return a == b ? Parity::even : Parity::odd;
}

class GradedOp {
public:
    using Action = std::function<SymFunc(const SymFunc&)>;

    GradedOp() : GradedOp(0, Parity::even, "0", [](const SymFunc&) { return SymFunc(); }) {}
    GradedOp(int degree_shift, Parity parity, std::string label, Action action);

    static GradedOp identity();
    static GradedOp zero(int degree_shift = 0, Parity parity = Parity::even);
    /// Scalar multiplication operator c * id.
    static GradedOp scalar(const RatFunc& c);
    /// Multiplication by p_k (degree +k) and k * d/dp_k-style derivations.
    static GradedOp mul_p(int k);
    static GradedOp d_p(int k);

    int degree_shift() const { return shift_; }
    Parity parity() const { return parity_; }
    const std::string& label() const { return label_; }

    SymFunc operator()(const SymFunc& f) const { return action_(f); }

    /// Composition: (a * b)(f) = a(b(f)). Shifts add, parities multiply.
    friend GradedOp operator*(const GradedOp& a, const GradedOp& b);
    /// Sum (shifts must agree; parity of the sum follows the first operand).
    friend GradedOp operator+(const GradedOp& a, const GradedOp& b);
    friend GradedOp operator-(const GradedOp& a, const GradedOp& b);
    GradedOp scaled(const RatFunc& c) const;

    GradedOp relabeled(std::string label) const;

    /// Matrix on the degree-d homogeneous component: column j is the image of
    /// the j-th partition of d (in canonical order) expressed in the p-basis
    /// of degree d + shift. Rows index partitions of the output degree.
    std::vector<std::vector<RatFunc>> matrix_on_degree(int d) const;

private:
    int shift_;
    Parity parity_;
    std::string label_;
    Action action_;
};

/// Canonically ordered p-basis of Lambda^d (ascending partition order).
const std::vector<Partition>& p_basis_of_degree(int d);

/// Matrix equality helper used by the relation checkers.
bool same_matrix(const std::vector<std::vector<RatFunc>>& a,
                 const std::vector<std::vector<RatFunc>>& b);

} // namespace ugnsr
