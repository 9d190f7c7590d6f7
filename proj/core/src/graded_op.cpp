#include "ugnsr/graded_op.hpp"

#include <mutex>

#include "ugnsr/errors.hpp"

namespace ugnsr {

GradedOp::GradedOp(int degree_shift, Parity parity, std::string label, Action action)
    : shift_(degree_shift), parity_(parity), label_(std::move(label)), action_(std::move(action)) {}

GradedOp GradedOp::identity() {
    return GradedOp(0, Parity::even, "id", [](const SymFunc& f) { return f; });
}

GradedOp GradedOp::zero(int degree_shift, Parity parity) {
    return GradedOp(degree_shift, parity, "0", [](const SymFunc&) { return SymFunc(); });
}

GradedOp GradedOp::scalar(const RatFunc& c) {
    return GradedOp(0, Parity::even, "(" + c.to_string() + ")",
                    [c](const SymFunc& f) {
                        SymFunc g = f;
                        return g.scale(c);
                    });
}

GradedOp GradedOp::mul_p(int k) {
    return GradedOp(k, Parity::even, "p" + std::to_string(k),
                    [k](const SymFunc& f) { return f.mul_p(k); });
}

GradedOp GradedOp::d_p(int k) {
    return GradedOp(-k, Parity::even, "d" + std::to_string(k),
                    [k](const SymFunc& f) { return f.d_p(k); });
}

GradedOp operator*(const GradedOp& a, const GradedOp& b) {
    return GradedOp(a.shift_ + b.shift_, a.parity_ * b.parity_,
                    a.label_ + "*" + b.label_,
                    [a, b](const SymFunc& f) { return a(b(f)); });
}

GradedOp operator+(const GradedOp& a, const GradedOp& b) {
    return GradedOp(a.shift_, a.parity_, a.label_ + "+" + b.label_,
                    [a, b](const SymFunc& f) { return a(f) + b(f); });
}

GradedOp operator-(const GradedOp& a, const GradedOp& b) {
    return GradedOp(a.shift_, a.parity_, a.label_ + "-" + b.label_,
                    [a, b](const SymFunc& f) { return a(f) - b(f); });
}

GradedOp GradedOp::scaled(const RatFunc& c) const {
    const GradedOp self = *this;
    return GradedOp(shift_, parity_, "(" + c.to_string() + ")*" + label_,
                    [self, c](const SymFunc& f) {
                        SymFunc g = self(f);
                        return g.scale(c);
                    });
}

GradedOp GradedOp::relabeled(std::string label) const {
    GradedOp r = *this;
    r.label_ = std::move(label);
    return r;
}

const std::vector<Partition>& p_basis_of_degree(int d) {
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it == cache.end()) {
        auto parts = partitions_of(d);
        std::sort(parts.begin(), parts.end());
        it = cache.emplace(d, std::move(parts)).first;
    }
    return it->second;
}

std::vector<std::vector<RatFunc>> GradedOp::matrix_on_degree(int d) const {
    const auto& dom = p_basis_of_degree(d);
    const int out_deg = d + shift_;
    std::vector<std::vector<RatFunc>> m;
    if (out_deg < 0) {
        // image is zero; an empty row set encodes the zero map
        m.assign(0, {});
        return m;
    }
    const auto& cod = p_basis_of_degree(out_deg);
    m.assign(cod.size(), std::vector<RatFunc>(dom.size()));
    for (std::size_t j = 0; j < dom.size(); ++j) {
        SymFunc img = action_(SymFunc::single(dom[j], RatFunc(1L)));
        for (const auto& [mu, c] : img.terms()) {
            if (mu.weight() != out_deg)
                throw StructuralError("operator '" + label_ + "' violates its degree shift");
            auto pos = std::lower_bound(cod.begin(), cod.end(), mu);
            m[static_cast<std::size_t>(pos - cod.begin())][j] = c;
        }
    }
    return m;
}

bool same_matrix(const std::vector<std::vector<RatFunc>>& a,
                 const std::vector<std::vector<RatFunc>>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

} // namespace ugnsr
