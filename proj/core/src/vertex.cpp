#include "ugnsr/vertex.hpp"

namespace ugnsr {

std::map<Partition, RatFunc> exp_weights(const std::map<int, RatFunc>& coeffs, int w) {
    std::map<Partition, RatFunc> out;
    std::vector<int> support;
    for (const auto& [j, c] : coeffs)
        if (!c.is_zero()) support.push_back(j);
    for (const Partition& kappa : partitions_of_with_parts(w, support)) {
        RatFunc weight(1L);
        for (int part : kappa.parts()) weight *= coeffs.at(part);
        Rational aut(1);
        for (const auto& [v, m] : kappa.multiplicities())
            for (int j = 2; j <= m; ++j) aut *= j;
        out.emplace(kappa, weight / RatFunc(aut));
    }
    return out;
}

SymFunc vertex_mode_apply(const VertexOp& op, int m, const SymFunc& f) {
    SymFunc out;
    if (f.is_zero() || op.prefactor.is_zero()) return out;

    std::map<int, SymFunc> by_degree;
    for (const auto& [mu, c] : f.terms()) by_degree[mu.weight()] += SymFunc::single(mu, c);

    for (const auto& [d, comp] : by_degree) {
        for (int down_w = 0; down_w <= d; ++down_w) {
            const int up_w = m + down_w;
            if (up_w < 0) continue;
            const auto downs = exp_weights(op.down, down_w);
            if (downs.empty()) continue;
            const auto ups = exp_weights(op.up, up_w);
            if (ups.empty()) continue;
            for (const auto& [nu, wd] : downs) {
                SymFunc g = comp;
                for (int part : nu.parts()) {
                    g = g.d_p(part);
                    if (g.is_zero()) break;
                }
                if (g.is_zero()) continue;
                g.scale(wd * op.prefactor);
                for (const auto& [kappa, wu] : ups) {
                    SymFunc h = g;
                    for (int part : kappa.parts()) h = h.mul_p(part);
                    h.scale(wu);
                    out += h;
                }
            }
        }
    }
    return out;
}

} // namespace ugnsr
