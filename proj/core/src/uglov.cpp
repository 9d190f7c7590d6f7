#include "ugnsr/uglov.hpp"

#include "ugnsr/errors.hpp"
#include "ugnsr/hbar.hpp"

namespace ugnsr {

UglovPoly uglov(const Partition& mu, MacdonaldEngine& engine) {
    const MacdonaldPoly& p = engine.macdonald(mu);
    UglovPoly out;
    out.mu = mu;
    out.gamma = RatFunc::symbol(Sym::gamma);

    const AdaptiveExpander expander; // orders 4, 8, ..., 64
    for (const auto& [nu, c] : p.m_expansion.terms()) {
        HbarSeries s;
        try {
            s = expander.expand(c, rules_qt_minus_exp, 2);
        } catch (const IncreaseTruncationError& e) {
            throw Error("uglov: coefficient of m[" + nu.to_string() + "] in P[" +
                        mu.to_string() + "] still truncated at order " +
                        std::to_string(e.truncation));
        }
        RatFunc limit;
        try {
            limit = limit_h0(s);
        } catch (const PoleError& e) {
            // Would contradict the existence of the limit; fatal with context.
            throw Error("uglov: pole of order " + std::to_string(e.pole_order) +
                        " in the m[" + nu.to_string() + "] coefficient of P[" +
                        mu.to_string() + "]");
        }
        out.m_expansion.set_coeff(nu, limit);
        out.first_order.set_coeff(nu, s.coeff(1));
    }
    out.expansion = basis_change(out.m_expansion, Basis::m, Basis::p, engine.max_degree());
    return out;
}

UglovPoly uglov_at(const Partition& mu, const Rational& gamma, MacdonaldEngine& engine) {
    UglovPoly sym = uglov(mu, engine);
    UglovPoly out;
    out.mu = mu;
    out.gamma = RatFunc(gamma);
    const RatFunc value{MultiPoly(Cyclo(gamma))};
    auto specialize = [&](const SymFunc& f, const char* what) {
        SymFunc g;
        for (const auto& [nu, c] : f.terms()) {
            try {
                g.set_coeff(nu, c.substitute(Sym::gamma, value));
            } catch (const PoleError&) {
                throw PoleError(1, std::string(what) + " coefficient of m[" + nu.to_string() +
                                       "] = " + c.to_string() + " at gamma = " + gamma.get_str());
            }
        }
        return g;
    };
    out.m_expansion = specialize(sym.m_expansion, "m-basis");
    out.expansion = specialize(sym.expansion, "p-basis");
    out.first_order = specialize(sym.first_order, "first-order");
    return out;
}

} // namespace ugnsr
