#include "ugnsr/ratfunc.hpp"

#include <cctype>
#include <utility>

namespace ugnsr {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    canon();
}

RatFunc RatFunc::symbol(Sym s, int e) {
    if (e >= 0) return RatFunc(MultiPoly::symbol(s, static_cast<unsigned>(e)));
    return RatFunc(MultiPoly(Cyclo(1L)), MultiPoly::symbol(s, static_cast<unsigned>(-e)));
}

Cyclo RatFunc::constant_value() const {
    return num_.constant_term() / den_.constant_term();
}

void RatFunc::canon() {
    if (num_.is_zero()) {
        den_ = MultiPoly(Cyclo(1L));
        return;
    }
    if (!den_.is_one()) {
        MultiPoly g = MultiPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = MultiPoly::exact_div(num_, g);
            den_ = MultiPoly::exact_div(den_, g);
        }
    }
    const Cyclo lc = den_.leading().second;
    if (lc != Cyclo(1L)) {
        const Cyclo inv = lc.inverse();
        num_.mul_scalar(inv);
        den_.mul_scalar(inv);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        canon();
        return *this;
    }
    MultiPoly g = MultiPoly::gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        // coprime denominators: only a unit normalization can remain
        const Cyclo lc = den_.leading().second;
        if (lc != Cyclo(1L)) {
            const Cyclo inv = lc.inverse();
            num_.mul_scalar(inv);
            den_.mul_scalar(inv);
        }
        return *this;
    }
    // a/b + c/d with g = gcd(b,d): the sum a d' + c b' is coprime to b' and
    // d', so only gcd(num, g) can cancel.
    MultiPoly db = MultiPoly::exact_div(o.den_, g);
    num_ = num_ * db + o.num_ * MultiPoly::exact_div(den_, g);
    den_ = den_ * db;
    if (num_.is_zero()) {
        den_ = MultiPoly(Cyclo(1L));
        return *this;
    }
    MultiPoly h = MultiPoly::gcd(num_, g);
    if (!h.is_one()) {
        num_ = MultiPoly::exact_div(num_, h);
        den_ = MultiPoly::exact_div(den_, h);
    }
    const Cyclo lc = den_.leading().second;
    if (lc != Cyclo(1L)) {
        const Cyclo inv = lc.inverse();
        num_.mul_scalar(inv);
        den_.mul_scalar(inv);
    }
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFunc();
    MultiPoly an = num_, ad = den_, bn = o.num_, bd = o.den_;
    MultiPoly g1 = MultiPoly::gcd(an, bd);
    if (!g1.is_one()) {
        an = MultiPoly::exact_div(an, g1);
        bd = MultiPoly::exact_div(bd, g1);
    }
    MultiPoly g2 = MultiPoly::gcd(bn, ad);
    if (!g2.is_one()) {
        bn = MultiPoly::exact_div(bn, g2);
        ad = MultiPoly::exact_div(ad, g2);
    }
    num_ = an * bn;
    den_ = ad * bd;
    // cross-reduced factors are pairwise coprime; just re-normalize monic
    const Cyclo lc = den_.leading().second;
    if (lc != Cyclo(1L)) {
        const Cyclo inv = lc.inverse();
        num_.mul_scalar(inv);
        den_.mul_scalar(inv);
    }
    return *this;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inversion of the zero rational function");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    const Cyclo lc = r.den_.leading().second;
    if (lc != Cyclo(1L)) {
        const Cyclo inv = lc.inverse();
        r.num_.mul_scalar(inv);
        r.den_.mul_scalar(inv);
    }
    return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int e) const {
    if (e == 0) return RatFunc(1L);
    RatFunc base = e > 0 ? *this : inverse();
    int n = e > 0 ? e : -e;
    RatFunc acc(1L);
    while (n > 0) {
        if (n & 1) acc *= base;
        base = (n >>= 1) > 0 ? base * base : base;
    }
    return acc;
}

bool RatFunc::operator<(const RatFunc& o) const {
    const std::string a = to_string(), b = o.to_string();
    return a < b;
}

RatFunc RatFunc::substitute(const std::map<Sym, RatFunc>& values) const {
    auto eval_poly = [&](const MultiPoly& p) {
        RatFunc acc;
        for (const auto& [e, c] : p.terms()) {
            RatFunc t{MultiPoly(c)};
            for (std::size_t k = 0; k < kNumSyms; ++k) {
                if (e[k] == 0) continue;
                const Sym s = static_cast<Sym>(k);
                auto it = values.find(s);
                if (it == values.end()) {
                    t *= RatFunc(MultiPoly::symbol(s, e[k]));
                } else {
                    t *= it->second.pow(static_cast<int>(e[k]));
                }
            }
            acc += t;
        }
        return acc;
    };
    RatFunc n = eval_poly(num_), d = eval_poly(den_);
    if (d.is_zero()) throw PoleError(0, "substitution made the denominator vanish");
    return n / d;
}

RatFunc RatFunc::substitute(Sym s, const RatFunc& value) const {
    if (!depends_on(s)) return *this;
    return substitute(std::map<Sym, RatFunc>{{s, value}});
}

std::complex<double> RatFunc::eval_complex(const std::map<Sym, std::complex<double>>& vals) const {
    std::array<std::complex<double>, kNumSyms> v{};
    for (const auto& [s, x] : vals) v[static_cast<std::size_t>(s)] = x;
    return num_.eval_complex(v) / den_.eval_complex(v);
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Parser: expr := term (('+'|'-') term)*, term := unary (('*'|'/') unary)*,
// unary := ['-'] factor, factor := atom ['^' ['-'] integer],
// atom := integer | 'z8' | symbol | '(' expr ')'
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    RatFunc parse_expr() {
        RatFunc acc = parse_term();
        while (true) {
            if (eat('+')) {
                acc += parse_term();
            } else if (eat('-')) {
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    RatFunc parse_term() {
        RatFunc acc = parse_unary();
        while (true) {
            if (eat('*')) {
                acc *= parse_unary();
            } else if (eat('/')) {
                acc /= parse_unary();
            } else {
                return acc;
            }
        }
    }

    RatFunc parse_unary() {
        if (eat('-')) return -parse_unary();
        return parse_factor();
    }

    RatFunc parse_factor() {
        RatFunc base = parse_atom();
        if (eat('^')) {
            bool neg = eat('-');
            std::string digits = read_digits();
            if (digits.empty()) throw Error("expected integer exponent at position " + std::to_string(pos));
            int e = std::stoi(digits);
            base = base.pow(neg ? -e : e);
        }
        return base;
    }

    std::string read_digits() {
        skip_ws();
        std::string d;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) d += s[pos++];
        return d;
    }

    RatFunc parse_atom() {
        skip_ws();
        if (eat('(')) {
            RatFunc inner = parse_expr();
            if (!eat(')')) throw Error("expected ')' at position " + std::to_string(pos));
            return inner;
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::string d = read_digits();
            return RatFunc(Rational(d));
        }
        std::string name;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            name += s[pos++];
        if (name.empty()) throw Error("unexpected character in expression at position " + std::to_string(pos));
        if (name == "z8") return RatFunc(MultiPoly(Cyclo::zeta(1)));
        if (auto sym = sym_from_name(name)) return RatFunc::symbol(*sym);
        throw Error("unknown symbol '" + name + "'");
    }
};

} // namespace

RatFunc RatFunc::parse(const std::string& text) {
    Parser p(text);
    RatFunc r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw Error("trailing input in expression: '" + text.substr(p.pos) + "'");
    return r;
}

} // namespace ugnsr
