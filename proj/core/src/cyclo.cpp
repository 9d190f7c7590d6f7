#include "ugnsr/cyclo.hpp"

#include <cmath>

namespace ugnsr {

Cyclo Cyclo::zeta(int k) {
    int m = ((k % 8) + 8) % 8;
    Cyclo z;
    if (m < 4) {
        z.c_[m] = 1;
    } else {
        z.c_[m - 4] = -1;
    }
    return z;
}

Cyclo Cyclo::operator-() const {
    Cyclo r;
    for (int j = 0; j < 4; ++j) r.c_[j] = -c_[j];
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    for (int j = 0; j < 4; ++j) c_[j] += o.c_[j];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    for (int j = 0; j < 4; ++j) c_[j] -= o.c_[j];
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (is_rational()) { // scalar path (the common case in the q,t world)
        if (c_[0] == 0) return *this;
        if (o.is_rational()) {
            c_[0] *= o.c_[0];
            return *this;
        }
        const Rational f = c_[0];
        for (int j = 0; j < 4; ++j) c_[j] = f * o.c_[j];
        return *this;
    }
    if (o.is_rational()) {
        if (o.c_[0] == 0) {
            c_ = {};
            return *this;
        }
        for (int j = 0; j < 4; ++j) c_[j] *= o.c_[0];
        return *this;
    }
    std::array<Rational, 4> r{};
    for (int a = 0; a < 4; ++a) {
        if (c_[a] == 0) continue;
        for (int b = 0; b < 4; ++b) {
            if (o.c_[b] == 0) continue;
            Rational p = c_[a] * o.c_[b];
            int e = a + b;
            if (e >= 4) {
                r[e - 4] -= p; // z^4 = -1
            } else {
                r[e] += p;
            }
        }
    }
    c_ = r;
    return *this;
}

Cyclo Cyclo::conjugate(int k) const {
    Cyclo r;
    for (int j = 0; j < 4; ++j) {
        if (c_[j] == 0) continue;
        r += Cyclo(c_[j]) * zeta(j * k);
    }
    return r;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inversion of zero in Q(z8)");
    if (is_rational()) {
        Cyclo r;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // a^{-1} = (s3 s5 s7)(a) / N(a) with sk the Galois maps z8 -> z8^k;
    // the norm N(a) = a * s3(a) * s5(a) * s7(a) is rational.
    Cyclo cof = conjugate(3) * conjugate(5) * conjugate(7);
    Cyclo norm = *this * cof;
    if (!norm.is_rational() || norm.c_[0] == 0)
        throw StructuralError("cyclotomic norm failed to be a nonzero rational");
    Rational inv = 1 / norm.c_[0];
    Cyclo r;
    for (int j = 0; j < 4; ++j) r.c_[j] = cof.c_[j] * inv;
    return r;
}

std::complex<double> Cyclo::to_complex() const {
    const double s = std::sqrt(0.5);
    const std::complex<double> z(s, s); // exp(i*pi/4)
    std::complex<double> acc(0.0, 0.0);
    std::complex<double> zp(1.0, 0.0);
    for (int j = 0; j < 4; ++j) {
        acc += c_[j].get_d() * zp;
        zp *= z;
    }
    return acc;
}

namespace {

std::string rat_str(const Rational& r) {
    return r.get_str();
}

} // namespace

std::string Cyclo::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int j = 0; j < 4; ++j) {
        if (c_[j] == 0) continue;
        std::string piece;
        if (j == 0) {
            piece = rat_str(c_[j]);
        } else {
            std::string pw = (j == 1) ? "z8" : "z8^" + std::to_string(j);
            if (c_[j] == 1) {
                piece = pw;
            } else if (c_[j] == -1) {
                piece = "-" + pw;
            } else {
                piece = rat_str(c_[j]) + "*" + pw;
            }
        }
        if (!out.empty() && piece[0] != '-') out += "+";
        out += piece;
    }
    return out;
}

} // namespace ugnsr
