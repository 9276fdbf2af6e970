#pragma once

#include <cmath>
#include <cstdint>

namespace zetac {

/// A rectangular complex number: the codomain of every evaluation.
/// Components are finite doubles except when a value has saturated to the
/// overflow sentinel (any non-finite component), which the comparison layer
/// treats as larger than any finite magnitude.
struct ComplexValue {
    double re = 0.0;
    double im = 0.0;

    bool is_overflow() const {
        return !(std::isfinite(re) && std::isfinite(im));
    }
    bool is_zero() const { return re == 0.0 && im == 0.0; }
    bool is_real() const { return im == 0.0; }

    static ComplexValue imaginary_unit() { return {0.0, 1.0}; }

    friend bool operator==(const ComplexValue& a, const ComplexValue& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// Product that treats an exact-zero factor as an annihilator, so that
// pure-real and pure-imaginary values keep exact zero components through
// overflow: (inf,0)*(inf,0) must stay (inf,0), not (inf,nan).
inline double zero_absorbing_mul(double x, double y) {
    if (x == 0.0 || y == 0.0) return 0.0;
    return x * y;
}

inline ComplexValue cadd(const ComplexValue& a, const ComplexValue& b) {
    return {a.re + b.re, a.im + b.im};
}

inline ComplexValue csub(const ComplexValue& a, const ComplexValue& b) {
    return {a.re - b.re, a.im - b.im};
}

inline ComplexValue cneg(const ComplexValue& a) { return {-a.re, -a.im}; }

inline ComplexValue cmul(const ComplexValue& a, const ComplexValue& b) {
    return {zero_absorbing_mul(a.re, b.re) - zero_absorbing_mul(a.im, b.im),
            zero_absorbing_mul(a.re, b.im) + zero_absorbing_mul(a.im, b.re)};
}

// Caller guarantees b != 0+0i.
ComplexValue cdiv(const ComplexValue& a, const ComplexValue& b);

// Principal-branch transcendentals. clog's imaginary part lies in (-pi, pi].
ComplexValue cexp(const ComplexValue& a);
ComplexValue clog(const ComplexValue& a);  // caller guarantees a != 0
ComplexValue csqrt(const ComplexValue& a);

// base^k by binary exponentiation; exact for integer powers of exact inputs.
// k < 0 divides into 1 (caller checks base != 0 for k < 0).
ComplexValue cpow_int(const ComplexValue& base, std::int64_t k);

// General principal-branch power exp(w*log(z)); caller handles z == 0.
ComplexValue cpow(const ComplexValue& z, const ComplexValue& w);

}  // namespace zetac
