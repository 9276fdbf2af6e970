#include "zetac/complex_value.hpp"

namespace zetac {

ComplexValue cdiv(const ComplexValue& a, const ComplexValue& b) {
    // Real or pure-imaginary denominators divide componentwise; this keeps
    // exact zeros exact and avoids needless rounding.
    if (b.im == 0.0) {
        return {a.re / b.re, a.im / b.re};
    }
    if (b.re == 0.0) {
        // (x + yi) / (di) = y/d - (x/d)i
        return {a.im / b.im, -(a.re / b.im)};
    }
    // Smith's algorithm: scale by the larger denominator component.
    if (std::fabs(b.re) >= std::fabs(b.im)) {
        const double t = b.im / b.re;
        const double den = b.re + b.im * t;
        return {(a.re + a.im * t) / den, (a.im - a.re * t) / den};
    }
    const double t = b.re / b.im;
    const double den = b.re * t + b.im;
    return {(a.re * t + a.im) / den, (a.im * t - a.re) / den};
}

ComplexValue cexp(const ComplexValue& a) {
    if (a.im == 0.0) return {std::exp(a.re), 0.0};
    const double m = std::exp(a.re);
    return {zero_absorbing_mul(m, std::cos(a.im)),
            zero_absorbing_mul(m, std::sin(a.im))};
}

ComplexValue clog(const ComplexValue& a) {
    if (a.im == 0.0 && a.re > 0.0) return {std::log(a.re), 0.0};
    return {std::log(std::hypot(a.re, a.im)), std::atan2(a.im, a.re)};
}

ComplexValue csqrt(const ComplexValue& a) {
    if (a.im == 0.0) {
        if (a.re >= 0.0) return {std::sqrt(a.re), 0.0};
        return {0.0, std::sqrt(-a.re)};
    }
    // Principal square root: compute the well-conditioned component first,
    // derive the other from im = 2*u*v.
    const double m = std::hypot(a.re, a.im);
    const double t = std::sqrt((m + std::fabs(a.re)) / 2.0);
    if (a.re >= 0.0) {
        return {t, a.im / (2.0 * t)};
    }
    const double v = std::copysign(t, a.im);
    return {a.im / (2.0 * v), v};
}

ComplexValue cpow_int(const ComplexValue& base, std::int64_t k) {
    const bool invert = k < 0;
    std::uint64_t e = invert ? static_cast<std::uint64_t>(-(k + 1)) + 1
                             : static_cast<std::uint64_t>(k);
    ComplexValue acc{1.0, 0.0};
    ComplexValue sq = base;
    while (e != 0) {
        if (e & 1) acc = cmul(acc, sq);
        e >>= 1;
        if (e != 0) sq = cmul(sq, sq);
    }
    if (invert) return cdiv({1.0, 0.0}, acc);
    return acc;
}

ComplexValue cpow(const ComplexValue& z, const ComplexValue& w) {
    return cexp(cmul(w, clog(z)));
}

}  // namespace zetac
