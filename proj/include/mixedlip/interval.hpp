#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace mixedlip {

// closed interval with outward rounding by one ulp per operation
struct Interval {
    double lo = 0, hi = 0;

    Interval() = default;
    Interval(double x) : lo(x), hi(x) {}
    Interval(double a, double b) : lo(a), hi(b) {}

    static double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
    static double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }

    friend Interval operator+(const Interval& a, const Interval& b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }
    friend Interval operator-(const Interval& a, const Interval& b) { return {down(a.lo - b.hi), up(a.hi - b.lo)}; }
    friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
    friend Interval operator*(const Interval& a, const Interval& b) {
        double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
    }
    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
};

inline Interval sqr(const Interval& a) {
    if (a.lo >= 0) return {Interval::down(a.lo * a.lo), Interval::up(a.hi * a.hi)};
    if (a.hi <= 0) return {Interval::down(a.hi * a.hi), Interval::up(a.lo * a.lo)};
    return {0.0, Interval::up(std::max(a.lo * a.lo, a.hi * a.hi))};
}

inline Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

// enclosure of cos over x; exact extrema are added when a multiple of pi lies inside
inline Interval cos_interval(const Interval& x) {
    constexpr double pi = std::numbers::pi;
    if (x.width() >= 2 * pi) return {-1.0, 1.0};
    double a = std::cos(x.lo), b = std::cos(x.hi);
    double lo = std::min(a, b), hi = std::max(a, b);
    // cos has a max at 2k pi and a min at (2k+1) pi
    double k0 = std::ceil(x.lo / pi - 1e-12), k1 = std::floor(x.hi / pi + 1e-12);
    for (double k = k0; k <= k1; k += 1) {
        if (std::fmod(std::fabs(k), 2.0) == 0) hi = 1.0;
        else lo = -1.0;
    }
    const double eps = 4e-16;
    return {std::max(-1.0, lo - eps), std::min(1.0, hi + eps)};
}

inline Interval sin_interval(const Interval& x) {
    constexpr double h = std::numbers::pi / 2;
    return cos_interval(Interval(x.lo - h - 1e-15, x.hi - h + 1e-15));
}

struct CInterval {
    Interval re, im;

    CInterval() = default;
    CInterval(Interval r, Interval i) : re(r), im(i) {}
    CInterval(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    CInterval conj() const { return {re, -im}; }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }

    friend CInterval operator+(const CInterval& a, const CInterval& b) { return {a.re + b.re, a.im + b.im}; }
    friend CInterval operator-(const CInterval& a, const CInterval& b) { return {a.re - b.re, a.im - b.im}; }
    friend CInterval operator*(const CInterval& a, const CInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CInterval operator*(const CInterval& a, const Interval& s) { return {a.re * s, a.im * s}; }
    CInterval& operator+=(const CInterval& o) { return *this = *this + o; }
};

// e^{i x}
inline CInterval expi(const Interval& x) { return {cos_interval(x), sin_interval(x)}; }

// Im(conj(a) * b): twice the signed area spanned by two real Jacobian columns
inline Interval cross(const CInterval& a, const CInterval& b) { return a.re * b.im - a.im * b.re; }

}  // namespace mixedlip
