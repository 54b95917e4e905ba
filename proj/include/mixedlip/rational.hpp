#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace mixedlip {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// always "p/q", q >= 1
std::string to_string(const Rational& q);
double to_double(const Rational& q);
Rational make_rational(long long p, long long q = 1);
Rational parse_rational(const std::string& s);  // "p" or "p/q"

// a + b*i with a, b rational
struct GaussRat {
    Rational re, im;

    GaussRat() = default;
    GaussRat(long long r) : re(r), im(0) {}
    GaussRat(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRat conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }
    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

// coefficient text usable by the polynomial parser, e.g. "3/2", "-i", "(1/2-3*i)"
std::string to_string(const GaussRat& c);

}  // namespace mixedlip
