#include "mixedlip/rational.hpp"

#include <stdexcept>

namespace mixedlip {

std::string to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational make_rational(long long p, long long q) {
    if (q == 0) throw std::domain_error("zero denominator");
    return Rational(p) / Rational(q);
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator");
    return Rational(Integer(s.substr(0, slash))) / Rational(den);
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    Rational n = o.norm2();
    if (n == 0) throw std::domain_error("division by zero");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

namespace {
std::string plain(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}
}  // namespace

std::string to_string(const GaussRat& c) {
    if (c.im == 0) return plain(c.re);
    std::string imag;
    if (c.im == 1) imag = "i";
    else if (c.im == -1) imag = "-i";
    else imag = plain(c.im) + "*i";
    if (c.re == 0) return imag;
    std::string s = "(" + plain(c.re);
    if (imag[0] != '-') s += "+";
    return s + imag + ")";
}

}  // namespace mixedlip
