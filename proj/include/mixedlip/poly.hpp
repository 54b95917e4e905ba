#pragma once

#include "mixedlip/rational.hpp"

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixedlip {

using cd = std::complex<double>;

enum class Var { u, ubar, v, vbar };

// exponents of u, ubar, v, vbar
using Exps = std::array<int, 4>;

struct Monomial {
    GaussRat coeff;
    Exps e{};
    int deg_u() const { return e[0] + e[1]; }
    int deg_v() const { return e[2] + e[3]; }
};

class MixedPolynomial {
public:
    MixedPolynomial() = default;

    static MixedPolynomial constant(const GaussRat& c);
    static MixedPolynomial variable(Var x);
    static MixedPolynomial monomial(const GaussRat& c, const Exps& e);

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool has_constant_term() const;
    GaussRat coefficient(const Exps& e) const;

    MixedPolynomial& operator+=(const MixedPolynomial& o);
    MixedPolynomial& operator-=(const MixedPolynomial& o);
    MixedPolynomial& operator*=(const GaussRat& c);
    friend MixedPolynomial operator+(MixedPolynomial a, const MixedPolynomial& b) { return a += b; }
    friend MixedPolynomial operator-(MixedPolynomial a, const MixedPolynomial& b) { return a -= b; }
    friend MixedPolynomial operator-(MixedPolynomial a) { a *= GaussRat(-1); return a; }
    friend MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b);
    friend MixedPolynomial operator*(MixedPolynomial a, const GaussRat& c) { return a *= c; }
    friend bool operator==(const MixedPolynomial& a, const MixedPolynomial& b);
    friend bool operator!=(const MixedPolynomial& a, const MixedPolynomial& b) { return !(a == b); }

    // canonical text, accepted back by parse()
    std::string str() const;

    // terms must be sorted with unique exponents and nonzero coefficients
    static MixedPolynomial from_terms(std::vector<Monomial> t);

private:
    std::vector<Monomial> terms_;
    void normalize();
};

MixedPolynomial pow(const MixedPolynomial& f, unsigned n);

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
};

// any expression, including zero or constants
MixedPolynomial parse_expression(const std::string& text);
// rejects the zero polynomial and a nonzero constant term
MixedPolynomial parse(const std::string& text);

cd evaluate(const MixedPolynomial& f, cd u, cd v);
GaussRat evaluate_exact(const MixedPolynomial& f, const GaussRat& u, const GaussRat& v);

MixedPolynomial wirtinger(const MixedPolynomial& f, Var x);
// the polynomial whose values are conj(f)
MixedPolynomial conj_swap(const MixedPolynomial& f);
MixedPolynomial swap_uv(const MixedPolynomial& f);

bool is_holomorphic_in(const MixedPolynomial& f, Var x);  // no conjugate of x appears (x = u or v)
bool is_u_semiholomorphic(const MixedPolynomial& f);      // holomorphic in u or in ubar
bool is_v_semiholomorphic(const MixedPolynomial& f);
bool is_holomorphic(const MixedPolynomial& f);

struct Weight {
    int p1 = 1, p2 = 1;
    Rational k() const { return make_rational(p1, p2); }
    friend bool operator==(const Weight& a, const Weight& b) { return a.p1 == b.p1 && a.p2 == b.p2; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
};

// reduces to the coprime representative; throws unless both are positive
Weight make_weight(long long a, long long b);

inline long long rdeg(const Weight& P, const Monomial& m) {
    return static_cast<long long>(P.p1) * m.deg_u() + static_cast<long long>(P.p2) * m.deg_v();
}
long long min_rdeg(const MixedPolynomial& f, const Weight& P);

enum class Side { u, v };
const char* side_name(Side s);

// c * x^a * conj(x)^b * e^{i beta angle} * r^gamma
struct SliceTerm {
    GaussRat coeff;
    int a = 0, b = 0, beta = 0;
    Rational gamma;
};

// u-side: r^{-d/p2} f(r^k u, r e^{it}); v-side: R^{-d/p1} f(R e^{i phi}, R^{1/k} v)
struct SliceFunction {
    Weight weight;
    Side side = Side::u;
    long long d = 0;
    std::vector<SliceTerm> terms;

    cd eval(cd x, double r, double angle) const;
    cd eval_limit(cd x, double angle) const;
    std::vector<SliceTerm> limit_terms() const;
    std::vector<SliceTerm> positive_terms() const;
};

SliceFunction rescale(const MixedPolynomial& f, const Weight& P, Side side);

}  // namespace mixedlip
