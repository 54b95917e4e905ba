#include "mixedlip/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>

namespace mixedlip {

namespace {

bool exps_less(const Exps& a, const Exps& b) { return a < b; }

}  // namespace

MixedPolynomial MixedPolynomial::constant(const GaussRat& c) {
    return monomial(c, Exps{0, 0, 0, 0});
}

MixedPolynomial MixedPolynomial::variable(Var x) {
    Exps e{0, 0, 0, 0};
    e[static_cast<int>(x)] = 1;
    return monomial(GaussRat(1), e);
}

MixedPolynomial MixedPolynomial::monomial(const GaussRat& c, const Exps& e) {
    MixedPolynomial p;
    if (!c.is_zero()) p.terms_.push_back({c, e});
    return p;
}

MixedPolynomial MixedPolynomial::from_terms(std::vector<Monomial> t) {
    MixedPolynomial p;
    p.terms_ = std::move(t);
    p.normalize();
    return p;
}

void MixedPolynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Monomial& a, const Monomial& b) { return exps_less(a.e, b.e); });
    std::vector<Monomial> out;
    for (auto& m : terms_) {
        if (!out.empty() && out.back().e == m.e) out.back().coeff += m.coeff;
        else out.push_back(std::move(m));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Monomial& m) { return m.coeff.is_zero(); }),
              out.end());
    terms_ = std::move(out);
}

bool MixedPolynomial::has_constant_term() const {
    return !terms_.empty() && terms_.front().e == Exps{0, 0, 0, 0};
}

GaussRat MixedPolynomial::coefficient(const Exps& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Monomial& m, const Exps& x) { return exps_less(m.e, x); });
    if (it != terms_.end() && it->e == e) return it->coeff;
    return GaussRat(0);
}

MixedPolynomial& MixedPolynomial::operator+=(const MixedPolynomial& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

MixedPolynomial& MixedPolynomial::operator-=(const MixedPolynomial& o) {
    for (const auto& m : o.terms_) terms_.push_back({-m.coeff, m.e});
    normalize();
    return *this;
}

MixedPolynomial& MixedPolynomial::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& m : terms_) m.coeff *= c;
    return *this;
}

MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b) {
    std::vector<Monomial> t;
    t.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            Exps e;
            for (int i = 0; i < 4; ++i) e[i] = x.e[i] + y.e[i];
            t.push_back({x.coeff * y.coeff, e});
        }
    return MixedPolynomial::from_terms(std::move(t));
}

bool operator==(const MixedPolynomial& a, const MixedPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

MixedPolynomial pow(const MixedPolynomial& f, unsigned n) {
    MixedPolynomial r = MixedPolynomial::constant(GaussRat(1)), base = f;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

std::string MixedPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<const Monomial*> order;
    for (const auto& m : terms_) order.push_back(&m);
    // higher total degree first, then reverse exponent order
    std::stable_sort(order.begin(), order.end(), [](const Monomial* a, const Monomial* b) {
        int da = a->deg_u() + a->deg_v(), db = b->deg_u() + b->deg_v();
        if (da != db) return da > db;
        return b->e < a->e;
    });
    static const char* names[4] = {"u", "~u", "v", "~v"};
    std::string out;
    bool first = true;
    for (const Monomial* m : order) {
        std::string mono;
        for (int i = 0; i < 4; ++i) {
            if (m->e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (m->e[i] > 1) mono += "^" + std::to_string(m->e[i]);
        }
        GaussRat c = m->coeff;
        bool negative = (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0);
        if (negative) c = -c;
        std::string coef = to_string(c);
        std::string body;
        if (mono.empty()) body = coef;
        else if (c == GaussRat(1)) body = mono;
        else body = coef + "*" + mono;
        if (first) out = negative ? "-" + body : body;
        else out += negative ? " - " + body : " + " + body;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    MixedPolynomial run() {
        skip();
        if (pos_ >= s_.size()) throw ParseError(pos_, "empty input");
        MixedPolynomial p = poly();
        skip();
        if (pos_ < s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    MixedPolynomial poly() {
        MixedPolynomial acc;
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            neg = c == '-';
            ++pos_;
        }
        MixedPolynomial t = term();
        acc = neg ? -t : t;
        for (;;) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            MixedPolynomial t2 = term();
            if (c == '+') acc += t2;
            else acc -= t2;
        }
        return acc;
    }

    static bool starts_atom(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 'u' || c == 'v' || c == '~' ||
               c == '(';
    }

    MixedPolynomial term() {
        MixedPolynomial acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (starts_atom(c)) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    MixedPolynomial factor() {
        MixedPolynomial a = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            std::string digits = read_digits();
            if (digits.empty()) throw ParseError(start, "expected exponent");
            if (digits.size() > 4) throw ParseError(start, "exponent too large");
            a = pow(a, static_cast<unsigned>(std::stoul(digits)));
        }
        return a;
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    MixedPolynomial atom() {
        char c = peek();
        std::size_t start = pos_;
        if (c == '\0') throw ParseError(pos_, "unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            Rational q{Integer(num)};
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::string den = read_digits();
                if (den.empty()) throw ParseError(pos_, "expected denominator");
                Integer d(den);
                if (d == 0) throw ParseError(start, "zero denominator");
                q /= Rational(d);
            }
            return MixedPolynomial::constant(GaussRat(q));
        }
        if (c == 'i') {
            ++pos_;
            return MixedPolynomial::constant(GaussRat(Rational(0), Rational(1)));
        }
        if (c == 'u' || c == 'v') {
            ++pos_;
            return MixedPolynomial::variable(c == 'u' ? Var::u : Var::v);
        }
        if (c == '~') {
            ++pos_;
            char d = peek();
            if (d != 'u' && d != 'v') throw ParseError(pos_, "expected u or v after '~'");
            ++pos_;
            return MixedPolynomial::variable(d == 'u' ? Var::ubar : Var::vbar);
        }
        if (c == '(') {
            ++pos_;
            MixedPolynomial p = poly();
            if (peek() != ')') throw ParseError(pos_, "expected ')'");
            ++pos_;
            return p;
        }
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }
};

}  // namespace

MixedPolynomial parse_expression(const std::string& text) { return Parser(text).run(); }

MixedPolynomial parse(const std::string& text) {
    MixedPolynomial f = parse_expression(text);
    if (f.is_zero()) throw ParseError(0, "zero polynomial");
    if (f.has_constant_term()) throw ParseError(0, "constant term present, f(0) must vanish");
    return f;
}

// ---------------------------------------------------------------- evaluation

cd evaluate(const MixedPolynomial& f, cd u, cd v) {
    cd vals[4] = {u, std::conj(u), v, std::conj(v)};
    cd s = 0;
    for (const auto& m : f.terms()) {
        cd t = m.coeff.to_complex();
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < m.e[i]; ++k) t *= vals[i];
        s += t;
    }
    return s;
}

GaussRat evaluate_exact(const MixedPolynomial& f, const GaussRat& u, const GaussRat& v) {
    GaussRat vals[4] = {u, u.conj(), v, v.conj()};
    GaussRat s(0);
    for (const auto& m : f.terms()) {
        GaussRat t = m.coeff;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < m.e[i]; ++k) t *= vals[i];
        s += t;
    }
    return s;
}

MixedPolynomial wirtinger(const MixedPolynomial& f, Var x) {
    int idx = static_cast<int>(x);
    std::vector<Monomial> t;
    for (const auto& m : f.terms()) {
        if (m.e[idx] == 0) continue;
        Monomial n = m;
        n.coeff *= GaussRat(m.e[idx]);
        n.e[idx] -= 1;
        t.push_back(std::move(n));
    }
    return MixedPolynomial::from_terms(std::move(t));
}

MixedPolynomial conj_swap(const MixedPolynomial& f) {
    std::vector<Monomial> t;
    for (const auto& m : f.terms()) t.push_back({m.coeff.conj(), Exps{m.e[1], m.e[0], m.e[3], m.e[2]}});
    return MixedPolynomial::from_terms(std::move(t));
}

MixedPolynomial swap_uv(const MixedPolynomial& f) {
    std::vector<Monomial> t;
    for (const auto& m : f.terms()) t.push_back({m.coeff, Exps{m.e[2], m.e[3], m.e[0], m.e[1]}});
    return MixedPolynomial::from_terms(std::move(t));
}

bool is_holomorphic_in(const MixedPolynomial& f, Var x) {
    int idx = x == Var::u ? 1 : x == Var::v ? 3 : x == Var::ubar ? 0 : 2;
    for (const auto& m : f.terms())
        if (m.e[idx] != 0) return false;
    return true;
}

bool is_u_semiholomorphic(const MixedPolynomial& f) {
    return is_holomorphic_in(f, Var::u) || is_holomorphic_in(f, Var::ubar);
}
bool is_v_semiholomorphic(const MixedPolynomial& f) {
    return is_holomorphic_in(f, Var::v) || is_holomorphic_in(f, Var::vbar);
}
bool is_holomorphic(const MixedPolynomial& f) {
    return is_holomorphic_in(f, Var::u) && is_holomorphic_in(f, Var::v);
}

Weight make_weight(long long a, long long b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("weight entries must be positive");
    long long g = std::gcd(a, b);
    return Weight{static_cast<int>(a / g), static_cast<int>(b / g)};
}

long long min_rdeg(const MixedPolynomial& f, const Weight& P) {
    if (f.is_zero()) throw std::invalid_argument("min_rdeg of zero polynomial");
    long long d = rdeg(P, f.terms().front());
    for (const auto& m : f.terms()) d = std::min(d, rdeg(P, m));
    return d;
}

const char* side_name(Side s) { return s == Side::u ? "u" : "v"; }

// ---------------------------------------------------------------- rescaling

SliceFunction rescale(const MixedPolynomial& f, const Weight& P, Side side) {
    SliceFunction s;
    s.weight = P;
    s.side = side;
    s.d = min_rdeg(f, P);
    std::map<std::tuple<int, int, int, Rational>, GaussRat> acc;
    for (const auto& m : f.terms()) {
        long long excess = rdeg(P, m) - s.d;
        SliceTerm t;
        if (side == Side::u) {
            t.a = m.e[0];
            t.b = m.e[1];
            t.beta = m.e[2] - m.e[3];
            t.gamma = make_rational(excess, P.p2);
        } else {
            t.a = m.e[2];
            t.b = m.e[3];
            t.beta = m.e[0] - m.e[1];
            t.gamma = make_rational(excess, P.p1);
        }
        acc[{t.a, t.b, t.beta, t.gamma}] += m.coeff;
    }
    for (auto& [key, c] : acc) {
        if (c.is_zero()) continue;
        SliceTerm t;
        std::tie(t.a, t.b, t.beta, t.gamma) = key;
        t.coeff = c;
        s.terms.push_back(std::move(t));
    }
    return s;
}

namespace {
cd term_value(const SliceTerm& t, cd x, double angle) {
    cd v = t.coeff.to_complex() * std::polar(1.0, t.beta * angle);
    cd xc = std::conj(x);
    for (int k = 0; k < t.a; ++k) v *= x;
    for (int k = 0; k < t.b; ++k) v *= xc;
    return v;
}
}  // namespace

cd SliceFunction::eval(cd x, double r, double angle) const {
    cd s = 0;
    for (const auto& t : terms) {
        cd v = term_value(t, x, angle);
        if (t.gamma != 0) v *= std::pow(r, to_double(t.gamma));
        s += v;
    }
    return s;
}

cd SliceFunction::eval_limit(cd x, double angle) const {
    cd s = 0;
    for (const auto& t : terms)
        if (t.gamma == 0) s += term_value(t, x, angle);
    return s;
}

std::vector<SliceTerm> SliceFunction::limit_terms() const {
    std::vector<SliceTerm> out;
    for (const auto& t : terms)
        if (t.gamma == 0) out.push_back(t);
    return out;
}

std::vector<SliceTerm> SliceFunction::positive_terms() const {
    std::vector<SliceTerm> out;
    for (const auto& t : terms)
        if (t.gamma > 0) out.push_back(t);
    return out;
}

}  // namespace mixedlip
