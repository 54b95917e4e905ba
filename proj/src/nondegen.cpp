#include "mixedlip/nondegen.hpp"

#include "mixedlip/interval.hpp"
#include "mixedlip/lm.hpp"
#include "mixedlip/newton.hpp"
#include "mixedlip/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mixedlip {

const char* to_string(TriValue v) {
    switch (v) {
        case TriValue::yes: return "yes";
        case TriValue::no: return "no";
        default: return "unknown";
    }
}

const char* to_string(TriMethod m) {
    switch (m) {
        case TriMethod::holomorphic_exact: return "holomorphic-exact";
        case TriMethod::semiholomorphic: return "semiholomorphic";
        case TriMethod::torus_trig: return "torus-trig";
        default: return "numeric-grid";
    }
}

const char* to_string(Locus l) {
    switch (l) {
        case Locus::origin: return "origin";
        case Locus::u_zero: return "u=0";
        case Locus::v_zero: return "v=0";
        default: return "unknown";
    }
}

TriValue tri_and(TriValue a, TriValue b) {
    if (a == TriValue::no || b == TriValue::no) return TriValue::no;
    if (a == TriValue::unknown || b == TriValue::unknown) return TriValue::unknown;
    return TriValue::yes;
}

MixedPolynomial strip_monomial_factor(const MixedPolynomial& f, Exps* removed) {
    Exps lo{0, 0, 0, 0};
    if (!f.is_zero()) {
        lo = f.terms().front().e;
        for (const auto& m : f.terms())
            for (int i = 0; i < 4; ++i) lo[i] = std::min(lo[i], m.e[i]);
    }
    if (removed) *removed = lo;
    std::vector<Monomial> t;
    for (const auto& m : f.terms()) {
        Monomial n = m;
        for (int i = 0; i < 4; ++i) n.e[i] -= lo[i];
        t.push_back(std::move(n));
    }
    return MixedPolynomial::from_terms(std::move(t));
}

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
const cd I1(0, 1);

// ------------------------------------------------------------ interval evaluation

struct CTerm {
    CInterval c;
    Exps e;
};

std::vector<CTerm> compile(const MixedPolynomial& f) {
    std::vector<CTerm> out;
    for (const auto& m : f.terms()) {
        cd c = m.coeff.to_complex();
        double er = 4e-16 * std::abs(c.real()), ei = 4e-16 * std::abs(c.imag());
        out.push_back({CInterval(Interval(c.real() - er, c.real() + er), Interval(c.imag() - ei, c.imag() + ei)), m.e});
    }
    return out;
}

int max_degree(const std::vector<std::vector<CTerm>>& ps) {
    int d = 1;
    for (const auto& p : ps)
        for (const auto& t : p)
            for (int x : t.e) d = std::max(d, x);
    return d;
}

struct VarBox {
    enum Mode { cart, circle, zero } mode = zero;
    Interval x, y, th;
};

class Factors {
public:
    Factors(const VarBox& b, int maxdeg) : mode_(b.mode), maxdeg_(maxdeg) {
        if (mode_ == VarBox::cart) {
            CInterval z(b.x, b.y);
            pw_.push_back(CInterval(Interval(1.0), Interval(0.0)));
            for (int k = 1; k <= maxdeg; ++k) pw_.push_back(pw_.back() * z);
            Interval m2 = sqr(b.x) + sqr(b.y);
            mod_.push_back(Interval(1.0));
            for (int k = 1; k <= maxdeg; ++k) mod_.push_back(mod_.back() * m2);
        } else if (mode_ == VarBox::circle) {
            for (int f = -maxdeg; f <= maxdeg; ++f) freq_.push_back(expi(Interval(f) * b.th));
        }
    }

    CInterval operator()(int a, int b) const {
        switch (mode_) {
            case VarBox::cart: {
                int m = std::min(a, b);
                CInterval base = a >= b ? pw_[a - b] : pw_[b - a].conj();
                return base * mod_[m];
            }
            case VarBox::circle: return freq_[a - b + maxdeg_];
            default:
                return (a == 0 && b == 0) ? CInterval(Interval(1.0), Interval(0.0))
                                          : CInterval(Interval(0.0), Interval(0.0));
        }
    }

private:
    VarBox::Mode mode_;
    int maxdeg_;
    std::vector<CInterval> pw_, freq_;
    std::vector<Interval> mod_;
};

CInterval eval_cell(const std::vector<CTerm>& p, const Factors& U, const Factors& V) {
    CInterval s(Interval(0.0), Interval(0.0));
    for (const auto& t : p) s += t.c * U(t.e[0], t.e[1]) * V(t.e[2], t.e[3]);
    return s;
}

// distance from 0 to a complex rectangle
double lower_modulus(const CInterval& z) {
    double dx = z.re.contains_zero() ? 0.0 : std::min(std::fabs(z.re.lo), std::fabs(z.re.hi));
    double dy = z.im.contains_zero() ? 0.0 : std::min(std::fabs(z.im.lo), std::fabs(z.im.hi));
    return std::hypot(dx, dy);
}

// value and the four real Jacobian columns, as plain polynomials
struct JacobianSystem {
    std::vector<CTerm> f;
    std::vector<CTerm> col[4];
};

MixedPolynomial times_var(const MixedPolynomial& p, Var x) { return p * MixedPolynomial::variable(x); }

const GaussRat kI(Rational(0), Rational(1));

// u Cartesian (x, y), v polar (r, t)
JacobianSystem system_u_cart_v_polar(const MixedPolynomial& f) {
    MixedPolynomial fu = wirtinger(f, Var::u), fub = wirtinger(f, Var::ubar);
    MixedPolynomial fv = wirtinger(f, Var::v), fvb = wirtinger(f, Var::vbar);
    JacobianSystem s;
    s.f = compile(f);
    s.col[0] = compile(fu + fub);
    s.col[1] = compile((fu - fub) * kI);
    MixedPolynomial a = times_var(fv, Var::v), b = times_var(fvb, Var::vbar);
    s.col[2] = compile(a + b);
    s.col[3] = compile((a - b) * kI);
    return s;
}

bool rank_two(const CInterval c[4]) {
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (!cross(c[a], c[b]).contains_zero()) return true;
    return false;
}

// residual whose zeros are singular points of V(f): Re f, Im f and the six 2x2 minors
Eigen::VectorXd singular_residual(const MixedPolynomial& f, const MixedPolynomial& fu, const MixedPolynomial& fub,
                                  const MixedPolynomial& fv, const MixedPolynomial& fvb, cd u, cd v) {
    cd val = evaluate(f, u, v);
    cd a = evaluate(fu, u, v), b = evaluate(fub, u, v), c = evaluate(fv, u, v), d = evaluate(fvb, u, v);
    cd col[4] = {a + b, I1 * (a - b), c + d, I1 * (c - d)};
    Eigen::VectorXd r(8);
    r[0] = val.real();
    r[1] = val.imag();
    int k = 2;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) r[k++] = (std::conj(col[i]) * col[j]).imag();
    return r;
}

struct SingularSearch {
    MixedPolynomial f, fu, fub, fv, fvb;
    explicit SingularSearch(const MixedPolynomial& g)
        : f(g), fu(wirtinger(g, Var::u)), fub(wirtinger(g, Var::ubar)), fv(wirtinger(g, Var::v)),
          fvb(wirtinger(g, Var::vbar)) {}

    double residual(cd u, cd v) const { return singular_residual(f, fu, fub, fv, fvb, u, v).lpNorm<Eigen::Infinity>(); }

    // free search in C^2 from a seed; accepted only inside the stratum
    std::optional<Witness> polish(cd u0, cd v0, int I, double tol) const {
        Eigen::VectorXd x(4);
        x << u0.real(), u0.imag(), v0.real(), v0.imag();
        ResidualFn F = [&](const Eigen::VectorXd& z) {
            cd u(z[0], z[1]), v(z[2], z[3]);
            if (I == stratum_u_axis) v = 0;
            if (I == stratum_v_axis) u = 0;
            return singular_residual(f, fu, fub, fv, fvb, u, v);
        };
        if (I == stratum_u_axis) {
            Eigen::VectorXd y(2);
            y << x[0], x[1];
            ResidualFn G = [&](const Eigen::VectorXd& z) {
                Eigen::VectorXd w(4);
                w << z[0], z[1], 0, 0;
                return F(w);
            };
            levenberg_marquardt(G, y);
            x << y[0], y[1], 0, 0;
        } else if (I == stratum_v_axis) {
            Eigen::VectorXd y(2);
            y << x[2], x[3];
            ResidualFn G = [&](const Eigen::VectorXd& z) {
                Eigen::VectorXd w(4);
                w << 0, 0, z[0], z[1];
                return F(w);
            };
            levenberg_marquardt(G, y);
            x << 0, 0, y[0], y[1];
        } else {
            levenberg_marquardt(F, x);
        }
        cd u(x[0], x[1]), v(x[2], x[3]);
        double res = residual(u, v);
        if (!(res < tol)) return std::nullopt;
        const double eps = 1e-6;
        bool in = (I == stratum_torus && std::abs(u) > eps && std::abs(v) > eps) ||
                  (I == stratum_u_axis && std::abs(u) > eps) || (I == stratum_v_axis && std::abs(v) > eps);
        if (!in) return std::nullopt;
        return Witness{u, v, res};
    }
};

// ------------------------------------------------------------ torus branch and bound

struct Cell3 {
    Interval x, y, th;
};

enum class BnbStatus { certified, undecided, budget };

struct BnbResult {
    BnbStatus status = BnbStatus::certified;
    std::vector<Cell3> undecided;
    long long cells = 0;
};

// slice |v| = 1, |u| <= bound (Cartesian u)
BnbResult bnb_slice(const JacobianSystem& S, double bound, long long cap) {
    int maxdeg = max_degree({S.f, S.col[0], S.col[1], S.col[2], S.col[3]});
    BnbResult res;
    std::vector<Cell3> stack;
    const int nx = 4, nt = 8;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nx; ++j)
            for (int k = 0; k < nt; ++k) {
                double x0 = -bound + 2 * bound * i / nx, x1 = -bound + 2 * bound * (i + 1) / nx;
                double y0 = -bound + 2 * bound * j / nx, y1 = -bound + 2 * bound * (j + 1) / nx;
                stack.push_back({Interval(x0, x1), Interval(y0, y1), Interval(kTwoPi * k / nt, kTwoPi * (k + 1) / nt)});
            }
    std::reverse(stack.begin(), stack.end());
    while (!stack.empty()) {
        Cell3 c = stack.back();
        stack.pop_back();
        if (++res.cells > cap) {
            res.status = BnbStatus::budget;
            return res;
        }
        // outside the disk
        double mx = c.x.contains_zero() ? 0.0 : std::min(std::fabs(c.x.lo), std::fabs(c.x.hi));
        double my = c.y.contains_zero() ? 0.0 : std::min(std::fabs(c.y.lo), std::fabs(c.y.hi));
        if (mx * mx + my * my > bound * bound) continue;
        VarBox ub{VarBox::cart, c.x, c.y, {}}, vb{VarBox::circle, {}, {}, c.th};
        Factors U(ub, maxdeg), V(vb, maxdeg);
        if (!eval_cell(S.f, U, V).contains_zero()) continue;
        CInterval cols[4];
        for (int i = 0; i < 4; ++i) cols[i] = eval_cell(S.col[i], U, V);
        if (rank_two(cols)) continue;
        double wx = c.x.width(), wy = c.y.width(), wt = c.th.width();
        double w = std::max({wx, wy, wt});
        if (w < 1e-7) {
            res.undecided.push_back(c);
            if (res.undecided.size() >= 24) {
                res.status = BnbStatus::undecided;
                return res;
            }
            continue;
        }
        Cell3 a = c, b = c;
        if (w == wx) {
            a.x.hi = b.x.lo = c.x.mid();
        } else if (w == wy) {
            a.y.hi = b.y.lo = c.y.mid();
        } else {
            a.th.hi = b.th.lo = c.th.mid();
        }
        stack.push_back(b);
        stack.push_back(a);
    }
    if (!res.undecided.empty()) res.status = BnbStatus::undecided;
    return res;
}

// certified lower bound of |sum c e^{i(alpha phi + beta t)}| over the torus (0 if not separated from 0)
double torus_lower_bound(const std::vector<CTerm>& T) {
    if (T.size() == 1) return std::min(lower_modulus(T[0].c), 1e300);
    int maxdeg = max_degree({T});
    for (int n : {64, 256}) {
        double m = 1e300;
        for (int i = 0; i < n && m > 0; ++i)
            for (int j = 0; j < n; ++j) {
                VarBox a{VarBox::circle, {}, {}, Interval(kTwoPi * i / n, kTwoPi * (i + 1) / n)};
                VarBox b{VarBox::circle, {}, {}, Interval(kTwoPi * j / n, kTwoPi * (j + 1) / n)};
                Factors U(a, maxdeg), V(b, maxdeg);
                m = std::min(m, lower_modulus(eval_cell(T, U, V)));
                if (m <= 0) break;
            }
        if (m > 0) return m;
    }
    return 0;
}

// bound B such that g has no zeros with |v| = 1 and |u| > B, or 0 when none is found
double slice_bound(const MixedPolynomial& g) {
    int n = 0;
    for (const auto& m : g.terms()) n = std::max(n, m.deg_u());
    std::vector<Monomial> top;
    double lower = 0;
    for (const auto& m : g.terms()) {
        if (m.deg_u() == n) top.push_back(m);
        else lower += std::abs(m.coeff.to_complex());
    }
    double m = torus_lower_bound(compile(MixedPolynomial::from_terms(top)));
    if (m <= 0) return 0;
    return std::max(1.0, lower / m) * 1.01 + 1e-9;
}

Tri torus_generic(const MixedPolynomial& f, const NondegenOptions& opt) {
    Tri out;
    out.method = (is_u_semiholomorphic(f) || is_v_semiholomorphic(f)) ? TriMethod::semiholomorphic
                                                                      : TriMethod::numeric_grid;
    MixedPolynomial g = strip_monomial_factor(f);
    if (g.size() == 1) {
        out.value = TriValue::yes;
        return out;
    }
    SingularSearch search(g);
    bool any_budget = false;
    for (int pass = 0; pass < 2; ++pass) {
        MixedPolynomial h = pass == 0 ? g : swap_uv(g);
        double B = slice_bound(h);
        if (B <= 0) continue;
        BnbResult r = bnb_slice(system_u_cart_v_polar(h), B, opt.cell_cap / 2);
        if (r.status == BnbStatus::certified) {
            out.value = TriValue::yes;
            return out;
        }
        if (r.status == BnbStatus::budget) any_budget = true;
        for (const auto& c : r.undecided) {
            cd u(c.x.mid(), c.y.mid()), v = std::polar(1.0, c.th.mid());
            if (pass == 1) std::swap(u, v);
            if (auto w = search.polish(u, v, stratum_torus, opt.witness_tol)) {
                out.value = TriValue::no;
                out.witness = w;
                return out;
            }
        }
    }
    // neither slice is compact, or nothing certified: sample for a witness before giving up
    const int n = 24;
    std::optional<Witness> best;
    for (int i = 0; i < n && !best; ++i)
        for (int j = 0; j < n && !best; ++j)
            for (double rad : {0.5, 1.0, 2.0}) {
                cd u = std::polar(rad, kTwoPi * i / n), v = std::polar(1.0, kTwoPi * j / n);
                if (std::abs(evaluate(g, u, v)) > 0.5 * (1 + std::abs(u))) continue;
                if (auto w = search.polish(u, v, stratum_torus, opt.witness_tol)) {
                    best = w;
                    break;
                }
            }
    if (best) {
        out.value = TriValue::no;
        out.witness = best;
    }
    (void)any_budget;
    return out;
}

// ------------------------------------------------------------ axis strata

// points (e^{i phi}, 0); the other strata are handled by swapping u and v
Tri u_axis_stratum(const MixedPolynomial& f, const NondegenOptions& opt) {
    Tri out;
    out.method = is_holomorphic(f) ? TriMethod::holomorphic_exact : TriMethod::torus_trig;
    std::vector<Monomial> restricted;
    for (const auto& m : f.terms())
        if (m.deg_v() == 0) restricted.push_back(m);
    MixedPolynomial fr = MixedPolynomial::from_terms(restricted);
    MixedPolynomial fv = wirtinger(f, Var::v), fvb = wirtinger(f, Var::vbar);
    auto on_axis = [](const MixedPolynomial& p) {
        std::vector<Monomial> t;
        for (const auto& m : p.terms())
            if (m.deg_v() == 0) t.push_back(m);
        return MixedPolynomial::from_terms(t);
    };
    MixedPolynomial gv = on_axis(fv), gvb = on_axis(fvb);

    if (fr.size() == 1) {  // |f| = |c||u|^n on the axis
        out.value = TriValue::yes;
        return out;
    }
    if (fr.is_zero() && gv.is_zero() && gvb.is_zero()) {
        // the u-direction derivatives vanish too, since f is identically zero on the axis
        out.value = TriValue::no;
        out.witness = Witness{cd(1, 0), cd(0, 0), 0.0};
        return out;
    }
    if (out.method == TriMethod::holomorphic_exact) {
        // fr holomorphic and radial: a single monomial, or zero with gv a nonzero monomial
        if (fr.is_zero() && !gv.is_zero() && gv.size() == 1) {
            out.value = TriValue::yes;
            return out;
        }
    }
    MixedPolynomial fu = wirtinger(f, Var::u), fub = wirtinger(f, Var::ubar);
    MixedPolynomial a = times_var(fu, Var::u), b = times_var(fub, Var::ubar);
    std::vector<CTerm> F = compile(fr);
    std::vector<CTerm> cols[4] = {compile(on_axis(a + b)), compile(on_axis((a - b) * kI)), compile(gv + gvb),
                                  compile((gv - gvb) * kI)};
    int maxdeg = max_degree({F, cols[0], cols[1], cols[2], cols[3]});
    std::vector<Interval> stack;
    for (int k = 63; k >= 0; --k) stack.push_back(Interval(kTwoPi * k / 64, kTwoPi * (k + 1) / 64));
    std::vector<Interval> undecided;
    long long cells = 0;
    bool budget = false;
    VarBox zero{VarBox::zero, {}, {}, {}};
    while (!stack.empty()) {
        Interval c = stack.back();
        stack.pop_back();
        if (++cells > opt.cell_cap) {
            budget = true;
            break;
        }
        Factors U(VarBox{VarBox::circle, {}, {}, c}, maxdeg), V(zero, maxdeg);
        if (!eval_cell(F, U, V).contains_zero()) continue;
        CInterval cv[4];
        for (int i = 0; i < 4; ++i) cv[i] = eval_cell(cols[i], U, V);
        if (rank_two(cv)) continue;
        if (c.width() < 1e-9) {
            undecided.push_back(c);
            if (undecided.size() >= 16) break;
            continue;
        }
        stack.push_back(Interval(c.mid(), c.hi));
        stack.push_back(Interval(c.lo, c.mid()));
    }
    if (undecided.empty() && !budget) {
        out.value = TriValue::yes;
        return out;
    }
    SingularSearch search(f);
    for (const auto& c : undecided) {
        if (auto w = search.polish(std::polar(1.0, c.mid()), 0, stratum_u_axis, opt.witness_tol)) {
            out.value = TriValue::no;
            out.witness = w;
            return out;
        }
    }
    return out;
}

// ------------------------------------------------------------ holomorphic torus

Tri torus_holomorphic(const MixedPolynomial& f) {
    Tri out;
    out.method = TriMethod::holomorphic_exact;
    MixedPolynomial g = strip_monomial_factor(f);
    GaussPoly h;
    for (const auto& m : g.terms()) {
        if (static_cast<int>(h.size()) <= m.e[0]) h.resize(m.e[0] + 1);
        h[m.e[0]] += m.coeff;
    }
    trim(h);
    GaussPoly d = derivative(h);
    if (d.empty()) {
        out.value = TriValue::yes;
        return out;
    }
    GaussPoly gg = poly_gcd(h, d);
    if (gg.size() <= 1) {
        out.value = TriValue::yes;
        return out;
    }
    out.value = TriValue::no;
    auto r = aberth_roots(to_complex(gg));
    cd u = r.empty() ? cd(0) : r.front();
    SingularSearch s(g);
    out.witness = Witness{u, cd(1, 0), s.residual(u, 1)};
    return out;
}

}  // namespace

Tri face_sing_empty(const MixedPolynomial& fD, int I, const NondegenOptions& opt) {
    if (fD.is_zero()) throw std::invalid_argument("face function is zero");
    switch (I) {
        case stratum_u_axis: return u_axis_stratum(fD, opt);
        case stratum_v_axis: {
            Tri t = u_axis_stratum(swap_uv(fD), opt);
            if (t.witness) std::swap(t.witness->u, t.witness->v);
            return t;
        }
        case stratum_torus:
            if (is_holomorphic(fD)) return torus_holomorphic(fD);
            return torus_generic(fD, opt);
        default: throw std::invalid_argument("stratum must be 1, 2 or 3");
    }
}

Tri sing_isolated(const MixedPolynomial& f, const NondegenOptions& opt) {
    Tri acc;
    acc.value = TriValue::yes;
    acc.method = TriMethod::holomorphic_exact;
    for (int I : {stratum_torus, stratum_u_axis, stratum_v_axis}) {
        Tri t = face_sing_empty(f, I, opt);
        if (t.method != TriMethod::holomorphic_exact) acc.method = t.method;
        if (t.no()) return t;
        acc.value = tri_and(acc.value, t.value);
    }
    return acc;
}

Tri torus_zero_free(const MixedPolynomial& fD, const NondegenOptions& opt) {
    Tri out;
    out.method = TriMethod::torus_trig;
    const auto& T = fD.terms();
    if (T.empty()) throw std::invalid_argument("face function is zero");
    if (T.size() == 1) {
        out.value = TriValue::yes;
        return out;
    }
    bool vertex = std::all_of(T.begin(), T.end(), [&](const Monomial& m) {
        return m.deg_u() == T[0].deg_u() && m.deg_v() == T[0].deg_v();
    });
    if (T.size() == 2) {
        const auto& m1 = T[0];
        const auto& m2 = T[1];
        int ds = m1.deg_u() - m2.deg_u(), dt = m1.deg_v() - m2.deg_v();
        int da = (m1.e[0] - m1.e[1]) - (m2.e[0] - m2.e[1]);
        int db = (m1.e[2] - m1.e[3]) - (m2.e[2] - m2.e[3]);
        cd ratio = -m2.coeff.to_complex() / m1.coeff.to_complex();
        bool moduli = ds != 0 || dt != 0 || m1.coeff.norm2() == m2.coeff.norm2();
        bool phases = da != 0 || db != 0 || (ratio.imag() == 0 && ratio.real() > 0);
        if (!moduli || !phases) {
            out.value = TriValue::yes;
            return out;
        }
        double psi = std::arg(ratio);
        double phi = 0, t = 0;
        if (da != 0) phi = psi / da;
        else if (db != 0) t = psi / db;
        if (phi < 0) phi += kTwoPi / std::abs(da == 0 ? 1 : da);
        if (t < 0) t += kTwoPi / std::abs(db == 0 ? 1 : db);
        double ru = 1, rv = 1, mag = std::abs(ratio);
        if (ds != 0) ru = std::pow(mag, 1.0 / ds);
        else if (dt != 0) rv = std::pow(mag, 1.0 / dt);
        cd u = std::polar(ru, phi), v = std::polar(rv, t);
        out.value = TriValue::no;
        out.witness = Witness{u, v, std::abs(evaluate(fD, u, v))};
        return out;
    }
    if (!vertex) return out;  // trigonometric reduction needs a single support point
    std::vector<CTerm> C = compile(fD);
    int maxdeg = max_degree({C});
    struct C2 {
        Interval a, b;
    };
    std::vector<C2> stack;
    const int n0 = 32;
    for (int i = n0 - 1; i >= 0; --i)
        for (int j = n0 - 1; j >= 0; --j)
            stack.push_back({Interval(kTwoPi * i / n0, kTwoPi * (i + 1) / n0),
                             Interval(kTwoPi * j / n0, kTwoPi * (j + 1) / n0)});
    long long cells = 0;
    std::vector<C2> undecided;
    bool budget = false;
    while (!stack.empty()) {
        C2 c = stack.back();
        stack.pop_back();
        if (++cells > opt.cell_cap) {
            budget = true;
            break;
        }
        Factors U(VarBox{VarBox::circle, {}, {}, c.a}, maxdeg), V(VarBox{VarBox::circle, {}, {}, c.b}, maxdeg);
        if (!eval_cell(C, U, V).contains_zero()) continue;
        if (std::max(c.a.width(), c.b.width()) < 1e-4) {
            undecided.push_back(c);
            if (undecided.size() >= 16) break;
            continue;
        }
        C2 x = c, y = c;
        if (c.a.width() >= c.b.width()) x.a.hi = y.a.lo = c.a.mid();
        else x.b.hi = y.b.lo = c.b.mid();
        stack.push_back(y);
        stack.push_back(x);
    }
    if (undecided.empty() && !budget) {
        out.value = TriValue::yes;
        return out;
    }
    for (const auto& c : undecided) {
        Eigen::VectorXd x(2);
        x << c.a.mid(), c.b.mid();
        ResidualFn F = [&](const Eigen::VectorXd& z) {
            cd val = evaluate(fD, std::polar(1.0, z[0]), std::polar(1.0, z[1]));
            Eigen::VectorXd r(2);
            r << val.real(), val.imag();
            return r;
        };
        double res = levenberg_marquardt(F, x);
        if (res < opt.witness_tol) {
            out.value = TriValue::no;
            out.witness = Witness{std::polar(1.0, x[0]), std::polar(1.0, x[1]), res};
            return out;
        }
    }
    return out;
}

Tri is_nice(const MixedPolynomial& f, const GammaInnResult& g, const NondegenOptions& opt) {
    Tri acc;
    acc.value = TriValue::yes;
    acc.method = TriMethod::torus_trig;
    if (is_u_semiholomorphic(f) || is_v_semiholomorphic(f)) {
        acc.method = TriMethod::semiholomorphic;
        return acc;
    }
    for (const auto& p : g.diagram.vertices) {
        if (p.x == 0 || p.y == 0) continue;
        if (denominator(p.x) != 1 || denominator(p.y) != 1) continue;
        MixedPolynomial fD = vertex_function(f, numerator(p.x).convert_to<long long>(),
                                             numerator(p.y).convert_to<long long>());
        if (fD.is_zero()) continue;
        Tri t = torus_zero_free(fD, opt);
        if (t.no()) return t;
        acc.value = tri_and(acc.value, t.value);
    }
    return acc;
}

Locus obstruction_locus(const MixedPolynomial& f, const Weight& P) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    long long d = rdeg(P, f.terms().front());
    bool uconv = false, vconv = false;
    for (const auto& m : f.terms()) {
        if (rdeg(P, m) != d) throw std::invalid_argument("polynomial is not radial for the given weight");
        if (m.deg_v() == 0) uconv = true;
        if (m.deg_u() == 0) vconv = true;
    }
    Rational k = P.k();
    if (k == 1) return Locus::origin;
    if (k > 1) return uconv ? Locus::origin : Locus::v_zero;
    return vconv ? Locus::origin : Locus::u_zero;
}

}  // namespace mixedlip
