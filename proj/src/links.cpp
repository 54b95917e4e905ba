#include "mixedlip/links.hpp"

#include "mixedlip/roots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

namespace mixedlip {

namespace {
constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    if (a >= kTwoPi) a = 0;
    return a;
}

double round9(double x) {
    if (!std::isfinite(x)) return x;
    double r = std::round(x * 1e9) / 1e9;
    return r == 0 ? 0.0 : r;
}
}  // namespace

// ---------------------------------------------------------------- arcs

bool ArcSet::has_interior(double tol) const {
    if (full) return true;
    for (auto [lo, w] : arcs)
        if (w > tol) return true;
    return false;
}

bool ArcSet::contains(double angle, double tol) const {
    if (full) return true;
    angle = wrap(angle);
    for (auto [lo, w] : arcs) {
        double d = wrap(angle - lo);
        if (d <= w + tol || kTwoPi - d <= tol) return true;
    }
    return false;
}

bool ArcSet::intersects(const ArcSet& o, double tol) const {
    if (empty() || o.empty()) return false;
    if (full || o.full) return true;
    for (auto [a, wa] : arcs)
        for (auto [b, wb] : o.arcs) {
            // b's start inside a, or a's start inside b
            double d1 = wrap(b - a), d2 = wrap(a - b);
            if (d1 <= wa + tol || d2 <= wb + tol || kTwoPi - d1 <= tol || kTwoPi - d2 <= tol) return true;
        }
    return false;
}

Json ArcSet::to_json() const {
    if (full) return "S1";
    Json a = Json::array();
    for (auto [lo, w] : arcs) a.push_back(Json::array({round9(lo), round9(lo + w)}));
    return a;
}

Json LinkComponent::to_json(bool with_samples) const {
    Json j;
    j["face"] = face;
    j["side"] = side_name(side);
    j["axis"] = axis;
    j["multiplicity"] = multiplicity;
    j["projArcs"] = proj.to_json();
    j["minAbs"] = round9(minAbs);
    j["maxAbs"] = round9(maxAbs);
    if (with_samples) {
        Json s = Json::array();
        std::size_t stride = std::max<std::size_t>(1, samples.size() / 256);
        for (std::size_t i = 0; i < samples.size(); i += stride)
            s.push_back(Json::array({round9(samples[i].first.real()), round9(samples[i].first.imag()),
                                     round9(samples[i].second)}));
        j["samples"] = s;
    }
    return j;
}

Json FaceLink::to_json(bool with_samples) const {
    Json j;
    j["face"] = face;
    j["P"] = Json::array({P.p1, P.p2});
    j["side"] = side_name(side);
    j["ok"] = ok;
    if (!ok) j["error"] = error;
    j["method"] = method;
    j["strands"] = strands;
    if (method == "braid") j["closurePermutation"] = closure;
    Json c = Json::array();
    for (const auto& x : components) c.push_back(x.to_json(with_samples));
    j["components"] = c;
    return j;
}

// ---------------------------------------------------------------- slices

namespace {

struct Slice {
    std::vector<SliceTerm> terms;
    bool holo = false, antiholo = false;
    int deg = 0;
};

// drop the common x^a xbar^b factor, which only vanishes at x = 0
Slice reduce_slice(std::vector<SliceTerm> terms) {
    Slice s;
    if (terms.empty()) return s;
    int ma = terms[0].a, mb = terms[0].b;
    for (const auto& t : terms) {
        ma = std::min(ma, t.a);
        mb = std::min(mb, t.b);
    }
    for (auto& t : terms) {
        t.a -= ma;
        t.b -= mb;
        s.deg = std::max(s.deg, t.a + t.b);
    }
    s.holo = std::all_of(terms.begin(), terms.end(), [](const SliceTerm& t) { return t.b == 0; });
    s.antiholo = std::all_of(terms.begin(), terms.end(), [](const SliceTerm& t) { return t.a == 0; });
    s.terms = std::move(terms);
    return s;
}

cd eval_terms(const std::vector<SliceTerm>& T, cd x, double th) {
    cd s = 0, xc = std::conj(x);
    for (const auto& t : T) {
        cd v = t.coeff.to_complex() * std::polar(1.0, t.beta * th);
        for (int k = 0; k < t.a; ++k) v *= x;
        for (int k = 0; k < t.b; ++k) v *= xc;
        s += v;
    }
    return s;
}

void finish_component(LinkComponent& c) {
    c.minAbs = 1e300;
    c.maxAbs = 0;
    for (const auto& [x, th] : c.samples) {
        c.minAbs = std::min(c.minAbs, std::abs(x));
        c.maxAbs = std::max(c.maxAbs, std::abs(x));
    }
    if (c.samples.empty()) c.minAbs = 0;
}

LinkComponent axis_component(int face, Side side, int grid) {
    LinkComponent c;
    c.face = face;
    c.side = side;
    c.axis = true;
    c.multiplicity = 1;
    c.proj.full = true;
    for (int k = 0; k < grid; ++k) c.samples.push_back({cd(0), kTwoPi * k / grid});
    return c;
}

// ------------------------------------------------ semiholomorphic slices: braid tracking

struct BraidTracker {
    std::vector<std::map<int, cd>> coeffs;  // coeffs[j][beta]
    int n = 0;

    std::vector<cd> poly_at(double th) const {
        std::vector<cd> p(n + 1);
        for (int j = 0; j <= n; ++j)
            for (auto [beta, c] : coeffs[j]) p[j] += c * std::polar(1.0, beta * th);
        return p;
    }

    std::vector<cd> roots(double th, const std::vector<cd>& guess) const {
        return aberth_roots(poly_at(th), guess);
    }
};

double min_separation(const std::vector<cd>& z) {
    double m = 1e300;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) m = std::min(m, std::abs(z[i] - z[j]));
    return m;
}

// match new roots to old ones; false if the assignment is not a clear bijection
bool match_roots(const std::vector<cd>& prev, const std::vector<cd>& next, std::vector<cd>& out) {
    const std::size_t n = prev.size();
    if (next.size() != n) return false;
    double sep = n > 1 ? min_separation(prev) : 1e300;
    out.assign(n, cd(0));
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = n;
        double bd = 1e300;
        for (std::size_t j = 0; j < n; ++j) {
            double d = std::abs(next[j] - prev[i]);
            if (d < bd) {
                bd = d;
                best = j;
            }
        }
        if (best == n || used[best] || bd > 0.3 * sep) return false;
        used[best] = true;
        out[i] = next[best];
    }
    return true;
}

bool track_step(const BraidTracker& B, double t0, double t1, std::vector<cd>& cur, int depth) {
    std::vector<cd> nxt = B.roots(t1, cur), matched;
    if (match_roots(cur, nxt, matched)) {
        cur = matched;
        return true;
    }
    if (depth >= 8) return false;
    double tm = 0.5 * (t0 + t1);
    return track_step(B, t0, tm, cur, depth + 1) && track_step(B, tm, t1, cur, depth + 1);
}

FaceLink braid_slice(const Slice& s, FaceLink out, int grid) {
    out.method = "braid";
    BraidTracker B;
    for (const auto& t : s.terms) {
        int j = s.holo ? t.a : t.b;
        B.n = std::max(B.n, j);
    }
    B.coeffs.resize(B.n + 1);
    for (const auto& t : s.terms) {
        int j = s.holo ? t.a : t.b;
        // g(xbar) = 0 iff conj(g(xbar)) = 0, a polynomial in x
        cd c = s.holo ? t.coeff.to_complex() : std::conj(t.coeff.to_complex());
        int beta = s.holo ? t.beta : -t.beta;
        B.coeffs[j][beta] += c;
    }
    for (auto& m : B.coeffs)
        for (auto it = m.begin(); it != m.end();)
            it = std::abs(it->second) == 0 ? m.erase(it) : std::next(it);
    if (B.n == 0) {
        // x-independent: zero only where the trigonometric coefficient vanishes, a whole plane
        double mn = 1e300;
        for (int k = 0; k < 4 * grid; ++k) mn = std::min(mn, std::abs(B.poly_at(kTwoPi * k / (4 * grid))[0]));
        if (mn < 1e-9) {
            out.ok = false;
            out.error = "slice vanishes on a whole fibre";
        }
        return out;
    }
    // the extreme coefficients must not vanish, otherwise strands escape to infinity or hit the axis
    double scale = 0;
    for (const auto& m : B.coeffs)
        for (auto [b, c] : m) scale += std::abs(c);
    for (int k = 0; k < 4 * grid; ++k) {
        auto p = B.poly_at(kTwoPi * k / (4 * grid));
        if (std::abs(p[B.n]) < 1e-9 * scale) {
            out.ok = false;
            out.error = "unbounded strand near angle " + std::to_string(kTwoPi * k / (4 * grid));
            return out;
        }
        if (std::abs(p[0]) < 1e-9 * scale) {
            out.ok = false;
            out.error = "strand meets the axis near angle " + std::to_string(kTwoPi * k / (4 * grid));
            return out;
        }
    }
    std::vector<cd> start = B.roots(0.0, {});
    std::sort(start.begin(), start.end(), [](cd a, cd b) {
        double aa = wrap(std::arg(a)), ab = wrap(std::arg(b));
        if (std::fabs(aa - ab) > 1e-9) return aa < ab;
        return std::abs(a) < std::abs(b);
    });
    if (B.n > 1 && min_separation(start) < 1e-7) {
        out.ok = false;
        out.error = "degenerate braid at angle 0";
        return out;
    }
    const int n = B.n;
    std::vector<std::vector<cd>> pos(n, std::vector<cd>(grid + 1));
    std::vector<cd> cur = start;
    for (int j = 0; j < n; ++j) pos[j][0] = cur[j];
    for (int k = 1; k <= grid; ++k) {
        double t0 = kTwoPi * (k - 1) / grid, t1 = kTwoPi * k / grid;
        if (!track_step(B, t0, t1, cur, 0)) {
            out.ok = false;
            out.error = "degenerate braid near angle " + std::to_string(t1);
            return out;
        }
        for (int j = 0; j < n; ++j) pos[j][k] = cur[j];
    }
    std::vector<cd> endp(n);
    for (int j = 0; j < n; ++j) endp[j] = pos[j][grid];
    std::vector<cd> perm_pos;
    if (!match_roots(endp, start, perm_pos)) {
        out.ok = false;
        out.error = "closure permutation is ambiguous";
        return out;
    }
    std::vector<int> sigma(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (perm_pos[j] == start[i]) sigma[j] = i;
    out.closure = sigma;
    out.strands = n;
    std::vector<bool> seen(n, false);
    for (int j0 = 0; j0 < n; ++j0) {
        if (seen[j0]) continue;
        LinkComponent c;
        c.face = out.face;
        c.side = out.side;
        c.proj.full = true;
        int j = j0;
        do {
            seen[j] = true;
            for (int k = 0; k < grid; ++k) {
                cd x = pos[j][k];
                c.samples.push_back({x, kTwoPi * k / grid});
            }
            ++c.multiplicity;
            j = sigma[j];
        } while (j != j0);
        finish_component(c);
        out.components.push_back(std::move(c));
    }
    return out;
}

// ------------------------------------------------ mixed slices: curve tracing in (angle, Re x, Im x)

struct CurveSystem {
    const std::vector<SliceTerm>& T;
    double tol;

    Eigen::Vector2d F(const Eigen::Vector3d& p) const {
        cd v = eval_terms(T, cd(p[1], p[2]), p[0]);
        return {v.real(), v.imag()};
    }

    Eigen::Matrix<double, 2, 3> J(const Eigen::Vector3d& p) const {
        // analytic: d/dth, d/dx, d/dy
        cd x(p[1], p[2]), xc = std::conj(x);
        cd dth = 0, dx = 0, dy = 0;
        for (const auto& t : T) {
            cd c = t.coeff.to_complex() * std::polar(1.0, t.beta * p[0]);
            cd xa = 1, xb = 1;
            for (int k = 0; k < t.a; ++k) xa *= x;
            for (int k = 0; k < t.b; ++k) xb *= xc;
            cd val = c * xa * xb;
            dth += cd(0, t.beta) * val;
            // d/dx = d/dz + d/dzbar, d/dy = i (d/dz - d/dzbar)
            cd dz = 0, dzb = 0;
            if (t.a > 0) {
                cd xa1 = 1;
                for (int k = 0; k < t.a - 1; ++k) xa1 *= x;
                dz = c * double(t.a) * xa1 * xb;
            }
            if (t.b > 0) {
                cd xb1 = 1;
                for (int k = 0; k < t.b - 1; ++k) xb1 *= xc;
                dzb = c * double(t.b) * xa * xb1;
            }
            dx += dz + dzb;
            dy += cd(0, 1) * (dz - dzb);
        }
        Eigen::Matrix<double, 2, 3> M;
        M << dth.real(), dx.real(), dy.real(), dth.imag(), dx.imag(), dy.imag();
        return M;
    }

    // min-norm Gauss-Newton onto the curve
    bool correct(Eigen::Vector3d& p, int iters = 30) const {
        for (int it = 0; it < iters; ++it) {
            Eigen::Vector2d r = F(p);
            if (r.norm() < tol) return true;
            auto M = J(p);
            Eigen::Matrix2d A = M * M.transpose();
            if (std::fabs(A.determinant()) < 1e-300) return false;
            Eigen::Vector3d step = M.transpose() * A.ldlt().solve(r);
            if (!step.allFinite()) return false;
            p -= step;
        }
        return F(p).norm() < tol;
    }

    Eigen::Vector3d tangent(const Eigen::Vector3d& p) const {
        auto M = J(p);
        Eigen::Vector3d a = M.row(0).transpose(), b = M.row(1).transpose();
        Eigen::Vector3d t = a.cross(b);
        double n = t.norm();
        return n > 0 ? Eigen::Vector3d(t / n) : Eigen::Vector3d::Zero();
    }
};

double torus_dist(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    double dth = std::remainder(a[0] - b[0], kTwoPi);
    return std::sqrt(dth * dth + (a[1] - b[1]) * (a[1] - b[1]) + (a[2] - b[2]) * (a[2] - b[2]));
}

struct Traced {
    std::vector<Eigen::Vector3d> pts;  // unwrapped angle
    int winding = 0;
    bool closed = false;
};

Traced trace_curve(const CurveSystem& S, Eigen::Vector3d p0, double h0) {
    Traced out;
    Eigen::Vector3d t = S.tangent(p0);
    if (t.norm() == 0) return out;
    if (t[0] < -1e-12 || (std::fabs(t[0]) <= 1e-12 && (t[1] < 0 || (t[1] == 0 && t[2] < 0)))) t = -t;
    Eigen::Vector3d p = p0;
    out.pts.push_back(p);
    double h = h0, length = 0;
    const double hmax = 4 * h0, hmin = 1e-9;
    for (int step = 0; step < 2000000; ++step) {
        Eigen::Vector3d q = p + h * t;
        bool good = S.correct(q, 8);
        Eigen::Vector3d tn;
        if (good) {
            tn = S.tangent(q);
            if (tn.dot(t) < 0) tn = -tn;
            good = tn.norm() > 0 && (q - p).norm() < 1.5 * h && tn.dot(t) > std::cos(0.3);
        }
        if (!good) {
            h *= 0.5;
            if (h < hmin) return out;
            continue;
        }
        length += (q - p).norm();
        p = q;
        t = tn;
        out.pts.push_back(p);
        if (length > 6 * h0 && torus_dist(p, p0) < 1.5 * h) {
            out.closed = true;
            out.winding = static_cast<int>(std::lround((p[0] - p0[0]) / kTwoPi));
            return out;
        }
        h = std::min(hmax, h * 1.25);
    }
    return out;
}

double sampled_lower_bound(const std::vector<SliceTerm>& top) {
    // min over the torus of |sum c e^{i((a-b) al + beta th)}|, minus a Lipschitz margin
    const int n = 256;
    double L = 0, mn = 1e300;
    for (const auto& t : top) L += std::abs(t.coeff.to_complex()) * (std::abs(t.a - t.b) + std::abs(t.beta));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double al = kTwoPi * i / n, th = kTwoPi * j / n;
            cd s = 0;
            for (const auto& t : top)
                s += t.coeff.to_complex() * std::polar(1.0, (t.a - t.b) * al + t.beta * th);
            mn = std::min(mn, std::abs(s));
        }
    return mn - L * kTwoPi / n;
}

FaceLink curve_slice(const Slice& s, FaceLink out, int grid) {
    out.method = "curve";
    std::vector<SliceTerm> top;
    double lower = 0, total = 0;
    for (const auto& t : s.terms) {
        double c = std::abs(t.coeff.to_complex());
        total += c;
        if (t.a + t.b == s.deg) top.push_back(t);
        else lower += c;
    }
    double m = sampled_lower_bound(top);
    if (m <= 0) {
        out.ok = false;
        out.error = "unbounded strand: leading part of the slice vanishes";
        return out;
    }
    const double B = std::max(1.0, lower / m) * 1.05;
    const double scale = total * std::pow(std::max(1.0, B), s.deg);
    CurveSystem S{s.terms, 1e-12 * scale};

    // seeds: local minima of |F| on a grid in (angle, radius, argument)
    const int nt = 48, nr = 32, na = 48;
    std::vector<double> val(nt * nr * na);
    auto idx = [&](int i, int j, int k) { return (i * nr + j) * na + k; };
    auto point = [&](int i, int j, int k) {
        double th = kTwoPi * i / nt, r = B * (j + 0.5) / nr, al = kTwoPi * k / na;
        return Eigen::Vector3d(th, r * std::cos(al), r * std::sin(al));
    };
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < nr; ++j)
            for (int k = 0; k < na; ++k) val[idx(i, j, k)] = S.F(point(i, j, k)).norm();
    std::vector<Eigen::Vector3d> seeds;
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < nr; ++j)
            for (int k = 0; k < na; ++k) {
                double v = val[idx(i, j, k)];
                bool is_min = true;
                for (int di = -1; di <= 1 && is_min; ++di)
                    for (int dj = -1; dj <= 1 && is_min; ++dj)
                        for (int dk = -1; dk <= 1; ++dk) {
                            if (!di && !dj && !dk) continue;
                            int jj = j + dj;
                            if (jj < 0 || jj >= nr) continue;
                            int ii = (i + di + nt) % nt, kk = (k + dk + na) % na;
                            if (val[idx(ii, jj, kk)] < v) {
                                is_min = false;
                                break;
                            }
                        }
                if (is_min) seeds.push_back(point(i, j, k));
            }

    const double h0 = std::max(1.0, B) * kTwoPi / grid;
    std::vector<Traced> curves;
    for (auto p : seeds) {
        if (!S.correct(p)) continue;
        double ax = std::hypot(p[1], p[2]);
        if (ax < 1e-7 || ax > B * 1.01) continue;
        p[0] = wrap(p[0]);
        bool covered = false;
        for (const auto& c : curves) {
            for (const auto& q : c.pts)
                if (torus_dist(p, q) < 2 * h0 * 4) {
                    covered = true;
                    break;
                }
            if (covered) break;
        }
        if (covered) continue;
        Traced c = trace_curve(S, p, h0);
        if (!c.closed) {
            out.ok = false;
            out.error = "curve tracing did not close";
            return out;
        }
        curves.push_back(std::move(c));
    }

    for (const auto& c : curves) {
        LinkComponent comp;
        comp.face = out.face;
        comp.side = out.side;
        comp.multiplicity = std::abs(c.winding);
        double lo = 1e300, hi = -1e300;
        for (const auto& q : c.pts) {
            comp.samples.push_back({cd(q[1], q[2]), wrap(q[0])});
            lo = std::min(lo, q[0]);
            hi = std::max(hi, q[0]);
        }
        if (c.winding != 0 || hi - lo >= kTwoPi) {
            comp.proj.full = true;
        } else {
            double w = hi - lo;
            if (w < 1e-6) comp.proj.arcs.push_back({wrap(0.5 * (lo + hi)), 0.0});
            else {
                // snap outward to the angle grid
                double step = kTwoPi / grid;
                double slo = std::floor(lo / step) * step, shi = std::ceil(hi / step) * step;
                comp.proj.arcs.push_back({wrap(slo), std::min(kTwoPi, shi - slo)});
            }
        }
        finish_component(comp);
        out.strands += comp.multiplicity;
        out.components.push_back(std::move(comp));
    }
    std::sort(out.components.begin(), out.components.end(), [](const LinkComponent& a, const LinkComponent& b) {
        double aa = a.proj.full ? -1 : a.proj.arcs.front().first, bb = b.proj.full ? -1 : b.proj.arcs.front().first;
        if (std::fabs(aa - bb) > 1e-6) return aa < bb;
        return a.minAbs < b.minAbs;
    });
    return out;
}

bool face_vanishes_on_axis(const MixedPolynomial& fP, bool u_axis_zero) {
    // u_axis_zero: restrict to u = 0, i.e. keep monomials without u
    for (const auto& m : fP.terms())
        if ((u_axis_zero ? m.deg_u() : m.deg_v()) == 0) return false;
    return true;
}

}  // namespace

FaceLink solve_slice(const std::vector<SliceTerm>& terms, int face, const Weight& P, Side side,
                     const LinkOptions& opt) {
    FaceLink out;
    out.face = face;
    out.P = P;
    out.side = side;
    Slice s = reduce_slice(terms);
    if (s.terms.empty()) {
        out.ok = false;
        out.error = "empty slice";
        return out;
    }
    if (s.holo || s.antiholo) return braid_slice(s, out, opt.grid);
    return curve_slice(s, out, opt.grid);
}

Side primary_side(const MixedPolynomial& f, const Weight& P) {
    Rational k = P.k();
    if (k > 1) return Side::u;
    if (k < 1) return Side::v;
    MixedPolynomial fP = face_function(f, P).poly;
    if (!is_u_semiholomorphic(fP) && is_v_semiholomorphic(fP)) return Side::v;
    return Side::u;
}

FaceLink compute_link(const MixedPolynomial& f, const GammaInnResult& g, int face, Side side,
                      const LinkOptions& opt) {
    if (face < 1 || face > static_cast<int>(g.p_inn.size())) throw std::out_of_range("face index");
    const Weight& P = g.p_inn[face - 1];
    MixedPolynomial fP = face_function(f, P).poly;
    SliceFunction sl = rescale(fP, P, side);
    FaceLink out = solve_slice(sl.limit_terms(), face, P, side, opt);
    if (!out.ok) return out;
    const int N = static_cast<int>(g.p_inn.size());
    std::vector<LinkComponent> axes;
    if (face == 1 && face_vanishes_on_axis(fP, true)) axes.push_back(axis_component(face, Side::u, opt.grid));
    if (face == N && face_vanishes_on_axis(fP, false)) axes.push_back(axis_component(face, Side::v, opt.grid));
    out.strands += static_cast<int>(axes.size());
    out.components.insert(out.components.begin(), axes.begin(), axes.end());
    return out;
}

std::vector<int> LinkData::nonempty() const {
    std::vector<int> r;
    for (const auto& f : faces)
        if (f.ok && !f.components.empty()) r.push_back(f.face);
    return r;
}

std::vector<int> LinkData::failed() const {
    std::vector<int> r;
    for (const auto& f : faces)
        if (!f.ok) r.push_back(f.face);
    return r;
}

LinkData compute_links(const MixedPolynomial& f, const GammaInnResult& g, const LinkOptions& opt) {
    LinkData d;
    const int N = static_cast<int>(g.p_inn.size());
    d.faces.resize(N);
    auto work = [&](int i) { d.faces[i] = compute_link(f, g, i + 1, primary_side(f, g.p_inn[i]), opt); };
    int threads = std::max(1, std::min(opt.threads, N));
    if (threads == 1) {
        for (int i = 0; i < N; ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (int i = t; i < N; i += threads) work(i);
            });
        for (auto& th : pool) th.join();
    }
    return d;
}

const char* to_string(LinkKind k) {
    switch (k) {
        case LinkKind::empty: return "empty";
        case LinkKind::metric_one_braid: return "metric-1-braid";
        case LinkKind::non_tangent_hopf: return "non-tangent-Hopf";
        case LinkKind::general: return "general";
        default: return "unknown";
    }
}

std::string component_cone(const LinkComponent& c, const Rational& k, double) {
    if (c.axis) return c.side == Side::u ? "u=0" : "v=0";
    if (k > 1) return c.proj.full ? "u=0" : "subset-of-u=0";
    if (k < 1) return c.proj.full ? "v=0" : "subset-of-v=0";
    return "cone-over-component";
}

LinkClass classify_link(const LinkData& links, const GammaInnResult& g, double grid_tol) {
    LinkClass lc;
    if (!links.failed().empty()) {
        lc.kind = LinkKind::unknown;
        lc.note = "some face links could not be computed";
        return lc;
    }
    std::vector<std::pair<const LinkComponent*, Rational>> comps;
    for (const auto& f : links.faces)
        for (const auto& c : f.components) comps.push_back({&c, g.p_inn[f.face - 1].k()});
    if (comps.empty()) {
        lc.kind = LinkKind::empty;
        return lc;
    }
    auto single_strand_cone = [&](const std::pair<const LinkComponent*, Rational>& c) -> std::string {
        if (c.first->multiplicity != 1) return "";
        std::string cone = component_cone(*c.first, c.second, grid_tol);
        return (cone == "u=0" || cone == "v=0") ? cone : "";
    };
    if (comps.size() == 1) {
        std::string cone = single_strand_cone(comps[0]);
        if (!cone.empty()) {
            lc.kind = LinkKind::metric_one_braid;
            lc.braidAxis = cone == "u=0" ? "L_v" : "L_u";
            return lc;
        }
    }
    if (comps.size() == 2) {
        std::string a = single_strand_cone(comps[0]), b = single_strand_cone(comps[1]);
        if (!a.empty() && !b.empty() && a != b) {
            lc.kind = LinkKind::non_tangent_hopf;
            return lc;
        }
    }
    lc.kind = LinkKind::general;
    return lc;
}

std::string braid_svg(const FaceLink& face) {
    const double W = 500, H = 400, pad = 30;
    double xm = 1e-9;
    for (const auto& c : face.components)
        for (const auto& [x, th] : c.samples) xm = std::max(xm, std::fabs(x.real()));
    std::ostringstream o;
    o.precision(6);
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    const char* colors[] = {"crimson", "steelblue", "darkgreen", "darkorange", "purple", "black"};
    int ci = 0;
    for (const auto& c : face.components) {
        const char* col = colors[ci++ % 6];
        o << "<g stroke=\"" << col << "\" fill=\"" << col << "\">\n";
        for (std::size_t i = 0; i < c.samples.size(); i += std::max<std::size_t>(1, c.samples.size() / 2048)) {
            double X = pad + (W - 2 * pad) * (0.5 + 0.5 * c.samples[i].first.real() / xm);
            double Y = H - pad - (H - 2 * pad) * c.samples[i].second / kTwoPi;
            o << "<circle cx=\"" << X << "\" cy=\"" << Y << "\" r=\"1\"/>\n";
        }
        o << "</g>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace mixedlip
