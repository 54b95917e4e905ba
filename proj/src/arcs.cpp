#include "mixedlip/arcs.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace mixedlip {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kAcceptResidual = 1e-10;

double round9(double x) { return std::round(x * 1e9) / 1e9; }

struct SliceEval {
    cd F, Fx, Fxb;
    double scale;
};

SliceEval eval_slice(const SliceFunction& s, cd x, double r, double angle) {
    SliceEval e{0, 0, 0, 0};
    cd xc = std::conj(x);
    for (const auto& t : s.terms) {
        cd c = t.coeff.to_complex() * std::polar(1.0, t.beta * angle);
        if (t.gamma != 0) c *= std::pow(r, to_double(t.gamma));
        cd xa = std::pow(x, t.a), xb = std::pow(xc, t.b);
        e.F += c * xa * xb;
        e.scale += std::abs(c) * std::pow(std::abs(x), t.a + t.b);
        if (t.a > 0) e.Fx += c * double(t.a) * std::pow(x, t.a - 1) * xb;
        if (t.b > 0) e.Fxb += c * double(t.b) * xa * std::pow(xc, t.b - 1);
    }
    if (e.scale == 0) e.scale = 1;
    return e;
}

// min-norm Gauss-Newton on the two real equations of the slice
std::optional<cd> correct(const SliceFunction& s, cd x, double r, double angle, double* residual) {
    for (int it = 0; it < 60; ++it) {
        SliceEval e = eval_slice(s, x, r, angle);
        double rel = std::abs(e.F) / e.scale;
        if (rel < 1e-14) {
            if (residual) *residual = rel;
            return x;
        }
        cd da = e.Fx + e.Fxb, db = cd(0, 1) * (e.Fx - e.Fxb);
        Eigen::Matrix2d J;
        J << da.real(), db.real(), da.imag(), db.imag();
        Eigen::Vector2d res(e.F.real(), e.F.imag());
        Eigen::CompleteOrthogonalDecomposition<Eigen::Matrix2d> cod(J);
        cod.setThreshold(1e-9);
        Eigen::Vector2d step = cod.solve(-res);
        if (!step.allFinite() || step.norm() == 0) break;
        double cap = 0.25 * (1 + std::abs(x));
        if (step.norm() > cap) step *= cap / step.norm();
        x += cd(step[0], step[1]);
    }
    SliceEval e = eval_slice(s, x, r, angle);
    double rel = std::abs(e.F) / e.scale;
    if (residual) *residual = rel;
    if (rel < kAcceptResidual) return x;
    return std::nullopt;
}

double exponent(const Arc& a) {
    double k = to_double(a.P.k());
    return a.side == Side::u ? k : 1 / k;
}

std::pair<cd, cd> to_point(const Arc& a, cd x, double r) {
    cd polar = std::polar(r, a.angle);
    cd other = std::pow(r, exponent(a)) * x;
    return a.side == Side::u ? std::pair{other, polar} : std::pair{polar, other};
}

double norm(const std::pair<cd, cd>& p) { return std::hypot(std::abs(p.first), std::abs(p.second)); }

double dist(const std::pair<cd, cd>& p, const std::pair<cd, cd>& q) {
    return std::hypot(std::abs(p.first - q.first), std::abs(p.second - q.second));
}

// point of b on the sphere of radius s, or nothing
std::optional<std::pair<cd, cd>> point_at_norm(const Arc& b, double s) {
    if (b.size() < 2) return std::nullopt;
    std::size_t i = 0;
    while (i + 1 < b.size() && norm(b.points[i + 1]) >= s) ++i;
    if (i + 1 >= b.size()) i = b.size() - 2;
    double n0 = std::log(norm(b.points[i])), n1 = std::log(norm(b.points[i + 1]));
    double l0 = std::log(b.radii[i]), l1 = std::log(b.radii[i + 1]);
    double t = n1 == n0 ? 0 : (std::log(s) - n0) / (n1 - n0);
    double lr = l0 + t * (l1 - l0);
    cd x = b.xs[i] + t * (b.xs[i + 1] - b.xs[i]);
    double slope = n1 == n0 ? 1 : (n1 - n0) / (l1 - l0);
    for (int it = 0; it < 8; ++it) {
        auto y = correct(*b.slice, x, std::exp(lr), b.angle, nullptr);
        if (!y) return std::nullopt;
        x = *y;
        auto p = to_point(b, x, std::exp(lr));
        double err = std::log(s) - std::log(norm(p));
        if (std::fabs(err) < 1e-12) return p;
        lr += err / slope;
    }
    auto y = correct(*b.slice, x, std::exp(lr), b.angle, nullptr);
    if (!y) return std::nullopt;
    return to_point(b, *y, std::exp(lr));
}

std::size_t sample_count(const LinkComponent& c) { return c.samples.size(); }

}  // namespace

std::vector<double> RadiusSchedule::radii() const {
    std::vector<double> r(steps);
    for (int j = 0; j < steps; ++j) r[j] = r_max * std::pow(r_min / r_max, double(j) / (steps - 1));
    return r;
}

Arc sample_arc_at(const Analysis& a, const ComponentRef& ref, std::size_t sample, const RadiusSchedule& sched) {
    const LinkComponent& c = component(a, ref);
    if (c.samples.empty()) throw std::invalid_argument("component has no samples");
    sample %= c.samples.size();
    Arc arc;
    arc.ref = ref;
    arc.tau = double(sample) / c.samples.size();
    arc.side = c.side;
    arc.P = a.inn.p_inn.at(ref.face - 1);
    arc.angle = c.samples[sample].second;
    arc.slice = std::make_shared<SliceFunction>(rescale(a.f, arc.P, arc.side));
    const SliceFunction& s = *arc.slice;

    // walk from a tiny radius, where the face function dominates, up to r_max
    std::vector<double> targets = sched.radii();
    std::reverse(targets.begin(), targets.end());
    double r = std::min(1e-12, targets.front() * 1e-6);
    cd x = c.samples[sample].first;
    auto first = correct(s, x, r, arc.angle, nullptr);
    if (!first && c.axis) {
        for (double rho : {1e-1, 1e-2, 1e-3})
            for (int j = 0; j < 8 && !first; ++j) first = correct(s, std::polar(rho, kTwoPi * j / 8), r, arc.angle, nullptr);
    }
    if (!first) return arc;
    x = *first;
    std::vector<double> rs;
    std::vector<cd> xs;
    std::vector<double> res;
    double lstep = std::log(10.0) / 16;
    std::size_t next = 0;
    while (next < targets.size()) {
        double goal = std::min(targets[next], r * std::exp(lstep));
        auto y = correct(s, x, goal, arc.angle, nullptr);
        // shrink the step on failure
        double g = goal;
        int tries = 0;
        while (!y && tries < 30) {
            g = std::sqrt(r * g);
            y = correct(s, x, g, arc.angle, nullptr);
            ++tries;
        }
        if (!y) break;
        x = *y;
        r = g;
        if (r == targets[next]) {
            double rel = 0;
            correct(s, x, r, arc.angle, &rel);
            rs.push_back(r);
            xs.push_back(x);
            res.push_back(rel);
            ++next;
        }
    }
    // keep the continuous run that reaches down to r_min
    for (std::size_t j = rs.size(); j-- > 0;) {
        arc.radii.push_back(rs[j]);
        arc.xs.push_back(xs[j]);
        arc.points.push_back(to_point(arc, xs[j], rs[j]));
        arc.residuals.push_back(res[j]);
    }
    return arc;
}

Arc sample_arc(const Analysis& a, const ComponentRef& ref, double tau, const RadiusSchedule& sched) {
    const LinkComponent& c = component(a, ref);
    double t = tau - std::floor(tau);
    return sample_arc_at(a, ref, static_cast<std::size_t>(t * sample_count(c)), sched);
}

TordEstimate estimate_tord(const Arc& a, const Arc& b) {
    TordEstimate est;
    std::vector<double> X, Y;
    bool all_tiny = true;
    for (std::size_t j = 2; j < a.size(); ++j) {
        double s = norm(a.points[j]);
        auto q = point_at_norm(b, s);
        if (!q) continue;
        double d = dist(a.points[j], *q);
        est.series.push_back({s, d});
        if (d >= 1e-13) all_tiny = false;
        if (d <= 0) continue;
        X.push_back(std::log(s));
        Y.push_back(std::log(d));
    }
    if (!est.series.empty() && all_tiny) {
        est.infinite = true;
        est.q_hat = std::numeric_limits<double>::infinity();
        est.nPoints = static_cast<int>(est.series.size());
        return est;
    }
    est.nPoints = static_cast<int>(X.size());
    if (X.size() < 3) {
        est.q_hat = std::numeric_limits<double>::quiet_NaN();
        est.stderr_ = std::numeric_limits<double>::infinity();
        return est;
    }
    Eigen::MatrixXd A(X.size(), 2);
    Eigen::VectorXd y(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) {
        A(i, 0) = X[i];
        A(i, 1) = 1;
        y[i] = Y[i];
    }
    Eigen::Vector2d beta = A.colPivHouseholderQr().solve(y);
    Eigen::VectorXd resid = y - A * beta;
    double n = double(X.size());
    double mx = 0;
    for (double x : X) mx += x / n;
    double sxx = 0;
    for (double x : X) sxx += (x - mx) * (x - mx);
    double s2 = n > 2 ? resid.squaredNorm() / (n - 2) : 0;
    est.q_hat = beta[0];
    est.stderr_ = sxx > 0 ? std::sqrt(s2 / sxx) : 0;
    return est;
}

Json TordEstimate::to_json() const {
    Json j;
    if (infinite) j["q_hat"] = "inf";
    else if (std::isnan(q_hat)) j["q_hat"] = nullptr;
    else j["q_hat"] = round9(q_hat);
    j["stderr"] = std::isfinite(stderr_) ? Json(round9(stderr_)) : Json(nullptr);
    j["nPoints"] = nPoints;
    return j;
}

Json ContactEstimate::to_json() const {
    Json j = best.to_json();
    j["pairing"] = pairing;
    j["pairs"] = pairs;
    return j;
}

ContactEstimate estimate_contact(const Analysis& a, const ComponentRef& c1, const ComponentRef& c2, int nPairs,
                                 const RadiusSchedule& sched) {
    const LinkComponent& A = component(a, c1);
    const LinkComponent& B = component(a, c2);
    ContactEstimate out;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    double tol = 1e-6;
    if (A.side == B.side && A.proj.intersects(B.proj, tol)) {
        out.pairing = "matched-angle";
        // angles common to both projections, taken from A's samples
        std::vector<double> common;
        for (const auto& [x, th] : A.samples)
            if (B.proj.contains(th, tol) && (common.empty() || std::fabs(common.back() - th) > tol)) common.push_back(th);
        std::sort(common.begin(), common.end());
        common.erase(std::unique(common.begin(), common.end(), [&](double p, double q) { return q - p < tol; }),
                     common.end());
        auto near = [&](const LinkComponent& c, double th) {
            std::vector<std::size_t> idx;
            double best = 1e9;
            for (const auto& s : c.samples) {
                double d = std::fabs(std::remainder(s.second - th, kTwoPi));
                best = std::min(best, d);
            }
            for (std::size_t i = 0; i < c.samples.size(); ++i)
                if (std::fabs(std::remainder(c.samples[i].second - th, kTwoPi)) <= best + 1e-9) idx.push_back(i);
            return idx;
        };
        for (int j = 0; j < nPairs && !common.empty(); ++j) {
            double th = common[(j * common.size()) / nPairs];
            auto ia = near(A, th), ib = near(B, th);
            std::size_t m = std::max(ia.size(), ib.size());
            std::size_t pick = (j * m) / nPairs;
            pairs.push_back({ia[pick % ia.size()], ib[pick % ib.size()]});
        }
    } else {
        out.pairing = "parametric";
        for (int j = 0; j < nPairs; ++j)
            pairs.push_back({(j * A.samples.size()) / nPairs, (j * B.samples.size()) / nPairs});
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    bool have = false;
    for (auto [i, k] : pairs) {
        Arc x = sample_arc_at(a, c1, i, sched);
        Arc y = sample_arc_at(a, c2, k, sched);
        if (x.size() < 12 || y.size() < 12) continue;
        TordEstimate t = estimate_tord(x, y);
        if (std::isnan(t.q_hat) || t.nPoints < 10) continue;
        ++out.pairs;
        if (!have || t.q_hat > out.best.q_hat) {
            out.best = t;
            have = true;
        }
    }
    if (!have) {
        out.best.q_hat = std::numeric_limits<double>::quiet_NaN();
        out.best.stderr_ = std::numeric_limits<double>::infinity();
    }
    return out;
}

bool non_archimedean(double q12, double q13, double q23, double slack) {
    return q23 >= std::min(q12, q13) - slack;
}

}  // namespace mixedlip
