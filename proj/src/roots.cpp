#include "mixedlip/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mixedlip {

using cd = std::complex<double>;

std::vector<cd> aberth_roots(const std::vector<cd>& coeffs, const std::vector<cd>& guess, int max_iter) {
    int n = static_cast<int>(coeffs.size()) - 1;
    while (n > 0 && coeffs[n] == cd(0)) --n;
    if (n <= 0) return {};
    std::vector<cd> a(coeffs.begin(), coeffs.begin() + n + 1);
    for (auto& c : a) c /= coeffs[n];

    std::vector<cd> z;
    if (static_cast<int>(guess.size()) == n) {
        z = guess;
    } else {
        // Fujiwara-type radius
        double rad = 0;
        for (int j = 0; j < n; ++j) rad = std::max(rad, std::pow(std::abs(a[j]), 1.0 / (n - j)));
        rad = std::max(rad, 1e-3);
        for (int j = 0; j < n; ++j) z.push_back(std::polar(rad, 2 * M_PI * j / n + 0.4));
    }

    auto horner = [&](cd x, cd& p, cd& dp) {
        p = a[n];
        dp = 0;
        for (int j = n - 1; j >= 0; --j) {
            dp = dp * x + p;
            p = p * x + a[j];
        }
    };

    for (int it = 0; it < max_iter; ++it) {
        double maxstep = 0;
        for (int i = 0; i < n; ++i) {
            cd p, dp;
            horner(z[i], p, dp);
            if (p == cd(0)) continue;
            cd ratio = p / dp;
            cd s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    cd diff = z[i] - z[j];
                    if (diff != cd(0)) s += 1.0 / diff;
                }
            cd w = ratio / (1.0 - ratio * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
            z[i] -= w;
            maxstep = std::max(maxstep, std::abs(w) / std::max(1.0, std::abs(z[i])));
        }
        if (maxstep < 1e-15) break;
    }
    // Newton polish
    for (auto& x : z) {
        for (int k = 0; k < 3; ++k) {
            cd p, dp;
            horner(x, p, dp);
            if (dp == cd(0)) break;
            cd step = p / dp;
            if (!std::isfinite(step.real())) break;
            x -= step;
        }
    }
    return z;
}

void trim(GaussPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

GaussPoly derivative(const GaussPoly& p) {
    GaussPoly d;
    for (std::size_t j = 1; j < p.size(); ++j) d.push_back(p[j] * GaussRat(static_cast<long long>(j)));
    trim(d);
    return d;
}

namespace {
GaussPoly poly_rem(GaussPoly a, const GaussPoly& b) {
    trim(a);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    while (a.size() >= b.size()) {
        GaussRat q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= q * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}
}  // namespace

GaussPoly poly_gcd(GaussPoly a, GaussPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        GaussPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    GaussRat lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

std::vector<cd> to_complex(const GaussPoly& p) {
    std::vector<cd> out;
    for (const auto& c : p) out.push_back(c.to_complex());
    return out;
}

}  // namespace mixedlip
