#pragma once

#include "mixedlip/poly.hpp"

#include <random>
#include <string>

namespace fixtures {

// polynomial examples used across suites
inline const char* kIntro = "u^8 + v^3*u^2 + ~v^6*u^2 + ~v^5*u + v^4*~v^4";
inline const char* kNcF = "u^14 + u^10*v^2 + u^7*v^2*~v^2 + u^5*v^3*~v^3 + u^3*v^5*~v^4 + v^9*~v^9";
inline const char* kNcG = "u^11 + u^7*v^2 + u^4*v^2*~v^2 + u^2*v^3*~v^3 + v^6*~v^6";
inline const char* kCounter = "(u^3 - v*~v)(u^5 - v*~v)";
inline const char* kCounterTheta = "-i*u^5*v*~v + i*(v*~v)^2";
inline const char* kOmegaF = "(u + v^2*~v)(u*~u + (v*~v)^2*v^2 + 2i*(v*~v)^3)";
inline const char* kOmegaG = "u(u*~u + v^2 + 2i*v*~v)";
inline const char* kOmegaH = "v(u*~u + (v*~v)^2*v^2 + 2i*(v*~v)^3)";

inline mixedlip::GaussRat small_gauss(std::mt19937& rng, int span = 3) {
    std::uniform_int_distribution<int> d(-span, span);
    int re = 0, im = 0;
    while (re == 0 && im == 0) {
        re = d(rng);
        im = d(rng);
    }
    return {mixedlip::make_rational(re), mixedlip::make_rational(im)};
}

// random mixed polynomial without constant term
inline mixedlip::MixedPolynomial random_mixed(std::mt19937& rng, int max_terms = 5, int max_exp = 3) {
    using namespace mixedlip;
    std::uniform_int_distribution<int> nt(1, max_terms), ex(0, max_exp);
    MixedPolynomial f;
    while (f.is_zero()) {
        int n = nt(rng);
        for (int j = 0; j < n; ++j) {
            Exps e{ex(rng), ex(rng), ex(rng), ex(rng)};
            if (e[0] + e[1] + e[2] + e[3] == 0) e[0] = 1;
            f += MixedPolynomial::monomial(small_gauss(rng), e);
        }
    }
    return f;
}

// convenient polynomial holomorphic in u: c0 u^n + c1 v^a ~v^b + inner terms u^p v^q ~v^s
inline mixedlip::MixedPolynomial random_u_semiholomorphic(std::mt19937& rng) {
    using namespace mixedlip;
    std::uniform_int_distribution<int> n(1, 7), m(1, 5), inner(0, 2), ex(0, 4);
    MixedPolynomial f = MixedPolynomial::monomial(small_gauss(rng, 2), Exps{n(rng), 0, 0, 0});
    int a = m(rng);
    std::uniform_int_distribution<int> bb(0, a - 1 > 0 ? a - 1 : 0);
    int b = bb(rng);
    f += MixedPolynomial::monomial(small_gauss(rng, 2), Exps{0, 0, a, b});
    int k = inner(rng);
    for (int j = 0; j < k; ++j) {
        Exps e{1 + ex(rng) / 2, 0, ex(rng), ex(rng) / 2};
        f += MixedPolynomial::monomial(small_gauss(rng, 2), e);
    }
    return f;
}

}  // namespace fixtures
