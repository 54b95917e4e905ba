#include "fixtures.hpp"
#include "mixedlip/poly.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace mixedlip;

namespace {

std::set<std::pair<int, int>> supports(const MixedPolynomial& f) {
    std::set<std::pair<int, int>> s;
    for (const auto& m : f.terms()) s.insert({m.deg_u(), m.deg_v()});
    return s;
}

GaussRat gr(long long re, long long im = 0) { return {make_rational(re), make_rational(im)}; }

}  // namespace

TEST(Rational, PrintsAsFraction) {
    EXPECT_EQ(to_string(make_rational(3)), "3/1");
    EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
    EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
}

TEST(Parse, IntroExample) {
    MixedPolynomial f = parse(fixtures::kIntro);
    EXPECT_EQ(f.size(), 5u);
    std::set<std::pair<int, int>> want{{8, 0}, {2, 3}, {2, 6}, {1, 5}, {0, 8}};
    EXPECT_EQ(supports(f), want);
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse("u - u"), ParseError);
    EXPECT_THROW(parse("u + 1"), ParseError);
    EXPECT_THROW(parse("u + * v"), ParseError);
    try {
        parse("u + v)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 5u);
    }
}

TEST(Parse, MergesLikeTerms) {
    MixedPolynomial f = parse("u*v + u*v");
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f.terms()[0].coeff, gr(2));
    EXPECT_EQ(f, parse("2uv"));
}

TEST(Parse, Juxtaposition) {
    EXPECT_EQ(parse("3/2 i u ~v"), MixedPolynomial::monomial({make_rational(0), make_rational(3, 2)}, Exps{1, 0, 0, 1}));
    EXPECT_EQ(parse("(u+v)^2"), parse("u^2 + 2*u*v + v^2"));
}

TEST(Evaluate, Examples) {
    EXPECT_NEAR(std::abs(evaluate(parse("u*~u"), cd(3, 4), cd(7, -1)) - cd(25)), 0, 1e-12);
    EXPECT_EQ(evaluate(parse("u*v + u^4 + v^4"), 0, 0), cd(0));
    EXPECT_NEAR(std::abs(evaluate(parse(fixtures::kCounter), 1, 1)), 0, 1e-14);
    EXPECT_TRUE(evaluate_exact(parse(fixtures::kCounter), gr(1), gr(1)).is_zero());
    EXPECT_EQ(evaluate_exact(parse("u*~u"), gr(3, 4), gr(0)), gr(25));
}

TEST(Wirtinger, Examples) {
    EXPECT_EQ(wirtinger(parse("v^3*u^2 + ~v^5*u"), Var::u), parse("2*v^3*u + ~v^5"));
    EXPECT_TRUE(wirtinger(parse("u^8"), Var::vbar).is_zero());
    EXPECT_EQ(wirtinger(parse("v*~v"), Var::v), parse("~v"));
}

TEST(Rescale, FaceSlices) {
    // gamma = 0 part is u^8 + e^{3it} u^2
    SliceFunction s = rescale(parse("u^8 + v^3*u^2"), make_weight(1, 2), Side::u);
    auto lim = s.limit_terms();
    ASSERT_EQ(lim.size(), 2u);
    std::set<std::tuple<int, int, int>> got;
    for (const auto& t : lim) got.insert({t.a, t.b, t.beta});
    EXPECT_EQ(got, (std::set<std::tuple<int, int, int>>{{8, 0, 0}, {2, 0, 3}}));

    SliceFunction q = rescale(parse(fixtures::kIntro), make_weight(2, 1), Side::u);
    got.clear();
    for (const auto& t : q.limit_terms()) got.insert({t.a, t.b, t.beta});
    EXPECT_EQ(got, (std::set<std::tuple<int, int, int>>{{2, 0, 3}, {1, 0, -5}}));

    SliceFunction r = rescale(parse("u^3 + v^2*~v"), make_weight(1, 1), Side::u);
    EXPECT_TRUE(r.positive_terms().empty());
}

// ---------------------------------------------------------------- properties

TEST(PolyProperty, PrintParseRoundTrip) {
    std::mt19937 rng(11);
    for (int c = 0; c < 300; ++c) {
        MixedPolynomial f = fixtures::random_mixed(rng);
        MixedPolynomial g = parse_expression(f.str());
        ASSERT_EQ(f, g) << f.str();
        ASSERT_EQ(g.str(), f.str());
    }
}

TEST(PolyProperty, ConjugationSymmetry) {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    for (int c = 0; c < 300; ++c) {
        MixedPolynomial f = fixtures::random_mixed(rng);
        cd u(d(rng), d(rng)), v(d(rng), d(rng));
        cd a = evaluate(conj_swap(f), u, v), b = std::conj(evaluate(f, u, v));
        ASSERT_LE(std::abs(a - b), 1e-9 * (1 + std::abs(b))) << f.str();
    }
}

TEST(PolyProperty, WirtingerLeibniz) {
    std::mt19937 rng(13);
    const Var vars[4] = {Var::u, Var::ubar, Var::v, Var::vbar};
    for (int c = 0; c < 250; ++c) {
        MixedPolynomial f = fixtures::random_mixed(rng, 3, 2), g = fixtures::random_mixed(rng, 3, 2);
        Var x = vars[c % 4];
        ASSERT_EQ(wirtinger(f * g, x), wirtinger(f, x) * g + f * wirtinger(g, x));
    }
}

TEST(PolyProperty, RescaleMatchesDirectEvaluation) {
    std::mt19937 rng(14);
    std::uniform_real_distribution<double> d(-1.2, 1.2), lr(std::log(1e-3), 0.0), ang(0, 6.283185307179586);
    std::uniform_int_distribution<int> pw(1, 5);
    for (int c = 0; c < 300; ++c) {
        MixedPolynomial f = fixtures::random_mixed(rng);
        Weight P = make_weight(pw(rng), pw(rng));
        Side side = c % 2 ? Side::u : Side::v;
        SliceFunction s = rescale(f, P, side);
        cd x(d(rng), d(rng));
        double r = std::exp(lr(rng)), t = ang(rng);
        double k = to_double(P.k());
        long long dd = min_rdeg(f, P);
        cd direct;
        double norm;
        if (side == Side::u) {
            direct = evaluate(f, std::pow(r, k) * x, std::polar(r, t));
            norm = std::pow(r, double(dd) / P.p2);
        } else {
            direct = evaluate(f, std::polar(r, t), std::pow(r, 1 / k) * x);
            norm = std::pow(r, double(dd) / P.p1);
        }
        cd want = direct / norm;
        cd got = s.eval(x, r, t);
        double scale = 0;
        for (const auto& m : f.terms()) scale += std::abs(m.coeff.to_complex());
        ASSERT_LE(std::abs(got - want), 1e-10 * std::max(1.0, std::abs(want)) * scale) << f.str();
    }
}

TEST(PolyProperty, RdegMinimalOnFaceFunction) {
    std::mt19937 rng(15);
    std::uniform_int_distribution<int> pw(1, 6);
    for (int c = 0; c < 300; ++c) {
        MixedPolynomial f = fixtures::random_mixed(rng);
        Weight P = make_weight(pw(rng), pw(rng));
        long long d = min_rdeg(f, P);
        // independent minimum over the monomials
        long long brute = 1LL << 60;
        for (const auto& m : f.terms()) brute = std::min<long long>(brute, P.p1 * m.deg_u() + P.p2 * m.deg_v());
        ASSERT_EQ(d, brute);
    }
}
