#include "fixtures.hpp"
#include "mixedlip/invariants.hpp"
#include "mixedlip/links.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

using namespace mixedlip;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0 ? a + kTwoPi : a;
}

LinkData links_of(const char* text) {
    MixedPolynomial f = parse(text);
    return compute_links(f, gamma_inn(f));
}

SliceTerm term(long long re, long long im, int a, int b, int beta) {
    SliceTerm t;
    t.coeff = {make_rational(re), make_rational(im)};
    t.a = a;
    t.b = b;
    t.beta = beta;
    t.gamma = 0;
    return t;
}

bool is_permutation(const std::vector<int>& p) {
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<int>(i)) return false;
    return true;
}

int cycles(const std::vector<int>& p) {
    std::vector<bool> seen(p.size());
    int n = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++n;
        for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    return n;
}

}  // namespace

TEST(Links, IntroFaceOne) {
    LinkData L = links_of(fixtures::kIntro);
    ASSERT_EQ(L.faces.size(), 2u);
    const FaceLink& f1 = L.faces[0];
    EXPECT_EQ(f1.side, Side::u);
    ASSERT_EQ(f1.components.size(), 2u);
    EXPECT_TRUE(f1.components[0].axis);
    EXPECT_FALSE(f1.components[1].axis);
    // the other strand is u = -e^{-8it}
    for (const auto& [x, t] : f1.components[1].samples) ASSERT_LT(std::abs(x + std::polar(1.0, -8 * t)), 1e-8);
}

TEST(Links, IntroFaceTwoPhases) {
    LinkData L = links_of(fixtures::kIntro);
    const FaceLink& f2 = L.faces[1];
    EXPECT_EQ(f2.side, Side::v);
    ASSERT_EQ(f2.components.size(), 3u);
    std::vector<double> phases;
    for (const auto& c : f2.components)
        for (const auto& [x, t] : c.samples)
            if (t == 0) phases.push_back(wrap(std::arg(x)));
    std::sort(phases.begin(), phases.end());
    ASSERT_EQ(phases.size(), 3u);
    double tol = kTwoPi / 1024;
    EXPECT_NEAR(phases[0], std::numbers::pi / 3, tol);
    EXPECT_NEAR(phases[1], std::numbers::pi, tol);
    EXPECT_NEAR(phases[2], 5 * std::numbers::pi / 3, tol);
}

TEST(Links, CubicSliceClosure) {
    // u^3 + e^{2it} u: nonzero roots +-i e^{it} each return to themselves
    FaceLink a = solve_slice({term(1, 0, 3, 0, 0), term(1, 0, 1, 0, 2)}, 1, make_weight(2, 1), Side::u);
    ASSERT_TRUE(a.ok) << a.error;
    ASSERT_EQ(a.components.size(), 2u);
    for (const auto& c : a.components) EXPECT_EQ(c.multiplicity, 1);
    // u^3 + e^{it} u: roots +-i e^{it/2} swap after one turn
    FaceLink b = solve_slice({term(1, 0, 3, 0, 0), term(1, 0, 1, 0, 1)}, 1, make_weight(2, 1), Side::u);
    ASSERT_TRUE(b.ok) << b.error;
    ASSERT_EQ(b.components.size(), 1u);
    EXPECT_EQ(b.components[0].multiplicity, 2);
    EXPECT_EQ(b.closure, (std::vector<int>{1, 0}));
}

TEST(Links, GammaTrueIndexSets) {
    EXPECT_EQ(links_of(fixtures::kNcF).nonempty().size(), 5u);
    EXPECT_EQ(links_of(fixtures::kNcG).nonempty().size(), 4u);
    EXPECT_TRUE(links_of("u*~u + v*~v").nonempty().empty());
}

TEST(Links, Classification) {
    auto kind = [](const char* text) {
        MixedPolynomial f = parse(text);
        GammaInnResult g = gamma_inn(f);
        return classify_link(compute_links(f, g), g, kTwoPi / 1024);
    };
    LinkClass a = kind(fixtures::kOmegaF);
    EXPECT_EQ(a.kind, LinkKind::metric_one_braid);
    EXPECT_EQ(kind("u*v + u^3 + v^3").kind, LinkKind::non_tangent_hopf);
    EXPECT_EQ(kind("u^2 - v^2").kind, LinkKind::general);
    EXPECT_EQ(kind("u*~u + v*~v").kind, LinkKind::empty);
}

TEST(Links, MixedCounterexampleCircles) {
    LinkData L = links_of(fixtures::kCounter);
    ASSERT_EQ(L.faces.size(), 2u);
    EXPECT_EQ(L.faces[0].components.size(), 3u);
    EXPECT_EQ(L.faces[1].components.size(), 5u);
    for (const auto& fl : L.faces)
        for (const auto& c : fl.components) {
            EXPECT_FALSE(c.proj.full);
            EXPECT_FALSE(c.proj.has_interior(kTwoPi / 1024));
        }
}

// ---------------------------------------------------------------- properties

TEST(LinksProperty, PermutationAndGridDoubling) {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> deg(1, 4), beta(-4, 4), co(-3, 3);
    int tested = 0;
    for (int c = 0; c < 260; ++c) {
        int n = deg(rng);
        std::vector<SliceTerm> terms;
        // nonvanishing extreme coefficients keep every strand bounded and away from the axis
        terms.push_back(term(1 + std::abs(co(rng)), co(rng), n, 0, beta(rng)));
        terms.push_back(term(1 + std::abs(co(rng)), co(rng), 0, 0, beta(rng)));
        for (int j = 1; j < n; ++j)
            if (rng() % 2) terms.push_back(term(co(rng), co(rng), j, 0, beta(rng)));
        terms.erase(std::remove_if(terms.begin(), terms.end(), [](const SliceTerm& t) { return t.coeff.is_zero(); }),
                    terms.end());
        bool conj = c % 3 == 0;
        if (conj)
            for (auto& t : terms) std::swap(t.a, t.b);
        LinkOptions o1, o2;
        o1.grid = 512;
        o2.grid = 1024;
        FaceLink a = solve_slice(terms, 1, make_weight(2, 1), Side::u, o1);
        FaceLink b = solve_slice(terms, 1, make_weight(2, 1), Side::u, o2);
        if (!a.ok || !b.ok) continue;  // a collision the refinement could not resolve
        ASSERT_EQ(a.strands, n);
        ASSERT_TRUE(is_permutation(a.closure));
        ASSERT_TRUE(is_permutation(b.closure));
        ASSERT_EQ(cycles(a.closure), static_cast<int>(a.components.size()));
        int total = 0;
        for (const auto& comp : a.components) total += comp.multiplicity;
        ASSERT_EQ(total, a.strands);
        ASSERT_EQ(a.components.size(), b.components.size());
        std::vector<int> ma, mb;
        for (const auto& comp : a.components) ma.push_back(comp.multiplicity);
        for (const auto& comp : b.components) mb.push_back(comp.multiplicity);
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        ASSERT_EQ(ma, mb);
        for (std::size_t i = 0; i < a.components.size(); ++i) ASSERT_TRUE(a.components[i].proj.full);
        ++tested;
    }
    EXPECT_GE(tested, 200);
}
