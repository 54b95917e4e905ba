#include "fixtures.hpp"
#include "mixedlip/newton.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <set>

using namespace mixedlip;

namespace {

std::vector<std::pair<long long, long long>> pts(std::initializer_list<std::pair<long long, long long>> l) { return l; }

std::vector<RPoint> rpts(const std::vector<std::pair<long long, long long>>& p) {
    std::vector<RPoint> out;
    for (auto [x, y] : p) out.push_back({make_rational(x), make_rational(y)});
    return out;
}

std::vector<std::pair<int, int>> weights(const Diagram& d) {
    std::vector<std::pair<int, int>> w;
    for (const auto& P : d.weights()) w.push_back({P.p1, P.p2});
    return w;
}

std::vector<std::pair<Rational, Rational>> verts(const Diagram& d) {
    std::vector<std::pair<Rational, Rational>> v;
    for (const auto& p : d.vertices) v.push_back({p.x, p.y});
    return v;
}

std::vector<std::pair<Rational, Rational>> rv(std::initializer_list<std::pair<long long, long long>> l) {
    std::vector<std::pair<Rational, Rational>> v;
    for (auto [x, y] : l) v.push_back({make_rational(x), make_rational(y)});
    return v;
}

}  // namespace

TEST(Support, Examples) {
    auto s = support(parse(fixtures::kIntro));
    std::set<std::pair<long long, long long>> got(s.begin(), s.end());
    EXPECT_EQ(got, (std::set<std::pair<long long, long long>>{{8, 0}, {2, 3}, {2, 6}, {1, 5}, {0, 8}}));
    EXPECT_EQ(support(parse("u*~u")), pts({{2, 0}}));
    auto c = support(parse(fixtures::kCounter));
    std::set<std::pair<long long, long long>> cs(c.begin(), c.end());
    EXPECT_EQ(cs, (std::set<std::pair<long long, long long>>{{8, 0}, {5, 2}, {3, 2}, {0, 4}}));
}

TEST(NewtonBoundary, Examples) {
    Diagram d = newton_boundary(rpts({{8, 0}, {2, 3}, {2, 6}, {1, 5}, {0, 8}}));
    EXPECT_EQ(verts(d), rv({{8, 0}, {2, 3}, {1, 5}, {0, 8}}));
    EXPECT_EQ(weights(d), (std::vector<std::pair<int, int>>{{3, 1}, {2, 1}, {1, 2}}));
    EXPECT_TRUE(d.u_convenient && d.v_convenient);

    Diagram one = newton_boundary(rpts({{3, 0}}));
    EXPECT_EQ(one.vertices.size(), 1u);
    EXPECT_TRUE(one.edges.empty());
    EXPECT_TRUE(one.u_convenient);
    EXPECT_FALSE(newton_boundary(rpts({{3, 2}})).u_convenient);

    Diagram c = newton_boundary(rpts({{8, 0}, {5, 2}, {3, 2}, {0, 4}}));
    EXPECT_EQ(verts(c), rv({{8, 0}, {3, 2}, {0, 4}}));
    EXPECT_EQ(weights(c), (std::vector<std::pair<int, int>>{{2, 3}, {2, 5}}));
}

TEST(FaceFunction, IntroExample) {
    MixedPolynomial f = parse(fixtures::kIntro);
    FaceFunction a = face_function(f, make_weight(2, 1));
    EXPECT_EQ(a.poly, parse("v^3*u^2 + ~v^5*u"));
    EXPECT_EQ(a.d, 7);
    FaceFunction b = face_function(f, make_weight(1, 2));
    EXPECT_EQ(b.poly, parse("u^8 + v^3*u^2"));
    EXPECT_EQ(b.d, 8);
    FaceFunction c = face_function(f, make_weight(3, 1));
    EXPECT_EQ(c.poly, parse("~v^5*u + v^4*~v^4"));
    MixedPolynomial radial = parse("u^3 + v^2*~v");
    EXPECT_EQ(face_function(radial, make_weight(1, 1)).poly, radial);
}

TEST(GammaInn, IntroExample) {
    auto t0 = std::chrono::steady_clock::now();
    GammaInnResult g = gamma_inn(parse(fixtures::kIntro));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_LT(secs, 1.0);
    EXPECT_EQ(verts(g.diagram), rv({{8, 0}, {2, 3}, {0, 7}}));
    ASSERT_EQ(g.p_inn.size(), 2u);
    EXPECT_EQ(g.p_inn[0], make_weight(2, 1));
    EXPECT_EQ(g.p_inn[1], make_weight(1, 2));
    EXPECT_TRUE(g.certified);
    EXPECT_EQ(g.ind, TriValue::yes);
}

TEST(GammaInn, RadialConvenient) {
    GammaInnResult g = gamma_inn(parse("u^3 + v^3"));
    ASSERT_EQ(g.p_inn.size(), 1u);
    EXPECT_EQ(g.p_inn[0], make_weight(1, 1));
}

TEST(GammaInn, ContactDataExample) {
    GammaInnResult g = gamma_inn(parse(fixtures::kNcF));
    std::vector<Rational> ks;
    for (const auto& P : g.p_inn) ks.push_back(P.k());
    EXPECT_EQ(ks, (std::vector<Rational>{make_rational(3), make_rational(3, 2), make_rational(1), make_rational(2, 3),
                                         make_rational(1, 2)}));
}

TEST(RadialDecompose, Examples) {
    MixedPolynomial f = parse("u*v + u^4 + v^4");
    auto r = radial_decompose(f, gamma_inn(f));
    ASSERT_FALSE(r.empty());
    EXPECT_EQ(r[0].P, make_weight(1, 1));
    EXPECT_EQ(r[0].d, 2);
    EXPECT_EQ(r[0].principal, parse("u*v"));
    EXPECT_EQ(r[0].type(), RadialType::II);

    MixedPolynomial g = parse("u^3 + v^2*~v");
    auto s = radial_decompose(g, gamma_inn(g));
    ASSERT_FALSE(s.empty());
    EXPECT_EQ(s[0].d, 3);
    EXPECT_TRUE(s[0].remainder.is_zero());

    MixedPolynomial h = parse("u^8");
    EXPECT_TRUE(radial_decompose(h, gamma_inn(h)).empty());
}

TEST(RadialDecompose, OmegaTypes) {
    const char* polys[3] = {fixtures::kOmegaF, fixtures::kOmegaG, fixtures::kOmegaH};
    RadialType want[3] = {RadialType::I, RadialType::II, RadialType::III};
    for (int i = 0; i < 3; ++i) {
        MixedPolynomial f = parse(polys[i]);
        auto r = radial_decompose(f, gamma_inn(f));
        ASSERT_FALSE(r.empty()) << polys[i];
        EXPECT_EQ(r[0].type(), want[i]) << polys[i];
    }
}

// ---------------------------------------------------------------- properties

namespace {

// exhaustive lower-left hull: an edge is a pair spanning a line with positive normal that supports all points
std::set<std::tuple<int, int, long long>> brute_edges(const std::vector<std::pair<long long, long long>>& p) {
    std::set<std::tuple<int, int, long long>> out;
    for (auto a : p)
        for (auto b : p) {
            if (!(a.first > b.first && a.second < b.second)) continue;
            long long p1 = b.second - a.second, p2 = a.first - b.first;
            long long g = std::gcd(p1, p2);
            p1 /= g;
            p2 /= g;
            long long d = p1 * a.first + p2 * a.second;
            bool ok = true;
            for (auto q : p) ok = ok && p1 * q.first + p2 * q.second >= d;
            if (ok) out.insert({int(p1), int(p2), d});
        }
    return out;
}

}  // namespace

TEST(NewtonProperty, HullMatchesBruteForce) {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> n(1, 8), c(0, 12);
    for (int t = 0; t < 400; ++t) {
        std::set<std::pair<long long, long long>> s;
        int k = n(rng);
        while (static_cast<int>(s.size()) < k) s.insert({c(rng), c(rng)});
        std::vector<std::pair<long long, long long>> p(s.begin(), s.end());
        Diagram d = newton_boundary(rpts(p));
        std::set<std::tuple<int, int, long long>> got;
        for (const auto& e : d.edges) got.insert({e.p.p1, e.p.p2, static_cast<long long>(numerator(e.d))});
        ASSERT_EQ(got, brute_edges(p));
        // idempotence
        Diagram again = newton_boundary(d.vertices);
        ASSERT_EQ(verts(again), verts(d));
        // weight/edge duality
        for (const auto& e : d.edges) {
            const RPoint& A = d.vertices[e.from];
            const RPoint& B = d.vertices[e.to];
            ASSERT_EQ(e.p.p1 * A.x + e.p.p2 * A.y, e.d);
            ASSERT_EQ(e.p.p1 * B.x + e.p.p2 * B.y, e.d);
            for (auto [x, y] : p) {
                Rational v = e.p.p1 * make_rational(x) + e.p.p2 * make_rational(y);
                bool on = v == e.d;
                bool between = make_rational(x) <= std::max(A.x, B.x) && make_rational(x) >= std::min(A.x, B.x);
                ASSERT_TRUE(v > e.d || (on && between));
            }
        }
    }
}

TEST(NewtonProperty, RdegEqualityExactlyOnFaces) {
    std::mt19937 rng(22);
    int checked = 0;
    for (int t = 0; t < 600; ++t) {
        MixedPolynomial f = fixtures::random_mixed(rng, 6, 5);
        Diagram d = newton_boundary(f);
        for (const auto& e : d.edges) {
            FaceFunction ff = face_function(f, e.p);
            ASSERT_EQ(Rational(ff.d), e.d);
            for (const auto& m : f.terms()) {
                long long r = rdeg(e.p, m);
                ASSERT_GE(r, ff.d);
                bool in_face = !ff.poly.coefficient(m.e).is_zero();
                ASSERT_EQ(r == ff.d, in_face);
            }
            ++checked;
        }
    }
    EXPECT_GE(checked, 200);
}

TEST(NewtonProperty, GammaInnDominatesSupport) {
    std::mt19937 rng(23);
    for (int t = 0; t < 200; ++t) {
        MixedPolynomial f = fixtures::random_u_semiholomorphic(rng);
        GammaInnResult g = gamma_inn(f);
        Diagram base = newton_boundary(f);
        for (auto [x, y] : support(f)) ASSERT_TRUE(g.diagram.on_or_above({make_rational(x), make_rational(y)})) << f.str();
        for (const auto& v : base.vertices) ASSERT_TRUE(g.diagram.on_or_above(v)) << f.str();
        for (std::size_t i = 0; i < g.p_inn.size(); ++i)
            for (const auto& m : f.terms()) ASSERT_GE(Rational(rdeg(g.p_inn[i], m)), g.diagram.edges[i].d) << f.str();
    }
}
