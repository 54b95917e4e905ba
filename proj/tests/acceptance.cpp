// one PASS/FAIL line per criterion
// usage: acceptance <build-dir> <mixedlip-cli>

#include "fixtures.hpp"
#include "mixedlip/arcs.hpp"
#include "mixedlip/invariants.hpp"
#include "mixedlip/newton.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

using namespace mixedlip;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
    bool ok = true;
    std::ostringstream why;
    void expect(bool c, const std::string& msg) {
        if (!c && ok) why << msg;
        ok = ok && c;
    }
};

std::string sh_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return out + "'";
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    status = pclose(p);
    return out;
}

Rational q(long long p, long long r = 1) { return make_rational(p, r); }

bool same_vertices(const Diagram& d, std::vector<std::pair<long long, long long>> want) {
    if (d.vertices.size() != want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i)
        if (d.vertices[i].x != q(want[i].first) || d.vertices[i].y != q(want[i].second)) return false;
    return true;
}

void c1(Check& c) {
    auto t0 = Clock::now();
    MixedPolynomial f = parse(fixtures::kIntro);
    std::set<std::pair<long long, long long>> sup;
    for (auto p : support(f)) sup.insert(p);
    Diagram g = newton_boundary(f);
    GammaInnResult inn = gamma_inn(f);
    double secs = seconds_since(t0);
    c.expect(sup == std::set<std::pair<long long, long long>>{{8, 0}, {2, 3}, {2, 6}, {1, 5}, {0, 8}}, "support");
    c.expect(same_vertices(g, {{8, 0}, {2, 3}, {1, 5}, {0, 8}}), "newton boundary");
    c.expect(same_vertices(inn.diagram, {{8, 0}, {2, 3}, {0, 7}}), "gamma_inn vertices");
    c.expect(inn.p_inn.size() == 2 && inn.p_inn[0] == make_weight(2, 1) && inn.p_inn[1] == make_weight(1, 2), "P_inn");
    c.expect(secs < 1.0, "time " + std::to_string(secs));
    c.why << " (" << secs << " s)";
}

void c2(Check& c) {
    MixedPolynomial f = parse(fixtures::kIntro);
    c.expect(face_function(f, make_weight(2, 1)).poly == parse("v^3*u^2 + ~v^5*u"), "face (2,1)");
    c.expect(face_function(f, make_weight(1, 2)).poly == parse("u^8 + v^3*u^2"), "face (1,2)");
    c.expect(face_function(f, make_weight(3, 1)).poly == parse("~v^5*u + v^4*~v^4"), "face (3,1)");
}

void c3(Check& c) {
    Analysis a = analyze(parse(fixtures::kIntro));
    c.expect(a.links_ok() && a.links.faces.size() == 2, "links");
    if (!c.ok) return;
    const FaceLink& f1 = a.links.faces[0];
    const FaceLink& f2 = a.links.faces[1];
    bool axis = std::any_of(f1.components.begin(), f1.components.end(), [](const auto& x) { return x.axis; });
    c.expect(f1.side == Side::u && f1.components.size() == 2 && axis, "face (2,1) components");
    c.expect(f2.side == Side::v && f2.components.size() == 3, "face (1,2) components");
    std::vector<double> ph;
    for (const auto& comp : f2.components)
        for (const auto& [x, t] : comp.samples)
            if (t == 0) {
                double a0 = std::fmod(std::arg(x) + 2 * std::numbers::pi, 2 * std::numbers::pi);
                ph.push_back(a0);
            }
    std::sort(ph.begin(), ph.end());
    double tol = 2 * std::numbers::pi / 1024, pi = std::numbers::pi;
    c.expect(ph.size() == 3 && std::abs(ph[0] - pi / 3) < tol && std::abs(ph[1] - pi) < tol &&
                 std::abs(ph[2] - 5 * pi / 3) < tol,
             "phases");
}

bool contact_is(const ContactData& d, int N, std::vector<std::pair<Rational, int>> want) {
    if (d.N != N || d.C.size() != want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i)
        if (d.C[i].kappa != want[i].first || d.C[i].m != want[i].second) return false;
    return true;
}

void c4(Check& c) {
    Analysis f = analyze(parse(fixtures::kNcF)), g = analyze(parse(fixtures::kNcG));
    c.expect(contact_is(f.contact, 5, {{q(3), 1}, {q(2), 1}, {q(3, 2), 2}, {q(1), 1}}), "NC(f)");
    c.expect(contact_is(g.contact, 4, {{q(3), 1}, {q(2), 1}, {q(3, 2), 1}, {q(1), 1}}), "NC(g)");
    Verdict v = compare(f, g);
    c.expect(v.kind == VerdictKind::not_equivalent && !v.certificates.empty() &&
                 v.certificates[0].theorem == "NC-invariance",
             "compare verdict");
}

void c5(Check& c) {
    auto t0 = Clock::now();
    MixedPolynomial f = parse(fixtures::kCounter);
    MixedPolynomial theta = parse(fixtures::kCounterTheta);
    Analysis a = analyze(f), b = analyze(f + theta);
    c.expect(a.B == TriValue::no, "condition B");
    ContactVerdict cv = contact_order(a, {1, 0}, {2, 0});
    c.expect(cv.kind == ContactVerdict::exact && cv.value == q(3, 2), "exact contact");
    double ef = estimate_contact(a, {1, 0}, {2, 0}).best.q_hat;
    double eg = estimate_contact(b, {1, 0}, {2, 0}).best.q_hat;
    c.expect(std::abs(ef - 1.5) <= 0.05, "oracle f " + std::to_string(ef));
    c.expect(std::abs(eg - 1.0) <= 0.05, "oracle f+theta " + std::to_string(eg));
    Verdict v = family_check(a, theta);
    c.expect(v.kind == VerdictKind::topological_at_least, "family verdict");
    double secs = seconds_since(t0);
    c.expect(secs < 30.0, "time");
    c.why << " (oracle " << ef << ", " << eg << "; " << secs << " s)";
}

void c6(Check& c) {
    const char* polys[3] = {fixtures::kOmegaF, fixtures::kOmegaG, fixtures::kOmegaH};
    RadialType want[3] = {RadialType::I, RadialType::II, RadialType::III};
    std::vector<Analysis> x;
    for (int i = 0; i < 3; ++i) {
        x.push_back(analyze(parse(polys[i])));
        c.expect(x[i].linkClass.kind == LinkKind::metric_one_braid, "class " + std::to_string(i));
        c.expect(!x[i].radial.empty() && x[i].radial[0].type() == want[i], "type " + std::to_string(i));
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) c.expect(compare(x[i], x[j]).kind == VerdictKind::ambient_equivalent, "compare");
}

void c7(Check& c, const std::string& dir) {
    for (const char* suite : {"poly", "newton", "nondegen", "links", "invariants", "arcs"}) {
        std::string cmd = sh_quote(dir + "/test_" + suite) + " --gtest_filter='*Property*' > /dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        c.expect(rc == 0, std::string("suite ") + suite);
    }
}

void c8(Check& c, const std::string& cli) {
    std::string q1 = sh_quote(fixtures::kNcF), q2 = sh_quote(fixtures::kNcG), q3 = sh_quote(fixtures::kCounter);
    std::vector<std::string> cmds = {cli + " analyze " + q1, cli + " analyze " + q3, cli + " compare " + q1 + " " + q2,
                                     cli + " family -- " + q3 + " " + sh_quote(fixtures::kCounterTheta)};
    for (const auto& cmd : cmds) {
        int s1, s2, s3;
        std::string a = capture(cmd, s1);
        std::string b = capture(cmd, s2);
        std::string d = capture("MIXEDLIP_THREADS=1 " + cmd, s3);
        c.expect(!a.empty() && a == b && a == d, "bytes differ: " + cmd);
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <build-dir> <mixedlip-cli>\n";
        return 2;
    }
    std::string dir = argv[1], cli = sh_quote(argv[2]);
    std::vector<std::pair<std::string, std::function<void(Check&)>>> crit = {
        {"newton fixtures", c1},
        {"face functions", c2},
        {"link counts", c3},
        {"contact data", c4},
        {"counterexample", c5},
        {"omega examples", c6},
        {"property suites", [&](Check& c) { c7(c, dir); }},
        {"determinism", [&](Check& c) { c8(c, cli); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        Check c;
        try {
            crit[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << crit[i].first;
        std::string why = c.why.str();
        if (!why.empty()) std::cout << ": " << why;
        std::cout << "\n";
        failed += !c.ok;
    }
    return failed == 0 ? 0 : 1;
}
