#include "mixedlip/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mixedlip {

std::vector<std::pair<long long, long long>> support(const MixedPolynomial& f) {
    std::set<std::pair<long long, long long>> s;
    for (const auto& m : f.terms()) s.insert({m.deg_u(), m.deg_v()});
    return {s.begin(), s.end()};
}

namespace {

Integer lcm_int(const Integer& a, const Integer& b) { return a / gcd(a, b) * b; }

// inward normal of the segment a -> b (a left of b, b lower), as a coprime positive weight
Weight edge_weight(const RPoint& a, const RPoint& b) {
    Rational dx = b.x - a.x, dy = b.y - a.y;
    Rational p1 = -dy, p2 = dx;
    Integer L = lcm_int(denominator(p1), denominator(p2));
    Integer n1 = numerator(Rational(p1 * L)), n2 = numerator(Rational(p2 * L));
    Integer g = gcd(n1, n2);
    return make_weight((n1 / g).convert_to<long long>(), (n2 / g).convert_to<long long>());
}

Rational wdot(const Weight& P, const RPoint& q) { return Rational(P.p1) * q.x + Rational(P.p2) * q.y; }

}  // namespace

std::vector<Weight> Diagram::weights() const {
    std::vector<Weight> w;
    for (const auto& e : edges) w.push_back(e.p);
    return w;
}

bool Diagram::on_or_above(const RPoint& q) const {
    if (vertices.empty()) return true;
    for (const auto& e : edges)
        if (wdot(e.p, q) < e.d) return false;
    // vertices are stored with decreasing x: back() is leftmost, front() is lowest
    if (q.x < vertices.back().x) return false;
    if (q.y < vertices.front().y) return false;
    return true;
}

Json Diagram::to_json() const {
    Json j;
    Json vs = Json::array();
    for (const auto& v : vertices) vs.push_back(Json::array({to_string(v.x), to_string(v.y)}));
    j["vertices"] = vs;
    Json es = Json::array();
    for (const auto& e : edges) {
        Json x;
        x["from"] = e.from;
        x["to"] = e.to;
        x["P"] = Json::array({e.p.p1, e.p.p2});
        x["k"] = to_string(e.p.k());
        x["d"] = to_string(e.d);
        es.push_back(x);
    }
    j["edges"] = es;
    j["uConvenient"] = u_convenient;
    j["vConvenient"] = v_convenient;
    return j;
}

Diagram chain_diagram(std::vector<RPoint> chain) {
    // drop points that are collinear with their neighbours
    bool changed = true;
    while (changed && chain.size() >= 3) {
        changed = false;
        for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
            if (edge_weight(chain[i - 1], chain[i]) == edge_weight(chain[i], chain[i + 1])) {
                chain.erase(chain.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    Diagram D;
    const int n = static_cast<int>(chain.size());
    for (int i = n - 1; i >= 0; --i) D.vertices.push_back(chain[i]);
    for (int i = 0; i + 1 < n; ++i) {
        DiagramEdge e;
        e.p = edge_weight(chain[i], chain[i + 1]);
        e.d = wdot(e.p, chain[i]);
        e.from = n - 1 - i;
        e.to = n - 2 - i;
        D.edges.push_back(e);
    }
    if (n > 0) {
        D.v_convenient = chain.front().x == 0;
        D.u_convenient = chain.back().y == 0;
    }
    return D;
}

Diagram newton_boundary(const std::vector<RPoint>& pts) {
    if (pts.empty()) return {};
    // start at the lowest of the leftmost points
    RPoint cur = pts.front();
    for (const auto& p : pts)
        if (p.x < cur.x || (p.x == cur.x && p.y < cur.y)) cur = p;
    std::vector<RPoint> chain{cur};
    for (;;) {
        std::optional<RPoint> best;
        Rational best_slope;
        for (const auto& q : pts) {
            if (!(q.y < cur.y) || !(q.x > cur.x)) continue;
            Rational s = (q.y - cur.y) / (q.x - cur.x);
            if (!best || s < best_slope || (s == best_slope && q.x > best->x)) {
                best = q;
                best_slope = s;
            }
        }
        if (!best) break;
        cur = *best;
        chain.push_back(cur);
    }
    return chain_diagram(chain);
}

Diagram newton_boundary(const MixedPolynomial& f) {
    std::vector<RPoint> pts;
    for (auto [x, y] : support(f)) pts.push_back({Rational(x), Rational(y)});
    return newton_boundary(pts);
}

FaceFunction face_function(const MixedPolynomial& f, const Weight& P) {
    FaceFunction r;
    r.d = min_rdeg(f, P);
    std::vector<Monomial> t;
    for (const auto& m : f.terms())
        if (rdeg(P, m) == r.d) t.push_back(m);
    r.poly = MixedPolynomial::from_terms(std::move(t));
    return r;
}

MixedPolynomial vertex_function(const MixedPolynomial& f, long long x, long long y) {
    std::vector<Monomial> t;
    for (const auto& m : f.terms())
        if (m.deg_u() == x && m.deg_v() == y) t.push_back(m);
    return MixedPolynomial::from_terms(std::move(t));
}

// ---------------------------------------------------------------- Gamma_inn

namespace {

struct FaceTestCache {
    const MixedPolynomial& f;
    const NondegenOptions& opt;
    std::map<std::pair<std::string, int>, Tri> memo;

    Tri run(const MixedPolynomial& fD, int I) {
        auto key = std::make_pair(fD.str(), I);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Tri t = face_sing_empty(fD, I, opt);
        memo.emplace(key, t);
        return t;
    }
};

Rational edge_k(const RPoint& a, const RPoint& b) { return (a.y - b.y) / (b.x - a.x); }

bool strictly_convex(const Diagram& D) {
    for (std::size_t i = 1; i < D.edges.size(); ++i)
        if (!(D.edges[i].p.k() < D.edges[i - 1].p.k())) return false;
    return true;
}

// all face tests of a candidate diagram; stops at the first "no"
std::vector<IndFaceReport> test_candidate(const MixedPolynomial& f, const Diagram& D, FaceTestCache& cache,
                                          bool& failed) {
    std::vector<IndFaceReport> rep;
    failed = false;
    auto push = [&](IndFaceReport r) {
        failed = failed || r.result.no();
        rep.push_back(std::move(r));
        return failed;
    };
    // axis strata first, they are cheapest
    for (std::size_t i = 0; i < D.edges.size(); ++i) {
        const auto& e = D.edges[i];
        MixedPolynomial fD = face_function(f, e.p).poly;
        bool touches_y = D.vertices[e.from].x == 0 && i == 0;
        bool touches_x = D.vertices[e.to].y == 0 && i + 1 == D.edges.size();
        if (touches_y && push({"edge", e.p, std::nullopt, stratum_v_axis, cache.run(fD, stratum_v_axis)})) return rep;
        if (touches_x && push({"edge", e.p, std::nullopt, stratum_u_axis, cache.run(fD, stratum_u_axis)})) return rep;
    }
    for (std::size_t vi = 0; vi < D.vertices.size(); ++vi) {
        const auto& p = D.vertices[vi];
        if (p.x == 0 || p.y == 0) continue;
        long long x = numerator(p.x).convert_to<long long>(), y = numerator(p.y).convert_to<long long>();
        MixedPolynomial fD = vertex_function(f, x, y);
        if (fD.is_zero()) continue;
        if (push({"vertex", std::nullopt, std::make_pair(x, y), stratum_torus, cache.run(fD, stratum_torus)}))
            return rep;
    }
    for (const auto& e : D.edges) {
        MixedPolynomial fD = face_function(f, e.p).poly;
        if (push({"edge", e.p, std::nullopt, stratum_torus, cache.run(fD, stratum_torus)})) return rep;
    }
    return rep;
}

bool region_contains(const Diagram& big, const Diagram& small) {
    for (const auto& v : small.vertices)
        if (!big.on_or_above(v)) return false;
    return true;
}

bool same_vertices(const Diagram& a, const Diagram& b) { return a.vertices == b.vertices; }

}  // namespace

GammaInnResult gamma_inn(const MixedPolynomial& f, const NondegenOptions& opt) {
    GammaInnResult res;
    Diagram G = newton_boundary(f);
    std::vector<RPoint> chain(G.vertices.rbegin(), G.vertices.rend());  // increasing x
    std::vector<RPoint> supp;
    for (auto [x, y] : support(f)) supp.push_back({Rational(x), Rational(y)});
    const int n = static_cast<int>(chain.size());

    std::vector<Diagram> cands;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int inner = j - i - 1;
            int masks = inner > 0 && inner <= 10 ? (1 << inner) : 1;
            for (int mask = 0; mask < masks; ++mask) {
                std::vector<RPoint> S{chain[i]};
                for (int l = 0; l < inner; ++l)
                    if (!(mask >> l & 1)) S.push_back(chain[i + 1 + l]);
                if (j > i) S.push_back(chain[j]);
                std::vector<RPoint> full;
                if (S.front().x != 0) {
                    Rational kl = S.size() >= 2 ? std::max(Rational(1), edge_k(S[0], S[1])) : Rational(1);
                    full.push_back({Rational(0), S.front().y + kl * S.front().x});
                }
                full.insert(full.end(), S.begin(), S.end());
                if (S.back().y != 0) {
                    Rational kr = S.size() >= 2 ? std::min(Rational(1), edge_k(S[S.size() - 2], S.back()))
                                                : Rational(1);
                    full.push_back({S.back().x + S.back().y / kr, Rational(0)});
                }
                Diagram D = chain_diagram(full);
                if (D.edges.empty() || !strictly_convex(D)) continue;
                bool ok = true;
                for (const auto& q : supp)
                    if (!D.on_or_above(q)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                bool dup = false;
                for (const auto& c : cands) dup = dup || same_vertices(c, D);
                if (!dup) cands.push_back(std::move(D));
            }
        }
    res.candidates = static_cast<int>(cands.size());

    FaceTestCache cache{f, opt, {}};
    struct Passed {
        int idx;
        std::vector<IndFaceReport> rep;
        bool all_yes;
    };
    std::vector<Passed> passed;
    // larger regions first, so the maximal candidates are tested first
    std::vector<int> order(cands.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return region_contains(cands[a], cands[b]) && !region_contains(cands[b], cands[a]);
    });
    for (int idx : order) {
        // skip candidates already dominated by a passing one
        bool dominated = false;
        for (const auto& p : passed)
            if (region_contains(cands[p.idx], cands[idx]) && !same_vertices(cands[p.idx], cands[idx]))
                dominated = true;
        if (dominated) continue;
        bool failed = false;
        auto rep = test_candidate(f, cands[idx], cache, failed);
        if (failed) continue;
        bool all_yes = std::all_of(rep.begin(), rep.end(), [](const IndFaceReport& r) { return r.result.yes(); });
        passed.push_back({idx, std::move(rep), all_yes});
    }
    // maximal elements
    std::vector<const Passed*> maximal;
    for (const auto& p : passed) {
        bool dom = false;
        for (const auto& q : passed)
            if (&p != &q && region_contains(cands[q.idx], cands[p.idx]) && !same_vertices(cands[q.idx], cands[p.idx]))
                dom = true;
        if (!dom) maximal.push_back(&p);
    }
    if (maximal.empty()) {
        res.found = false;
        res.ind = TriValue::no;
        // report the full chain with its extensions
        for (const auto& c : cands)
            if (c.vertices.size() >= G.vertices.size()) {
                res.diagram = c;
                break;
            }
        if (res.diagram.vertices.empty() && !cands.empty()) res.diagram = cands.front();
        bool failed = false;
        if (!res.diagram.vertices.empty()) res.report = test_candidate(f, res.diagram, cache, failed);
    } else {
        std::sort(maximal.begin(), maximal.end(), [](const Passed* a, const Passed* b) { return a->idx < b->idx; });
        const Passed* best = maximal.front();
        for (const Passed* m : maximal)
            if (m->all_yes && !best->all_yes) best = m;
        res.found = true;
        res.diagram = cands[best->idx];
        res.report = best->rep;
        res.ind = best->all_yes ? TriValue::yes : TriValue::unknown;
        res.certified = best->all_yes && maximal.size() == 1;
        for (const Passed* m : maximal)
            if (m != best) res.alternatives.push_back(cands[m->idx]);
    }
    res.p_inn = res.diagram.weights();
    return res;
}

Json GammaInnResult::to_json() const {
    Json j;
    j["diagram"] = diagram.to_json();
    Json p = Json::array();
    for (const auto& w : p_inn) p.push_back(Json::array({w.p1, w.p2}));
    j["P_inn"] = p;
    j["status"] = certified ? "certified" : "heuristic";
    j["IND"] = to_string(ind);
    j["candidatesTested"] = candidates;
    Json r = Json::array();
    for (const auto& x : report) {
        Json e;
        e["face"] = x.kind;
        if (x.weight) e["P"] = Json::array({x.weight->p1, x.weight->p2});
        if (x.point) e["point"] = Json::array({x.point->first, x.point->second});
        e["stratum"] = x.stratum == stratum_torus ? "{1,2}" : x.stratum == stratum_u_axis ? "{1}" : "{2}";
        e["result"] = to_string(x.result.value);
        e["method"] = to_string(x.result.method);
        r.push_back(e);
    }
    j["indReport"] = r;
    Json alt = Json::array();
    for (const auto& a : alternatives) alt.push_back(a.to_json());
    j["alternatives"] = alt;
    return j;
}

// ---------------------------------------------------------------- semi-radial

const char* to_string(RadialType t) {
    switch (t) {
        case RadialType::I: return "I";
        case RadialType::II: return "II";
        default: return "III";
    }
}

RadialType SemiRadial::type() const {
    Rational k = P.k();
    if (k == 1) return RadialType::II;
    if ((k > 1 && u_convenient) || (k < 1 && v_convenient)) return RadialType::I;
    return RadialType::III;
}

std::vector<SemiRadial> radial_decompose(const MixedPolynomial& f, const GammaInnResult& g,
                                         const NondegenOptions& opt) {
    std::vector<SemiRadial> out;
    for (const auto& P : g.p_inn) {
        FaceFunction ff = face_function(f, P);
        SemiRadial s;
        s.P = P;
        s.d = ff.d;
        s.principal = ff.poly;
        s.remainder = f - ff.poly;
        for (const auto& m : ff.poly.terms()) {
            if (m.deg_v() == 0) s.u_convenient = true;
            if (m.deg_u() == 0) s.v_convenient = true;
        }
        s.isolated = sing_isolated(ff.poly, opt).value;
        if (s.isolated != TriValue::no) out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------- svg

std::string newton_svg(const MixedPolynomial& f, const Diagram& gamma, const GammaInnResult& inn) {
    double maxc = 1;
    for (auto [x, y] : support(f)) maxc = std::max({maxc, double(x), double(y)});
    for (const auto& v : inn.diagram.vertices) maxc = std::max({maxc, to_double(v.x), to_double(v.y)});
    const double size = 400, pad = 30, s = (size - 2 * pad) / (maxc + 1);
    auto X = [&](double x) { return pad + s * x; };
    auto Y = [&](double y) { return size - pad - s * y; };
    std::ostringstream o;
    o.precision(6);
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
    o << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(maxc + 1) << "\" y2=\"" << Y(0)
      << "\" stroke=\"black\"/>\n";
    o << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(maxc + 1)
      << "\" stroke=\"black\"/>\n";
    auto poly = [&](const Diagram& D, const char* color, const char* dash) {
        o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"" << dash << " points=\"";
        for (const auto& v : D.vertices) o << X(to_double(v.x)) << "," << Y(to_double(v.y)) << " ";
        o << "\"/>\n";
    };
    poly(gamma, "steelblue", "");
    poly(inn.diagram, "crimson", " stroke-dasharray=\"6,4\"");
    for (auto [x, y] : support(f))
        o << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"4\" fill=\"black\"/>\n";
    for (const auto& e : inn.diagram.edges) {
        const auto& a = inn.diagram.vertices[e.from];
        const auto& b = inn.diagram.vertices[e.to];
        double mx = 0.5 * (to_double(a.x) + to_double(b.x)), my = 0.5 * (to_double(a.y) + to_double(b.y));
        o << "<text x=\"" << X(mx) + 4 << "\" y=\"" << Y(my) - 4 << "\" font-size=\"11\">(" << e.p.p1 << ","
          << e.p.p2 << ")</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace mixedlip
