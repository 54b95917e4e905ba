#include "mixedlip/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace mixedlip {

namespace {
constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kAngleTol = 1e-6;

double grid_step(const Analysis& a) {
    (void)a;
    return kTwoPi / 1024;
}

// some point of J lies in the interior of I
bool interior_meets(const ArcSet& I, const ArcSet& J, double step) {
    if (I.empty() || J.empty()) return false;
    if (I.full) return true;
    for (auto [lo, w] : I.arcs) {
        if (w <= step) continue;
        ArcSet open;
        open.arcs.push_back({lo + kAngleTol, w - 2 * kAngleTol});
        if (open.intersects(J, 0.0)) return true;
    }
    return false;
}

bool face_is_one_braid(const FaceLink& fl) {
    return fl.components.size() == 1 && fl.components[0].multiplicity == 1;
}

const FaceLink& face_link(const Analysis& a, int face) { return a.links.faces.at(face - 1); }

// condition A (zone k > 1) or B (zone k < 1)
TriValue projection_condition(const Analysis& a, bool upper) {
    if (!a.links_ok()) return TriValue::unknown;
    std::vector<int> zone;
    for (int i : a.I_f) {
        Rational k = a.k(i);
        if (upper ? k > 1 : k < 1) zone.push_back(i);
    }
    double step = kTwoPi / 1024;
    for (std::size_t x = 0; x < zone.size(); ++x)
        for (std::size_t y = x + 1; y < zone.size(); ++y)
            for (const auto& I : face_link(a, zone[x]).components)
                for (const auto& J : face_link(a, zone[y]).components) {
                    if (!I.proj.intersects(J.proj, kAngleTol)) continue;
                    if (!interior_meets(I.proj, J.proj, step) && !interior_meets(J.proj, I.proj, step))
                        return TriValue::no;
                }
    return TriValue::yes;
}

// condition C (zone k > 1, i_m) or D (zone k < 1, i_M)
TriValue covering_condition(const Analysis& a, bool upper) {
    if (!a.links_ok()) return TriValue::unknown;
    std::vector<int> zone;
    for (int i : a.I_f) {
        Rational k = a.k(i);
        if (upper ? k > 1 : k < 1) zone.push_back(i);
    }
    if (zone.empty()) return TriValue::yes;
    bool covered = false;
    for (int i : zone)
        for (const auto& c : face_link(a, i).components) covered = covered || c.proj.full;
    if (!covered) return TriValue::no;
    int extreme = upper ? a.I_f.front() : a.I_f.back();
    return face_is_one_braid(face_link(a, extreme)) ? TriValue::no : TriValue::yes;
}

ContactData contact_data(const Analysis& a) {
    ContactData cd;
    cd.N = static_cast<int>(a.inn.p_inn.size());
    std::set<Rational> kappas, nonunit;
    for (int i : a.I_f) {
        Rational k = a.k(i);
        kappas.insert(k >= 1 ? k : Rational(1) / k);
        if (k != 1) nonunit.insert(k);
    }
    for (auto it = kappas.rbegin(); it != kappas.rend(); ++it) {
        ContactEntry e;
        e.kappa = *it;
        e.m = (nonunit.count(*it) && nonunit.count(Rational(1) / *it)) ? 2 : 1;
        cd.C.push_back(e);
    }
    return cd;
}

Json tangent_cone(const Analysis& a) {
    Json j;
    if (!a.radial.empty()) {
        const SemiRadial& s = a.radial.front();
        Rational k = s.P.k();
        RadialType t = s.type();
        bool uh = is_u_semiholomorphic(s.principal), vh = is_v_semiholomorphic(s.principal);
        j["basis"] = "semi-radial";
        if (t == RadialType::II) {
            j["kind"] = "V(f_P)";
            j["principal"] = s.principal.str();
        } else if (t == RadialType::I) {
            // the cone is the set of directions over the face-one link projection
            bool covered = false;
            if (a.links_ok() && !a.links.faces.empty())
                for (const auto& c : a.links.faces.front().components) covered = covered || c.proj.full;
            if (k > 1) j["kind"] = (uh || !s.v_convenient || covered) ? "u=0" : "subset-of-u=0";
            else j["kind"] = (vh || !s.u_convenient || covered) ? "v=0" : "subset-of-v=0";
        } else {
            if (k > 1) j["kind"] = (uh || vh || !s.v_convenient) ? "uv=0" : "v=0-and-subset-of-u=0";
            else j["kind"] = (uh || vh || !s.u_convenient) ? "uv=0" : "u=0-and-subset-of-v=0";
        }
        return j;
    }
    j["basis"] = "components";
    Json comps = Json::array();
    for (const auto& fl : a.links.faces)
        for (std::size_t i = 0; i < fl.components.size(); ++i) {
            Json c;
            c["ref"] = std::to_string(fl.face) + ":" + std::to_string(i);
            c["cone"] = component_cone(fl.components[i], a.k(fl.face), grid_step(a));
            comps.push_back(c);
        }
    j["components"] = comps;
    return j;
}

// every positive-gamma part of the rescaled f vanishes along the component
bool face_exact(const Analysis& a, int face, const LinkComponent& c) {
    SliceFunction s = rescale(a.f, a.inn.p_inn.at(face - 1), c.side);
    std::set<Rational> gammas;
    double scale = 0;
    for (const auto& t : s.terms) {
        scale += std::abs(t.coeff.to_complex());
        if (t.gamma > 0) gammas.insert(t.gamma);
    }
    for (const Rational& g : gammas) {
        std::vector<SliceTerm> part;
        for (const auto& t : s.terms)
            if (t.gamma == g) part.push_back(t);
        SliceFunction sub;
        sub.terms = part;
        std::size_t stride = std::max<std::size_t>(1, c.samples.size() / 64);
        for (std::size_t i = 0; i < c.samples.size(); i += stride) {
            auto [x, th] = c.samples[i];
            double mag = std::max(1.0, std::pow(std::abs(x), 8));
            if (std::abs(sub.eval(x, 1.0, th)) > 1e-8 * scale * mag) return false;
        }
    }
    return true;
}

std::string rat(const Rational& q) { return to_string(q); }

}  // namespace

bool operator==(const ContactData& a, const ContactData& b) {
    if (a.N != b.N || a.C.size() != b.C.size()) return false;
    for (std::size_t i = 0; i < a.C.size(); ++i)
        if (a.C[i].kappa != b.C[i].kappa || a.C[i].m != b.C[i].m) return false;
    return true;
}

Json ContactData::to_json() const {
    Json j;
    j["N"] = N;
    Json c = Json::array();
    for (const auto& e : C) c.push_back(Json::array({rat(e.kappa), e.m}));
    j["C"] = c;
    return j;
}

bool Analysis::gamma_true() const {
    return links_ok() && static_cast<int>(I_f.size()) == static_cast<int>(inn.p_inn.size());
}

int Analysis::component_count() const {
    int n = 0;
    for (const auto& fl : links.faces) n += static_cast<int>(fl.components.size());
    return n;
}

Analysis analyze(const MixedPolynomial& f, const AnalysisOptions& opt, const std::string& input) {
    Analysis a;
    a.input = input.empty() ? f.str() : input;
    a.f = f;
    a.gamma = newton_boundary(f);
    a.inn = gamma_inn(f, opt.nondegen);
    if (!a.inn.certified) a.flags.push_back("gamma-inn-heuristic");
    if (a.inn.ind != TriValue::yes) a.flags.push_back(std::string("IND-") + to_string(a.inn.ind));
    a.radial = radial_decompose(f, a.inn, opt.nondegen);
    if (a.radial.size() > 1) a.flags.push_back("several-semi-radial-decompositions");
    for (const auto& s : a.radial)
        if (s.isolated == TriValue::unknown) a.flags.push_back("semi-radial-isolation-unknown");
    a.nice = is_nice(f, a.inn, opt.nondegen);
    if (!a.nice.yes()) a.flags.push_back(std::string("nice-") + to_string(a.nice.value));
    a.links = compute_links(f, a.inn, opt.links);
    if (!a.links_ok()) a.flags.push_back("links-failed");
    a.I_f = a.links.nonempty();
    a.linkClass = classify_link(a.links, a.inn, kTwoPi / opt.links.grid);
    a.A = projection_condition(a, true);
    a.B = projection_condition(a, false);
    a.C = covering_condition(a, true);
    a.D = covering_condition(a, false);
    a.contact = contact_data(a);
    a.cone = tangent_cone(a);
    return a;
}

Json Analysis::to_json(bool with_samples) const {
    Json j;
    j["input"] = input;
    j["canonical"] = f.str();
    Json s = Json::array();
    for (auto [x, y] : support(f)) s.push_back(Json::array({x, y}));
    j["support"] = s;
    j["newtonBoundary"] = gamma.to_json();
    j["gammaInn"] = inn.to_json();
    Json r = Json::array();
    for (const auto& x : radial) {
        Json e;
        e["P"] = Json::array({x.P.p1, x.P.p2});
        e["d"] = x.d;
        e["k"] = rat(x.P.k());
        e["type"] = to_string(x.type());
        e["principal"] = x.principal.str();
        e["remainder"] = x.remainder.str();
        e["isolated"] = to_string(x.isolated);
        e["obstructionLocus"] = to_string(obstruction_locus(x.principal, x.P));
        r.push_back(e);
    }
    j["semiRadial"] = r;
    j["nice"] = to_string(nice.value);
    Json ks = Json::array();
    for (const auto& P : inn.p_inn) ks.push_back(rat(P.k()));
    j["slopes"] = ks;
    Json ls = Json::array();
    for (const auto& fl : links.faces) ls.push_back(fl.to_json(with_samples));
    j["links"] = ls;
    j["I_f"] = I_f;
    Json zones;
    Json gt = Json::array(), eq = Json::array(), lt = Json::array();
    for (int i : I_f) {
        Rational k = this->k(i);
        (k > 1 ? gt : k == 1 ? eq : lt).push_back(i);
    }
    zones["k>1"] = gt;
    zones["k=1"] = eq;
    zones["k<1"] = lt;
    j["zones"] = zones;
    Json lc;
    lc["kind"] = to_string(linkClass.kind);
    if (!linkClass.braidAxis.empty()) lc["braidAxis"] = linkClass.braidAxis;
    if (!linkClass.note.empty()) lc["note"] = linkClass.note;
    lc["components"] = component_count();
    j["linkClass"] = lc;
    Json cond;
    cond["A"] = to_string(A);
    cond["B"] = to_string(B);
    cond["C"] = to_string(C);
    cond["D"] = to_string(D);
    j["conditions"] = cond;
    j["gammaTrue"] = gamma_true();
    j["contactData"] = contact.to_json();
    j["tangentCone"] = cone;
    j["flags"] = flags;
    return j;
}

ComponentRef parse_component_ref(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("component reference must be face:index");
    ComponentRef r;
    r.face = std::stoi(s.substr(0, colon));
    r.index = std::stoi(s.substr(colon + 1));
    return r;
}

const LinkComponent& component(const Analysis& a, const ComponentRef& r) {
    if (r.face < 1 || r.face > static_cast<int>(a.links.faces.size())) throw std::out_of_range("no such face");
    const auto& comps = a.links.faces[r.face - 1].components;
    if (r.index < 0 || r.index >= static_cast<int>(comps.size())) throw std::out_of_range("no such component");
    return comps[r.index];
}

Json ContactVerdict::to_json() const {
    Json j;
    switch (kind) {
        case exact: j["kind"] = "exact"; j["value"] = rat(value); break;
        case one: j["kind"] = "one"; j["value"] = rat(Rational(1)); break;
        case zones_distinct_one: j["kind"] = "zones-distinct-one"; j["value"] = rat(Rational(1)); break;
        case interval:
            j["kind"] = "interval";
            j["lo"] = rat(lo);
            j["hi"] = rat(hi);
            break;
        default: j["kind"] = "unknown";
    }
    j["basis"] = basis;
    return j;
}

ContactVerdict contact_order(const Analysis& a, const ComponentRef& r1, const ComponentRef& r2) {
    const LinkComponent& c1 = component(a, r1);
    const LinkComponent& c2 = component(a, r2);
    if (r1.face == r2.face && r1.index == r2.index) throw std::invalid_argument("components must differ");
    ContactVerdict v;
    Rational k1 = a.k(r1.face), k2 = a.k(r2.face);
    auto zone = [](const Rational& k) { return k > 1 ? 1 : k == 1 ? 0 : -1; };
    if (zone(k1) != zone(k2)) {
        v.kind = ContactVerdict::zones_distinct_one;
        v.basis = "components in different slope zones";
        return v;
    }
    if (zone(k1) == 0) {
        v.kind = ContactVerdict::one;
        v.basis = "components of the slope-one face";
        return v;
    }
    bool upper = zone(k1) == 1;
    int i = std::min(r1.face, r2.face), j = std::max(r1.face, r2.face);
    Rational bound = upper ? a.k(j) : Rational(1) / a.k(i);
    if (!c1.proj.intersects(c2.proj, kAngleTol)) {
        v.kind = ContactVerdict::one;
        v.basis = upper ? "disjoint proj_2" : "disjoint proj_1";
        return v;
    }
    TriValue cond = upper ? a.A : a.B;
    if (i == j || cond == TriValue::yes) {
        v.kind = ContactVerdict::exact;
        v.value = bound;
        v.basis = i == j ? "same face" : (upper ? "condition A" : "condition B");
        return v;
    }
    if (face_exact(a, r1.face, c1) && face_exact(a, r2.face, c2)) {
        v.kind = ContactVerdict::exact;
        v.value = bound;
        v.basis = "common-angle arcs of exactly weighted-homogeneous components";
        return v;
    }
    v.kind = ContactVerdict::interval;
    v.lo = 1;
    v.hi = bound;
    v.basis = upper ? "condition A fails" : "condition B fails";
    return v;
}

// ---------------------------------------------------------------- verdicts

const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::ambient_equivalent: return "ambient-equivalent";
        case VerdictKind::topological_at_least: return "topologically-equivalent-at-least";
        case VerdictKind::not_equivalent: return "not-bilipschitz-equivalent";
        default: return "inconclusive";
    }
}

Json Verdict::to_json() const {
    Json j;
    j["verdict"] = to_string(kind);
    Json cs = Json::array();
    for (const auto& c : certificates) {
        Json x;
        x["theorem"] = c.theorem;
        x["hypotheses"] = c.hypotheses;
        if (!c.witness.is_null()) x["witness"] = c.witness;
        cs.push_back(x);
    }
    j["certificates"] = cs;
    j["warnings"] = warnings;
    return j;
}

namespace {

bool simple_class(LinkKind k) {
    return k == LinkKind::empty || k == LinkKind::metric_one_braid || k == LinkKind::non_tangent_hopf;
}

bool is_type_two(const Analysis& a) { return !a.radial.empty() && a.radial.front().type() == RadialType::II; }

Json summary(const Analysis& a) {
    Json j;
    j["canonical"] = a.f.str();
    j["linkClass"] = to_string(a.linkClass.kind);
    j["contactData"] = a.contact.to_json();
    if (!a.radial.empty()) {
        j["type"] = to_string(a.radial.front().type());
        j["k"] = rat(a.radial.front().P.k());
    }
    return j;
}

}  // namespace

Verdict compare(const Analysis& a, const Analysis& b, const std::optional<std::string>& assertion) {
    Verdict v;
    auto cert = [&](std::string thm, std::vector<std::string> hyp) {
        Certificate c;
        c.theorem = std::move(thm);
        c.hypotheses = std::move(hyp);
        c.witness = Json{{"f", summary(a)}, {"g", summary(b)}};
        v.certificates.push_back(std::move(c));
    };
    if (a.f == b.f) {
        v.kind = VerdictKind::ambient_equivalent;
        cert("identity", {"equal canonical polynomials"});
        return v;
    }
    bool links_known = a.links_ok() && b.links_ok() && a.linkClass.kind != LinkKind::unknown &&
                       b.linkClass.kind != LinkKind::unknown;
    bool both_nice = a.ind_nice() && b.ind_nice();
    if (both_nice && links_known && a.linkClass.kind == b.linkClass.kind && simple_class(a.linkClass.kind)) {
        v.kind = VerdictKind::ambient_equivalent;
        cert("one-braid-rigidity", {"both IND and Gamma_inn-nice", std::string("both links ") +
                                                                    to_string(a.linkClass.kind)});
        return v;
    }
    if (assertion && links_known) {
        auto try_side = [&](const Analysis& x, const Analysis& y) {
            if (!x.ind_nice() || !is_type_two(y)) return false;
            if (*assertion == "trivial-knot" && x.linkClass.kind == LinkKind::metric_one_braid) {
                cert("trivial-knot-type-II", {"one side IND, Gamma_inn-nice with metric 1-braid link",
                                              "other side semi-radial Type II", "asserted: link is a trivial knot"});
                return true;
            }
            if (*assertion == "hopf" && x.linkClass.kind == LinkKind::non_tangent_hopf) {
                cert("hopf-type-II", {"one side IND, Gamma_inn-nice with non-tangent Hopf link",
                                      "other side semi-radial Type II", "asserted: link is a Hopf link"});
                return true;
            }
            return false;
        };
        if (try_side(a, b) || try_side(b, a)) {
            v.kind = VerdictKind::ambient_equivalent;
            v.warnings.push_back("relies on the asserted isotopy type of the link");
            return v;
        }
    }
    // semi-radial type invariance
    if (!a.radial.empty() && !b.radial.empty() && links_known && a.linkClass.kind != LinkKind::empty &&
        b.linkClass.kind != LinkKind::empty && a.linkClass.kind != LinkKind::metric_one_braid &&
        b.linkClass.kind != LinkKind::metric_one_braid) {
        const SemiRadial& sa = a.radial.front();
        const SemiRadial& sb = b.radial.front();
        RadialType ta = sa.type(), tb = sb.type();
        Rational ka = sa.P.k(), kb = sb.P.k();
        bool k_match = ka == kb || ka == Rational(1) / kb;
        std::vector<std::string> hyp{"both semi-radial", "links neither empty nor metric 1-braid"};
        if ((ta == RadialType::I) != (tb == RadialType::I) ||
            (ta == RadialType::I && tb == RadialType::I && !k_match)) {
            v.kind = VerdictKind::not_equivalent;
            hyp.push_back(std::string("types ") + to_string(ta) + " and " + to_string(tb) + ", slopes " + rat(ka) +
                          " and " + rat(kb));
            cert("semi-radial-type-invariance", hyp);
            return v;
        }
        if (a.linkClass.kind != LinkKind::non_tangent_hopf && b.linkClass.kind != LinkKind::non_tangent_hopf) {
            hyp.push_back("links not non-tangent Hopf");
            if (ta != tb || (ta == RadialType::III && !k_match)) {
                v.kind = VerdictKind::not_equivalent;
                hyp.push_back(std::string("types ") + to_string(ta) + " and " + to_string(tb) + ", slopes " +
                              rat(ka) + " and " + rat(kb));
                cert("semi-radial-type-invariance", hyp);
                return v;
            }
        }
    }
    // contact data invariance
    if (both_nice && links_known && a.C == TriValue::yes && a.D == TriValue::yes && b.C == TriValue::yes &&
        b.D == TriValue::yes) {
        std::vector<std::string> hyp{"both IND and Gamma_inn-nice", "conditions C and D hold on both sides"};
        if (a.gamma_true() && b.gamma_true()) {
            if (!(a.contact == b.contact)) {
                v.kind = VerdictKind::not_equivalent;
                hyp.push_back("both Gamma_inn-true");
                hyp.push_back("NC data differ");
                cert("NC-invariance", hyp);
                return v;
            }
        } else {
            auto ca = a.contact, cb = b.contact;
            ca.N = cb.N = 0;
            if (!(ca == cb)) {
                v.kind = VerdictKind::not_equivalent;
                hyp.push_back("contact data sets differ");
                cert("contact-data-invariance", hyp);
                return v;
            }
        }
        v.warnings.push_back("contact data agree; no obstruction found");
    }
    // bi-Lipschitz V-equivalence is a homeomorphism of germs, so the number of link components is preserved
    if (links_known && a.component_count() != b.component_count()) {
        v.kind = VerdictKind::not_equivalent;
        cert("link-component-count", {"links computed on every face", "component counts differ: " +
                                                                           std::to_string(a.component_count()) +
                                                                           " vs " +
                                                                           std::to_string(b.component_count())});
        return v;
    }
    v.kind = VerdictKind::inconclusive;
    if (!both_nice) v.warnings.push_back("IND or Gamma_inn-niceness not certified on both sides");
    return v;
}

Verdict family_check(const Analysis& a, const MixedPolynomial& theta) {
    Verdict v;
    if (theta.has_constant_term()) throw std::invalid_argument("deformation direction must vanish at the origin");
    auto dtheta = [&](const Weight& P) -> std::optional<long long> {
        if (theta.is_zero()) return std::nullopt;  // +infinity
        return min_rdeg(theta, P);
    };
    auto cert = [&](std::string thm, std::vector<std::string> hyp) {
        Certificate c;
        c.theorem = std::move(thm);
        c.hypotheses = std::move(hyp);
        v.certificates.push_back(std::move(c));
    };
    if (theta.is_zero()) {
        v.kind = VerdictKind::ambient_equivalent;
        cert("constant-family", {"deformation direction is zero"});
        return v;
    }
    if (!a.radial.empty() && a.radial.front().isolated == TriValue::yes) {
        const SemiRadial& s = a.radial.front();
        long long dt = *dtheta(s.P);
        if (dt > s.d) {
            v.kind = VerdictKind::ambient_equivalent;
            cert("semi-radial-triviality", {"f semi-radial of type (P;d) with P=(" + std::to_string(s.P.p1) + "," +
                                                std::to_string(s.P.p2) + "), d=" + std::to_string(s.d),
                                            "d(P;theta)=" + std::to_string(dt) + " > d", "all parameter values"});
            return v;
        }
        if (dt == s.d) {
            v.kind = VerdictKind::ambient_equivalent;
            cert("semi-radial-triviality-local",
                 {"f semi-radial of type (P;d), d=" + std::to_string(s.d), "d(P;theta) = d"});
            v.warnings.push_back("holds on a neighbourhood of the zero parameter only");
            return v;
        }
    }
    bool degrees = true;
    std::vector<std::string> deg_hyp;
    for (const auto& P : a.inn.p_inn) {
        long long df = min_rdeg(a.f, P), dt = *dtheta(P);
        deg_hyp.push_back("P=(" + std::to_string(P.p1) + "," + std::to_string(P.p2) + "): d(P;theta)=" +
                          std::to_string(dt) + (dt >= df ? " >= " : " < ") + "d(P;f)=" + std::to_string(df));
        degrees = degrees && dt >= df;
    }
    if (degrees && a.ind_nice() && a.links_ok() && simple_class(a.linkClass.kind)) {
        v.kind = VerdictKind::ambient_equivalent;
        deg_hyp.insert(deg_hyp.begin(), std::string("IND, Gamma_inn-nice, link ") + to_string(a.linkClass.kind));
        cert("simple-link-triviality", deg_hyp);
        return v;
    }
    if (degrees && a.inn.ind == TriValue::yes) {
        v.kind = VerdictKind::topological_at_least;
        deg_hyp.insert(deg_hyp.begin(), "IND");
        cert("link-constancy", deg_hyp);
        if (a.A != TriValue::yes)
            v.warnings.push_back(std::string("condition A is ") + to_string(a.A) +
                                 ": contact between upper-zone components may change along the family");
        if (a.B != TriValue::yes)
            v.warnings.push_back(std::string("condition B is ") + to_string(a.B) +
                                 ": contact between lower-zone components may change along the family");
        return v;
    }
    v.kind = VerdictKind::inconclusive;
    if (!degrees) v.warnings.push_back("deformation lowers a face degree");
    return v;
}

}  // namespace mixedlip
