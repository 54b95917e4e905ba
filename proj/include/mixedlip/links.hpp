#pragma once

#include "mixedlip/newton.hpp"
#include "mixedlip/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mixedlip {

// subset of the circle as a list of arcs [lo, lo + width], lo in [0, 2pi)
struct ArcSet {
    bool full = false;
    std::vector<std::pair<double, double>> arcs;  // (lo, width)

    bool empty() const { return !full && arcs.empty(); }
    bool has_interior(double tol) const;
    bool intersects(const ArcSet& o, double tol) const;
    bool contains(double angle, double tol) const;
    Json to_json() const;
};

struct LinkComponent {
    int face = 0;  // 1-based
    Side side = Side::u;
    bool axis = false;  // the knot {u=0} (u-side) or {v=0} (v-side)
    std::vector<std::pair<cd, double>> samples;  // (slice coordinate, angle)
    int multiplicity = 0;                        // strands over the angle circle
    ArcSet proj;
    double minAbs = 0, maxAbs = 0;
    Json to_json(bool with_samples) const;
};

struct FaceLink {
    int face = 0;
    Weight P;
    Side side = Side::u;
    bool ok = true;
    std::string error;
    std::string method;  // "braid" or "curve"
    int strands = 0;
    std::vector<int> closure;  // braid closure permutation
    std::vector<LinkComponent> components;
    Json to_json(bool with_samples) const;
};

struct LinkOptions {
    int grid = 1024;
    int threads = 1;
};

// which side the face slice is taken on
Side primary_side(const MixedPolynomial& f, const Weight& P);

// link of f_{P_i} in C x C* (u-side) or C* x C (v-side); axis knots follow the face-1 / face-N rule
FaceLink compute_link(const MixedPolynomial& f, const GammaInnResult& g, int face, Side side,
                      const LinkOptions& opt = {});

struct LinkData {
    std::vector<FaceLink> faces;
    std::vector<int> nonempty() const;  // I_f over faces that were computed
    std::vector<int> failed() const;
};

LinkData compute_links(const MixedPolynomial& f, const GammaInnResult& g, const LinkOptions& opt = {});

enum class LinkKind { empty, metric_one_braid, non_tangent_hopf, general, unknown };
const char* to_string(LinkKind k);

struct LinkClass {
    LinkKind kind = LinkKind::unknown;
    std::string braidAxis;  // "L_u" or "L_v" for a metric 1-braid
    std::string note;
};

// cone of a single component given the slope of its face
std::string component_cone(const LinkComponent& c, const Rational& k, double grid_tol);

LinkClass classify_link(const LinkData& links, const GammaInnResult& g, double grid_tol);

std::string braid_svg(const FaceLink& face);

// compact slice solver, exposed for tests: torus zeros of sum c x^a xbar^b e^{i beta angle}
FaceLink solve_slice(const std::vector<SliceTerm>& terms, int face, const Weight& P, Side side,
                     const LinkOptions& opt = {});

}  // namespace mixedlip
