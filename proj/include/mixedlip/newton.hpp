#pragma once

#include "mixedlip/nondegen.hpp"
#include "mixedlip/poly.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mixedlip {

using Json = nlohmann::ordered_json;

struct RPoint {
    Rational x, y;
    friend bool operator==(const RPoint& a, const RPoint& b) { return a.x == b.x && a.y == b.y; }
};

struct DiagramEdge {
    int from = 0, to = 0;  // vertex indices
    Weight p;
    Rational d;
};

struct Diagram {
    std::vector<RPoint> vertices;    // decreasing x
    std::vector<DiagramEdge> edges;  // P1..PN with k decreasing; P1 is next to the y-axis
    bool u_convenient = false;       // meets the x-axis
    bool v_convenient = false;       // meets the y-axis

    std::vector<Weight> weights() const;
    // the point lies on or above every edge line (inside the closed region above the diagram)
    bool on_or_above(const RPoint& q) const;
    Json to_json() const;
};

// (deg_u, deg_v) of each monomial, sorted and unique
std::vector<std::pair<long long, long long>> support(const MixedPolynomial& f);

// lower-left boundary of the convex hull of pts + R^2_{>=0}
Diagram newton_boundary(const std::vector<RPoint>& pts);
Diagram newton_boundary(const MixedPolynomial& f);

// diagram through the given points (increasing x); collinear interior points are dropped
Diagram chain_diagram(std::vector<RPoint> chain);

struct FaceFunction {
    MixedPolynomial poly;
    long long d = 0;
};
FaceFunction face_function(const MixedPolynomial& f, const Weight& P);
MixedPolynomial vertex_function(const MixedPolynomial& f, long long x, long long y);

struct IndFaceReport {
    std::string kind;  // "edge" or "vertex"
    std::optional<Weight> weight;
    std::optional<std::pair<long long, long long>> point;
    int stratum = stratum_torus;
    Tri result;
};

struct GammaInnResult {
    Diagram diagram;
    std::vector<Weight> p_inn;
    bool found = false;      // some candidate passed
    bool certified = false;  // chosen candidate has no unknown face tests and is the unique maximum
    TriValue ind = TriValue::unknown;
    std::vector<IndFaceReport> report;
    std::vector<Diagram> alternatives;
    int candidates = 0;
    Json to_json() const;
};

GammaInnResult gamma_inn(const MixedPolynomial& f, const NondegenOptions& opt = {});

enum class RadialType { I, II, III };
const char* to_string(RadialType t);

struct SemiRadial {
    Weight P;
    long long d = 0;
    MixedPolynomial principal, remainder;
    TriValue isolated = TriValue::unknown;  // Sing(V(principal)) = {0}
    bool u_convenient = false, v_convenient = false;
    RadialType type() const;
};

// semi-radial decompositions along the weights of Gamma_inn (candidates whose principal part has an isolated
// singularity, or could not be excluded)
std::vector<SemiRadial> radial_decompose(const MixedPolynomial& f, const GammaInnResult& g,
                                         const NondegenOptions& opt = {});

std::string newton_svg(const MixedPolynomial& f, const Diagram& gamma, const GammaInnResult& inn);

}  // namespace mixedlip
