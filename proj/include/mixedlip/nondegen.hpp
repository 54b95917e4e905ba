#pragma once

#include "mixedlip/poly.hpp"

#include <optional>
#include <string>

namespace mixedlip {

enum class TriValue { yes, no, unknown };
enum class TriMethod { holomorphic_exact, semiholomorphic, torus_trig, numeric_grid };

const char* to_string(TriValue v);
const char* to_string(TriMethod m);

struct Witness {
    cd u, v;
    double residual = 0;
};

struct Tri {
    TriValue value = TriValue::unknown;
    TriMethod method = TriMethod::numeric_grid;
    std::optional<Witness> witness;

    bool yes() const { return value == TriValue::yes; }
    bool no() const { return value == TriValue::no; }
    bool unknown() const { return value == TriValue::unknown; }
};

// conjunction: any no wins, then any unknown
TriValue tri_and(TriValue a, TriValue b);

// I = {1}: points (u, 0), u != 0.  I = {2}: (0, v).  I = {1,2}: the torus (C*)^2.
enum Stratum : int { stratum_u_axis = 1, stratum_v_axis = 2, stratum_torus = 3 };

struct NondegenOptions {
    double witness_tol = 1e-8;
    long long cell_cap = 1LL << 20;
};

// Is Sing(V(fD)) disjoint from the stratum C*^I?  fD must be radial for some weight.
Tri face_sing_empty(const MixedPolynomial& fD, int I, const NondegenOptions& opt = {});

// Sing(V(f)) contained in {0}, checked stratum by stratum (f radial)
Tri sing_isolated(const MixedPolynomial& f, const NondegenOptions& opt = {});

// V(fD) does not meet the torus, for a face with a single support point
Tri torus_zero_free(const MixedPolynomial& vertexFace, const NondegenOptions& opt = {});

struct GammaInnResult;
// nice = no inner vertex face of Gamma_inn vanishes on the torus
Tri is_nice(const MixedPolynomial& f, const GammaInnResult& g, const NondegenOptions& opt = {});

enum class Locus { origin, u_zero, v_zero, unknown };
const char* to_string(Locus l);

// where the Milnor-radius obstruction can sit for a radial f of weight P; throws if f is not radial for P
Locus obstruction_locus(const MixedPolynomial& fRadial, const Weight& P);

// strip the largest monomial u^a ubar^b v^c vbar^d dividing f
MixedPolynomial strip_monomial_factor(const MixedPolynomial& f, Exps* removed = nullptr);

}  // namespace mixedlip
