#pragma once

#include "mixedlip/links.hpp"
#include "mixedlip/newton.hpp"
#include "mixedlip/nondegen.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mixedlip {

struct AnalysisOptions {
    LinkOptions links;
    NondegenOptions nondegen;
};

struct ContactEntry {
    Rational kappa;
    int m = 1;
};

struct ContactData {
    int N = 0;
    std::vector<ContactEntry> C;  // kappa decreasing
    Json to_json() const;
    friend bool operator==(const ContactData& a, const ContactData& b);
};

struct Analysis {
    std::string input;
    MixedPolynomial f;
    Diagram gamma;
    GammaInnResult inn;
    std::vector<SemiRadial> radial;
    Tri nice;
    LinkData links;
    std::vector<int> I_f;
    LinkClass linkClass;
    TriValue A = TriValue::unknown, B = TriValue::unknown, C = TriValue::unknown, D = TriValue::unknown;
    ContactData contact;
    Json cone;
    std::vector<std::string> flags;

    Rational k(int face) const { return inn.p_inn.at(face - 1).k(); }
    bool links_ok() const { return links.failed().empty(); }
    bool gamma_true() const;  // every face has a nonempty link
    bool ind_nice() const { return inn.ind == TriValue::yes && nice.yes(); }
    int component_count() const;
    Json to_json(bool with_samples = false) const;
};

Analysis analyze(const MixedPolynomial& f, const AnalysisOptions& opt = {}, const std::string& input = "");

struct ComponentRef {
    int face = 1;
    int index = 0;
};
ComponentRef parse_component_ref(const std::string& s);  // "face:index"
const LinkComponent& component(const Analysis& a, const ComponentRef& r);

struct ContactVerdict {
    enum Kind { exact, one, interval, zones_distinct_one, unknown } kind = unknown;
    Rational value{1}, lo{1}, hi{1};
    std::string basis;
    Json to_json() const;
};

ContactVerdict contact_order(const Analysis& a, const ComponentRef& c1, const ComponentRef& c2);

enum class VerdictKind { ambient_equivalent, topological_at_least, not_equivalent, inconclusive };
const char* to_string(VerdictKind k);

struct Certificate {
    std::string theorem;
    std::vector<std::string> hypotheses;
    Json witness;
};

struct Verdict {
    VerdictKind kind = VerdictKind::inconclusive;
    std::vector<Certificate> certificates;
    std::vector<std::string> warnings;
    Json to_json() const;
};

// assertion: "trivial-knot" or "hopf", stating the isotopy type of the link of a Type-II semi-radial side
Verdict compare(const Analysis& a, const Analysis& b, const std::optional<std::string>& assertion = std::nullopt);

Verdict family_check(const Analysis& a, const MixedPolynomial& theta);

}  // namespace mixedlip
