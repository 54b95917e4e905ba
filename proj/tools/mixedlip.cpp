#include "mixedlip/arcs.hpp"
#include "mixedlip/invariants.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace mixedlip;

namespace {

AnalysisOptions options_from_env() {
    AnalysisOptions o;
    if (const char* t = std::getenv("MIXEDLIP_THREADS")) o.links.threads = std::max(1, std::atoi(t));
    return o;
}

Analysis analyze_text(const std::string& text, const AnalysisOptions& o) { return analyze(parse(text), o, text); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int verdict_exit(VerdictKind k) {
    switch (k) {
        case VerdictKind::ambient_equivalent: return 0;
        case VerdictKind::not_equivalent: return 3;
        default: return 4;
    }
}

bool write_file(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return true;
    }
    std::ofstream out(path);
    out << body;
    return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bi-Lipschitz invariants of mixed polynomial surface germs"};
    app.require_subcommand(1);

    std::string poly, poly2, theta, assertion, what = "newton", out, links_out, csv;
    int face = 1, pairs = 32, grid = 1024;
    std::string radii;
    app.add_option("--grid", grid, "angle samples per circle")->check(CLI::Range(64, 1 << 16));
    bool samples = false;

    auto* an = app.add_subcommand("analyze", "full invariant report");
    an->add_option("poly", poly)->required();
    an->add_flag("--samples", samples, "include link samples");
    an->add_option("--links-json", links_out, "write link data to a file");

    auto* cmp = app.add_subcommand("compare", "decide equivalence of two germs");
    cmp->add_option("f", poly)->required();
    cmp->add_option("g", poly2)->required();
    cmp->add_option("--assert-link-type", assertion, "isotopy type of the link supplied by the user")
        ->check(CLI::IsMember({"trivial-knot", "hopf"}));

    auto* fam = app.add_subcommand("family", "triviality of f + t*theta");
    fam->add_option("f", poly)->required();
    fam->add_option("theta", theta)->required();

    auto* svg = app.add_subcommand("svg", "newton polygon or braid picture");
    svg->add_option("poly", poly)->required();
    svg->add_option("--what", what)->check(CLI::IsMember({"newton", "braid"}));
    svg->add_option("--face", face);
    svg->add_option("-o,--out", out);

    auto* orc = app.add_subcommand("oracle", "numeric contact estimate between two link components");
    orc->add_option("poly", poly)->required();
    std::vector<std::string> pair;
    orc->add_option("--pair", pair, "two component refs face:index")->expected(2)->required();
    orc->add_option("--pairs", pairs);
    orc->add_option("--radii", radii, "continuation radii as max:min:steps");
    orc->add_option("--csv", csv, "write (|a|, distance) series");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    AnalysisOptions opt = options_from_env();
    opt.links.grid = grid;
    try {
        if (*an) {
            Analysis a = analyze_text(poly, opt);
            Json j;
            j["schema"] = "mixedlip.analysis/1";
            Json body = a.to_json(samples);
            for (auto& [k, v] : body.items()) j[k] = v;
            if (!links_out.empty()) {
                Json l = Json::array();
                for (const auto& fl : a.links.faces) l.push_back(fl.to_json(true));
                if (!write_file(links_out, l.dump(2) + "\n")) throw std::runtime_error("cannot write " + links_out);
            }
            emit(j);
            return 0;
        }
        if (*cmp) {
            Analysis a = analyze_text(poly, opt), b = analyze_text(poly2, opt);
            std::optional<std::string> as;
            if (!assertion.empty()) as = assertion;
            Verdict v = compare(a, b, as);
            Json j;
            j["schema"] = "mixedlip.verdict/1";
            Json body = v.to_json();
            for (auto& [k, x] : body.items()) j[k] = x;
            emit(j);
            return verdict_exit(v.kind);
        }
        if (*fam) {
            Analysis a = analyze_text(poly, opt);
            Verdict v = family_check(a, parse_expression(theta));
            Json j;
            j["schema"] = "mixedlip.verdict/1";
            Json body = v.to_json();
            for (auto& [k, x] : body.items()) j[k] = x;
            emit(j);
            return verdict_exit(v.kind);
        }
        if (*svg) {
            Analysis a = analyze_text(poly, opt);
            std::string body;
            if (what == "newton") body = newton_svg(a.f, a.gamma, a.inn);
            else {
                if (face < 1 || face > static_cast<int>(a.links.faces.size())) throw std::out_of_range("no such face");
                body = braid_svg(a.links.faces[face - 1]);
            }
            if (!write_file(out, body)) throw std::runtime_error("cannot write " + out);
            return 0;
        }
        if (*orc) {
            Analysis a = analyze_text(poly, opt);
            ComponentRef r1 = parse_component_ref(pair[0]), r2 = parse_component_ref(pair[1]);
            RadiusSchedule sched;
            if (!radii.empty()) {
                double hi = 0, lo = 0;
                int n = 0;
                if (std::sscanf(radii.c_str(), "%lf:%lf:%d", &hi, &lo, &n) != 3 || !(hi > lo && lo > 0) || n < 12)
                    throw std::invalid_argument("--radii expects max:min:steps with max > min > 0 and steps >= 12");
                sched = {hi, lo, n};
            }
            ContactEstimate e = estimate_contact(a, r1, r2, pairs, sched);
            Json j;
            j["schema"] = "mixedlip.oracle/1";
            j["pair"] = Json::array({pair[0], pair[1]});
            Json body = e.to_json();
            for (auto& [k, x] : body.items()) j[k] = x;
            j["contactOrder"] = contact_order(a, r1, r2).to_json();
            if (!csv.empty()) {
                std::string body = "norm,distance\n";
                for (auto [s, d] : e.best.series) {
                    char line[64];
                    std::snprintf(line, sizeof line, "%.12e,%.12e\n", s, d);
                    body += line;
                }
                if (!write_file(csv, body)) throw std::runtime_error("cannot write " + csv);
            }
            emit(j);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
