#pragma once

#include "mixedlip/invariants.hpp"

#include <limits>
#include <memory>
#include <vector>

namespace mixedlip {

struct RadiusSchedule {
    double r_max = 1e-1;
    double r_min = 1e-4;
    int steps = 40;
    std::vector<double> radii() const;  // decreasing
};

// real half-branch on one component, parametrized by the continuation radius
// u-side: v = r e^{i angle}, u = r^k x; v-side: u = r e^{i angle}, v = r^{1/k} x
struct Arc {
    ComponentRef ref;
    double tau = 0;
    Side side = Side::u;
    Weight P;
    double angle = 0;
    std::vector<double> radii;
    std::vector<cd> xs;  // slice coordinates
    std::vector<std::pair<cd, cd>> points;
    std::vector<double> residuals;  // relative
    std::shared_ptr<const SliceFunction> slice;

    std::size_t size() const { return points.size(); }
};

// tau in [0, 1) selects a sample along the component
Arc sample_arc(const Analysis& a, const ComponentRef& ref, double tau, const RadiusSchedule& sched = {});
Arc sample_arc_at(const Analysis& a, const ComponentRef& ref, std::size_t sample, const RadiusSchedule& sched = {});

struct TordEstimate {
    double q_hat = 0;
    double stderr_ = 0;
    int nPoints = 0;
    bool infinite = false;
    std::vector<std::pair<double, double>> series;  // (|a(r)|, distance)
    Json to_json() const;
};

TordEstimate estimate_tord(const Arc& a, const Arc& b);

struct ContactEstimate {
    TordEstimate best;
    std::string pairing;  // "matched-angle" or "parametric"
    int pairs = 0;
    Json to_json() const;
};

ContactEstimate estimate_contact(const Analysis& a, const ComponentRef& c1, const ComponentRef& c2, int nPairs = 32,
                                 const RadiusSchedule& sched = {});

// isosceles property of contact orders, with slack
bool non_archimedean(double q12, double q13, double q23, double slack = 0.1);

}  // namespace mixedlip
