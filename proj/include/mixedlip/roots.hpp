#pragma once

#include "mixedlip/rational.hpp"

#include <complex>
#include <vector>

namespace mixedlip {

// roots of sum coeffs[j] x^j (leading coefficient nonzero) by Aberth iteration;
// `guess` seeds the iteration when it has the right size
std::vector<std::complex<double>> aberth_roots(const std::vector<std::complex<double>>& coeffs,
                                               const std::vector<std::complex<double>>& guess = {},
                                               int max_iter = 500);

// dense univariate polynomial over Q(i), index = power
using GaussPoly = std::vector<GaussRat>;

void trim(GaussPoly& p);
GaussPoly derivative(const GaussPoly& p);
GaussPoly poly_gcd(GaussPoly a, GaussPoly b);  // monic
std::vector<std::complex<double>> to_complex(const GaussPoly& p);

}  // namespace mixedlip
