#pragma once

#include <complex>

namespace tilink {

// Principal-branch complex dilogarithm Li2(z) = sum_{k>=1} z^k/k^2,
// analytically continued with the branch cut along [1, inf).
// Absolute error is a few ulp for |z| <= 1 and below 1e-12 for |z| <= 10.
std::complex<double> dilog(std::complex<double> z);

// Lobachevsky function L(t) = Im(Li2(e^{2it}))/2.
// Odd, pi-periodic, maximal at pi/6.  The argument is reduced to
// [-pi/2, pi/2] before evaluation, so large inputs stay accurate.
double lobachevsky(double theta);

// Volume of the regular ideal hyperbolic tetrahedron, 3 L(pi/3).
double v_tet();

// Volume of the regular ideal hyperbolic octahedron, 8 L(pi/4).
double v_oct();

}  // namespace tilink
