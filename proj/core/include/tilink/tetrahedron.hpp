#pragma once

#include <array>
#include <string>

namespace tilink {

// Dihedral angles of a generalized hyperbolic tetrahedron.  Opposite edge
// pairs are (A,D), (B,E), (C,F); each angle lies in [0, pi].
//
// Vertex/edge incidence: vertex v1 meets edges {D,B,F}, v2 meets {D,C,E},
// v3 meets {A,B,C}, v4 meets {A,E,F}.  Equivalently, the edge joining
// v1v2 is D, v3v4 is A, v1v3 is B, v2v4 is E, v1v4 is F, v2v3 is C.
struct AngleVector {
  double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;
};

enum class VertexKind { Finite, Ideal, UltraIdeal };

const char* to_string(VertexKind k);

using Gram = std::array<std::array<double, 4>, 4>;

// 4x4 Gram matrix in the vertex order v1..v4: unit diagonal, entry (i,j)
// equal to -cos of the dihedral angle on the edge joining vi and vj.
Gram gram_matrix(const AngleVector& t);

// Determinant of gram_matrix(t), expanded directly.
double gram_determinant(const AngleVector& t);

// Sum of the three dihedral angles incident to each vertex, in the
// order v1..v4.
std::array<double, 4> vertex_angle_sums(const AngleVector& t);

// Classifies each vertex by its incident angle sum s:
// s > pi + tol finite, |s - pi| <= tol ideal, s < pi - tol ultra-ideal
// (an ultra-ideal vertex is truncated by its polar plane).
std::array<VertexKind, 4> classify_vertices(const AngleVector& t,
                                            double tol = 1e-9);

// Hyperbolic volume of the generalized tetrahedron with the given dihedral
// angles, ultra-ideal vertices truncated.  Evaluated by the closed form of
// Ushijima: with a = e^{iA}, ..., f = e^{iF} and
//   U(z) = (Li2(z) + Li2(abdez) + Li2(acdfz) + Li2(bcefz) - Li2(-abcz)
//           - Li2(-aefz) - Li2(-bdfz) - Li2(-cdez)) / 2
// the volume is |Im(U(z1) - U(z2))|/2 at the two roots z1, z2 of the
// quadratic that U' defines.  Throws NumericalError when the root
// denominator degenerates (flat configurations).
double volume(const AngleVector& t);

// Volume of the ideal tetrahedron with dihedral angles (t1, t2, t3) at
// each vertex, via the Lobachevsky function: L(t1) + L(t2) + L(t3).
// Requires ti > 0 and t1 + t2 + t3 = pi within 1e-9.  Serves as an
// independent cross-check of volume() on all-ideal inputs.
double ideal_tetrahedron_volume(double t1, double t2, double t3);

// Norm of the volume gradient along the constraint manifold
// { B+F+D = pi, C+E+D = pi, A fixed } at the given angles, estimated by
// central differences with step h.  Near a critical point this is small.
double criticality_residual_at(const AngleVector& t, double h = 1e-5);

// Same residual evaluated at maximal_wedge_angles(a) (see bipyramid.hpp);
// those wedges are conjecturally the maximizers, so the residual should
// vanish to finite-difference accuracy for every a in [0, pi).
double criticality_residual(double a, double h = 1e-5);

}  // namespace tilink
