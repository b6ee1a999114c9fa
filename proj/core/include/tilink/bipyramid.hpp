#pragma once

#include <vector>

#include "tilink/tetrahedron.hpp"

namespace tilink {

// A hyperbolic n-gonal bipyramid, possibly with truncated apexes, cut into
// n congruent wedges.  Each wedge is a generalized tetrahedron whose edge
// along the bipyramid axis carries angle A = 2pi/n; alpha is the vertical
// dihedral angle of the parent bipyramid along an equatorial edge, so each
// wedge sees alpha/2 on the four slanted edges and pi - alpha on its own
// equatorial edge.
struct BipyramidReport {
  int n = 0;
  double alpha = 0;          // vertical dihedral angle along equator edges
  VertexKind apex_kind{};    // finite, ideal, or ultra-ideal (truncated)
  double wedge_volume = 0;   // volume of one wedge
  double total_volume = 0;   // n * wedge_volume
};

// Wedge angles (A,B,C,D,E,F) = (a, w, w, Dm, w, w) with
// Dm = arccos((cos a - 1)/2) and w = (pi - Dm)/2.  For fixed A = a these
// are the conjectured volume maximizers among wedges on the constraint
// manifold; the apex vertices come out ultra-ideal for a > 0.
// Requires a in [0, pi].
AngleVector maximal_wedge_angles(double a);

// Wedge angles (2pi/n, alpha/2, alpha/2, pi - alpha, alpha/2, alpha/2)
// of the bipyramid wedge described above.  Requires n >= 2 and
// alpha in (0, pi).
AngleVector tiling_wedge_angles(int n, double alpha);

// Volume of the n-gonal bipyramid with vertical dihedral angle alpha,
// apexes truncated when ultra-ideal.  n = 2 is the degenerate flat case
// and reports zero volume without invoking the tetrahedron formula.
BipyramidReport bipyramid_volume(int n, double alpha);

// B_n^trunc: the maximal-volume bipyramid with both apexes truncated,
// n * volume(maximal_wedge_angles(2pi/n)).  This bounds the volume
// contribution of an n-gonal face of an alternating link in a thickened
// surface.  Requires n >= 2; n = 2 is flat with volume zero.
BipyramidReport bn_trunc(int n);

// B_n^ideal: all vertices ideal, alpha = (n-2)pi/n.  Requires n >= 3.
BipyramidReport bn_ideal(int n);

// B_n^square: alpha = pi/2, the bound relevant for links in thickened
// surfaces with extra symmetry.  Apexes are ultra-ideal for n >= 5,
// ideal at n = 4, finite at n = 3; requires n >= 2.
BipyramidReport bn_square(int n);

// Volume bound per unit Euler characteristic for alternating links on a
// genus-g surface: bn_square(8g - 4).total_volume / (2g - 1).
// Requires 2g integral and g >= 2; increases toward 2 v_oct as g grows.
double beta_g(double g);

enum class Ambient { Sphere, ThickenedTorus, ThickenedSurface };

struct VolumeBounds {
  double octahedral_bound = 0;  // crossings * v_oct (doubled in surfaces)
  double bipyramid_bound = 0;   // sum of per-face bipyramid volumes
};

// Upper bounds for the volume of the complement of a (reduced, alternating,
// checkerboard-colorable) link diagram with the given face sizes and
// crossing count.  The bipyramid bound sums bn_ideal over faces on the
// sphere or torus and bn_trunc in a thickened higher-genus surface;
// bigon faces (size 2) contribute nothing.
VolumeBounds link_volume_upper_bound(const std::vector<int>& face_sizes,
                                     Ambient ambient, long long crossings);

}  // namespace tilink
