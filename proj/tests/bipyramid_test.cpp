#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "tilink/bipyramid.hpp"
#include "tilink/dilog.hpp"
#include "tilink/errors.hpp"

using namespace tilink;
constexpr double kPi = std::numbers::pi;

// Reference values computed independently with 50-digit arithmetic.
constexpr double kBnTrunc3 = 2.66674478345;
constexpr double kBnTrunc10 = 17.3480800425;
constexpr double kBnTrunc1000 = 1831.92131877;
constexpr double kBnIdeal3 = 2.02988321281931;
constexpr double kBnIdeal6 = 6.08964963845792;
constexpr double kBnSquare5 = 6.81683932131591;
constexpr double kBnSquare12 = 21.1410031942232;
constexpr double kBeta2 = 7.04700106474105;
constexpr double kBeta25 = 7.171477674570635;

TEST_CASE("maximal wedge angles") {
  // a = 0 degenerates to the regular ideal octahedron wedge.
  AngleVector w0 = maximal_wedge_angles(0.0);
  CHECK(w0.A == 0.0);
  CHECK(w0.D == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(w0.B == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(w0.B == w0.C);
  CHECK(w0.B == w0.E);
  CHECK(w0.B == w0.F);

  double a = 1.2;
  AngleVector w = maximal_wedge_angles(a);
  double dm = std::acos((std::cos(a) - 1.0) / 2.0);
  CHECK(w.A == a);
  CHECK(w.D == doctest::Approx(dm).epsilon(1e-15));
  CHECK(w.B == doctest::Approx((kPi - dm) / 2).epsilon(1e-15));

  // Apexes of the maximal wedge are truncated for a > 0.
  std::array<VertexKind, 4> kinds = classify_vertices(w);
  CHECK(kinds[2] == VertexKind::UltraIdeal);
  CHECK(kinds[3] == VertexKind::UltraIdeal);

  CHECK_THROWS_AS((void)maximal_wedge_angles(-0.1), DomainError);
  CHECK_THROWS_AS((void)maximal_wedge_angles(kPi + 0.1), DomainError);
}

TEST_CASE("tiling wedge angles") {
  // Hexagonal ideal wedge is the regular ideal tetrahedron.
  AngleVector hex = tiling_wedge_angles(6, 2 * kPi / 3);
  CHECK(hex.A == doctest::Approx(kPi / 3).epsilon(1e-15));
  CHECK(hex.B == doctest::Approx(kPi / 3).epsilon(1e-15));
  CHECK(hex.D == doctest::Approx(kPi / 3).epsilon(1e-15));

  AngleVector sq = tiling_wedge_angles(4, kPi / 2);
  CHECK(sq.A == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(sq.D == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(sq.B == doctest::Approx(kPi / 4).epsilon(1e-15));

  CHECK_THROWS_AS((void)tiling_wedge_angles(1, kPi / 2), DomainError);
  CHECK_THROWS_AS((void)tiling_wedge_angles(5, 0.0), DomainError);
  CHECK_THROWS_AS((void)tiling_wedge_angles(5, kPi), DomainError);
}

TEST_CASE("bipyramid volume basics") {
  // n = 2 is the flat degenerate case.
  BipyramidReport flat = bipyramid_volume(2, 1.0);
  CHECK(flat.wedge_volume == 0.0);
  CHECK(flat.total_volume == 0.0);

  // Triangular ideal bipyramid is two regular ideal tetrahedra.
  BipyramidReport tri = bipyramid_volume(3, kPi / 3);
  CHECK(tri.total_volume == doctest::Approx(2 * v_tet()).epsilon(1e-12));

  BipyramidReport r = bipyramid_volume(7, 1.3);
  CHECK(r.n == 7);
  CHECK(r.alpha == 1.3);
  CHECK(r.total_volume == doctest::Approx(7 * r.wedge_volume).epsilon(1e-15));
  CHECK(r.wedge_volume ==
        doctest::Approx(volume(tiling_wedge_angles(7, 1.3))).epsilon(1e-15));

  CHECK_THROWS_AS((void)bipyramid_volume(1, 1.0), DomainError);
  CHECK_THROWS_AS((void)bipyramid_volume(5, 0.0), DomainError);
  CHECK_THROWS_AS((void)bipyramid_volume(5, kPi), DomainError);
}

TEST_CASE("apex kind transitions at 2pi/n + alpha = pi") {
  for (int n : {3, 4, 5, 6, 12}) {
    double crit = kPi - 2 * kPi / n;
    CHECK(bipyramid_volume(n, crit - 1e-3).apex_kind ==
          VertexKind::UltraIdeal);
    CHECK(bipyramid_volume(n, crit).apex_kind == VertexKind::Ideal);
    CHECK(bipyramid_volume(n, crit + 1e-3).apex_kind == VertexKind::Finite);
  }
  CHECK(bipyramid_volume(3, kPi / 2).apex_kind == VertexKind::Finite);
  CHECK(bipyramid_volume(4, kPi / 2).apex_kind == VertexKind::Ideal);
  CHECK(bipyramid_volume(5, kPi / 2).apex_kind == VertexKind::UltraIdeal);
}

TEST_CASE("maximal truncated bipyramids") {
  CHECK(bn_trunc(2).total_volume == 0.0);
  CHECK(bn_trunc(3).total_volume == doctest::Approx(kBnTrunc3).epsilon(1e-11));
  CHECK(bn_trunc(10).total_volume ==
        doctest::Approx(kBnTrunc10).epsilon(1e-11));
  CHECK(bn_trunc(1000).total_volume ==
        doctest::Approx(kBnTrunc1000).epsilon(1e-11));

  // Wedge consistency and the reported vertical angle pi - D(2pi/n).
  BipyramidReport r5 = bn_trunc(5);
  CHECK(r5.wedge_volume ==
        doctest::Approx(volume(maximal_wedge_angles(2 * kPi / 5)))
            .epsilon(1e-15));
  BipyramidReport r4 = bn_trunc(4);
  CHECK(r4.alpha == doctest::Approx(kPi / 3).epsilon(1e-14));
  CHECK(r4.total_volume / 4 == doctest::Approx(1.268677).epsilon(1e-6));

  for (int n : {3, 7, 100}) {
    CHECK(bn_trunc(n).apex_kind == VertexKind::UltraIdeal);
  }
  CHECK_THROWS_AS((void)bn_trunc(1), DomainError);
}

TEST_CASE("per-wedge truncated volume grows with n") {
  double prev = bn_trunc(3).total_volume / 3;
  for (int n = 4; n <= 200; ++n) {
    double cur = bn_trunc(n).total_volume / n;
    CHECK(cur > prev);
    prev = cur;
  }
  CHECK(bn_trunc(1000).total_volume / 1000 ==
        doctest::Approx(1.83192).epsilon(1e-4));
}

TEST_CASE("ideal bipyramids") {
  CHECK_THROWS_AS((void)bn_ideal(2), DomainError);
  CHECK(bn_ideal(3).total_volume == doctest::Approx(kBnIdeal3).epsilon(1e-12));
  CHECK(bn_ideal(3).total_volume ==
        doctest::Approx(2 * v_tet()).epsilon(1e-12));
  CHECK(bn_ideal(4).total_volume == doctest::Approx(v_oct()).epsilon(1e-12));
  CHECK(bn_ideal(6).total_volume == doctest::Approx(kBnIdeal6).epsilon(1e-12));
  CHECK(bn_ideal(6).total_volume ==
        doctest::Approx(6 * v_tet()).epsilon(1e-12));

  for (int n : {3, 4, 17, 120}) {
    BipyramidReport r = bn_ideal(n);
    CHECK(r.apex_kind == VertexKind::Ideal);
    CHECK(r.alpha == doctest::Approx((n - 2) * kPi / n).epsilon(1e-15));
  }
}

TEST_CASE("ideal bipyramid volume stays below the log bound") {
  // vol(B_n^ideal) < 2 pi ln(n/2); sampled here, swept fully by the
  // acceptance gate.
  std::vector<int> ns;
  for (int n = 3; n <= 1000; ++n) ns.push_back(n);
  ns.push_back(2000);
  ns.push_back(5000);
  ns.push_back(10000);
  for (int n : ns) {
    CHECK(bn_ideal(n).total_volume < 2 * kPi * std::log(n / 2.0));
  }
}

TEST_CASE("per-wedge ideal volume peaks at the hexagon") {
  double best = 0.0;
  int argmax = 0;
  for (int n = 3; n <= 100; ++n) {
    double per = bn_ideal(n).total_volume / n;
    if (per > best) {
      best = per;
      argmax = n;
    }
  }
  CHECK(argmax == 6);
  CHECK(best == doctest::Approx(v_tet()).epsilon(1e-9));
}

TEST_CASE("right-angled bipyramids") {
  CHECK_THROWS_AS((void)bn_square(1), DomainError);
  CHECK(bn_square(2).total_volume == 0.0);
  CHECK(bn_square(4).total_volume == doctest::Approx(v_oct()).epsilon(1e-12));
  CHECK(bn_square(5).total_volume ==
        doctest::Approx(kBnSquare5).epsilon(1e-12));
  CHECK(bn_square(12).total_volume ==
        doctest::Approx(kBnSquare12).epsilon(1e-12));

  CHECK(bn_square(3).apex_kind == VertexKind::Finite);
  CHECK(bn_square(4).apex_kind == VertexKind::Ideal);
  CHECK(bn_square(5).apex_kind == VertexKind::UltraIdeal);
  CHECK(bn_square(50).apex_kind == VertexKind::UltraIdeal);

  // The doubly truncated bipyramid is the volume maximizer.
  for (int n = 3; n <= 200; ++n) {
    CHECK(bn_square(n).total_volume < bn_trunc(n).total_volume);
  }
}

TEST_CASE("beta genus-density bound") {
  CHECK(beta_g(2.0) == doctest::Approx(kBeta2).epsilon(1e-12));
  CHECK(beta_g(2.0) ==
        doctest::Approx(bn_square(12).total_volume / 3).epsilon(1e-15));
  CHECK(beta_g(2.5) == doctest::Approx(kBeta25).epsilon(1e-12));

  double limit = 2 * v_oct();
  double prev = 0.0;
  for (double g = 2.0; g <= 8.0; g += 0.5) {
    double b = beta_g(g);
    CHECK(b > prev);
    CHECK(b < limit);
    prev = b;
  }
  CHECK(beta_g(50.0) > 7.3);
  CHECK(beta_g(50.0) < limit);

  CHECK_THROWS_AS((void)beta_g(1.9), DomainError);
  CHECK_THROWS_AS((void)beta_g(1.5), DomainError);
  CHECK_THROWS_AS((void)beta_g(std::numeric_limits<double>::infinity()),
                  DomainError);
}

TEST_CASE("link volume upper bounds") {
  double voct = v_oct();

  // Cube graph in the 3-sphere: 6 square faces, 12 crossings.
  VolumeBounds cube = link_volume_upper_bound(
      std::vector<int>(6, 4), Ambient::Sphere, 12);
  CHECK(cube.octahedral_bound == doctest::Approx(12 * voct).epsilon(1e-14));
  CHECK(cube.bipyramid_bound == doctest::Approx(6 * voct).epsilon(1e-12));

  // Square tiling quotient on the torus: same per-face rule as the sphere.
  VolumeBounds torus = link_volume_upper_bound({4, 4, 4, 4},
                                               Ambient::ThickenedTorus, 8);
  CHECK(torus.octahedral_bound == doctest::Approx(8 * voct).epsilon(1e-14));
  CHECK(torus.bipyramid_bound ==
        doctest::Approx(4 * bn_ideal(4).total_volume).epsilon(1e-14));

  // Thickened surface: doubled octahedra, truncated bipyramids.
  VolumeBounds surf = link_volume_upper_bound({3, 3, 3},
                                              Ambient::ThickenedSurface, 3);
  CHECK(surf.octahedral_bound == doctest::Approx(6 * voct).epsilon(1e-14));
  CHECK(surf.bipyramid_bound ==
        doctest::Approx(3 * bn_trunc(3).total_volume).epsilon(1e-14));
  CHECK(surf.bipyramid_bound == doctest::Approx(8.0001).epsilon(3e-5));

  // Bigon faces contribute nothing to either ambient class.
  VolumeBounds bigons = link_volume_upper_bound({2, 2, 3},
                                                Ambient::ThickenedSurface, 4);
  CHECK(bigons.bipyramid_bound ==
        doctest::Approx(bn_trunc(3).total_volume).epsilon(1e-14));
  VolumeBounds bigons2 = link_volume_upper_bound({2, 5}, Ambient::Sphere, 4);
  CHECK(bigons2.bipyramid_bound ==
        doctest::Approx(bn_ideal(5).total_volume).epsilon(1e-14));

  CHECK_THROWS_AS(
      (void)link_volume_upper_bound({3, 3}, Ambient::Sphere, 0), DomainError);
  CHECK_THROWS_AS(
      (void)link_volume_upper_bound({1, 3}, Ambient::Sphere, 2), DomainError);
}
