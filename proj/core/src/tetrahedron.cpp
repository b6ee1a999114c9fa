#include "tilink/tetrahedron.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "tilink/bipyramid.hpp"
#include "tilink/dilog.hpp"
#include "tilink/errors.hpp"

namespace tilink {
namespace {

constexpr double kPi = std::numbers::pi;

void validate_angles(const AngleVector& t) {
  const double v[6] = {t.A, t.B, t.C, t.D, t.E, t.F};
  for (double x : v) {
    if (!std::isfinite(x) || x < 0.0 || x > kPi)
      throw DomainError("tetrahedron: dihedral angles must lie in [0, pi]");
  }
}

double det4(const Gram& m) {
  // Cofactor expansion along the first row.
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
           m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
           m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
  };
  return m[0][0] * det3(1, 2, 3, 1, 2, 3) - m[0][1] * det3(1, 2, 3, 0, 2, 3) +
         m[0][2] * det3(1, 2, 3, 0, 1, 3) - m[0][3] * det3(1, 2, 3, 0, 1, 2);
}

VertexKind classify_sum(double s, double tol) {
  if (s > kPi + tol) return VertexKind::Finite;
  if (s < kPi - tol) return VertexKind::UltraIdeal;
  return VertexKind::Ideal;
}

}  // namespace

const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Finite:
      return "finite";
    case VertexKind::Ideal:
      return "ideal";
    default:
      return "ultra-ideal";
  }
}

Gram gram_matrix(const AngleVector& t) {
  validate_angles(t);
  const double cA = std::cos(t.A), cB = std::cos(t.B), cC = std::cos(t.C);
  const double cD = std::cos(t.D), cE = std::cos(t.E), cF = std::cos(t.F);
  return Gram{{{1.0, -cD, -cB, -cF},
               {-cD, 1.0, -cC, -cE},
               {-cB, -cC, 1.0, -cA},
               {-cF, -cE, -cA, 1.0}}};
}

double gram_determinant(const AngleVector& t) { return det4(gram_matrix(t)); }

std::array<double, 4> vertex_angle_sums(const AngleVector& t) {
  validate_angles(t);
  return {t.D + t.B + t.F, t.D + t.C + t.E, t.A + t.B + t.C, t.A + t.E + t.F};
}

std::array<VertexKind, 4> classify_vertices(const AngleVector& t, double tol) {
  auto sums = vertex_angle_sums(t);
  return {classify_sum(sums[0], tol), classify_sum(sums[1], tol),
          classify_sum(sums[2], tol), classify_sum(sums[3], tol)};
}

double volume(const AngleVector& t) {
  validate_angles(t);
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  const C a = std::polar(1.0, t.A), b = std::polar(1.0, t.B),
          c = std::polar(1.0, t.C), d = std::polar(1.0, t.D),
          e = std::polar(1.0, t.E), f = std::polar(1.0, t.F);

  const double sinsum = std::sin(t.A) * std::sin(t.D) +
                        std::sin(t.B) * std::sin(t.E) +
                        std::sin(t.C) * std::sin(t.F);
  // Principal square root of the Gram determinant, promoted to complex so
  // compact (negative-determinant) configurations flow through unchanged.
  const C root = std::sqrt(C(gram_determinant(t), 0.0));
  const C denom = a * d + b * e + c * f + a * b * f + a * c * e + b * c * d +
                  d * e * f + a * b * c * d * e * f;
  if (std::abs(denom) < 1e-9)
    throw NumericalError(
        "volume: degenerate configuration, root denominator vanishes");

  const C z1 = -2.0 * (C(sinsum, 0.0) - root) / denom;
  const C z2 = -2.0 * (C(sinsum, 0.0) + root) / denom;

  auto U = [&](C z) {
    return 0.5 *
           (dilog(z) + dilog(a * b * d * e * z) + dilog(a * c * d * f * z) +
            dilog(b * c * e * f * z) - dilog(-a * b * c * z) -
            dilog(-a * e * f * z) - dilog(-b * d * f * z) -
            dilog(-c * d * e * z));
  };

  double vol = std::abs(0.5 * std::imag(U(z1) - U(z2)));
  if (!std::isfinite(vol))
    throw NumericalError("volume: evaluation did not stay finite");
  return vol;
}

double ideal_tetrahedron_volume(double t1, double t2, double t3) {
  const double v[3] = {t1, t2, t3};
  for (double x : v) {
    if (!std::isfinite(x) || x <= 0.0)
      throw DomainError("ideal tetrahedron: angles must be positive");
  }
  if (std::abs(t1 + t2 + t3 - kPi) > 1e-9)
    throw DomainError("ideal tetrahedron: angles must sum to pi");
  return lobachevsky(t1) + lobachevsky(t2) + lobachevsky(t3);
}

double criticality_residual_at(const AngleVector& t, double h) {
  if (!std::isfinite(h) || h <= 0.0)
    throw DomainError("criticality residual: step must be positive");
  // Orthonormal basis for the tangent space of the constraint manifold
  // { B+F+D = pi, C+E+D = pi, A fixed }, as (dB,dC,dD,dE,dF) directions.
  static const double kRt2 = std::sqrt(2.0);
  const double dirs[3][5] = {
      {1.0 / kRt2, 0.0, 0.0, 0.0, -1.0 / kRt2},
      {0.0, 1.0 / kRt2, 0.0, -1.0 / kRt2, 0.0},
      {-0.5 / kRt2, -0.5 / kRt2, 1.0 / kRt2, -0.5 / kRt2, -0.5 / kRt2}};

  double sq = 0.0;
  for (const auto& dir : dirs) {
    auto shift = [&](double sign) {
      AngleVector p = t;
      p.B += sign * h * dir[0];
      p.C += sign * h * dir[1];
      p.D += sign * h * dir[2];
      p.E += sign * h * dir[3];
      p.F += sign * h * dir[4];
      return volume(p);
    };
    double deriv = (shift(1.0) - shift(-1.0)) / (2.0 * h);
    sq += deriv * deriv;
  }
  return std::sqrt(sq);
}

double criticality_residual(double a, double h) {
  return criticality_residual_at(maximal_wedge_angles(a), h);
}

}  // namespace tilink
