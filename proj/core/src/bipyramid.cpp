#include "tilink/bipyramid.hpp"

#include <cmath>
#include <numbers>

#include "tilink/dilog.hpp"
#include "tilink/errors.hpp"

namespace tilink {
namespace {

constexpr double kPi = std::numbers::pi;

VertexKind apex_kind_for(int n, double alpha, double tol = 1e-9) {
  // Each apex collects n slanted angles alpha/2 plus nothing else; a wedge
  // sees the apex with angle sum 2pi/n + alpha (A plus two slant halves).
  double s = 2.0 * kPi / n + alpha;
  if (s > kPi + tol) return VertexKind::Finite;
  if (s < kPi - tol) return VertexKind::UltraIdeal;
  return VertexKind::Ideal;
}

}  // namespace

AngleVector maximal_wedge_angles(double a) {
  if (!std::isfinite(a) || a < 0.0 || a > kPi)
    throw DomainError("maximal wedge: apex angle must lie in [0, pi]");
  double d = std::acos(0.5 * (std::cos(a) - 1.0));
  double w = 0.5 * (kPi - d);
  return AngleVector{a, w, w, d, w, w};
}

AngleVector tiling_wedge_angles(int n, double alpha) {
  if (n < 2) throw DomainError("tiling wedge: need n >= 2");
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= kPi)
    throw DomainError("tiling wedge: alpha must lie in (0, pi)");
  double half = 0.5 * alpha;
  return AngleVector{2.0 * kPi / n, half, half, kPi - alpha, half, half};
}

BipyramidReport bipyramid_volume(int n, double alpha) {
  if (n < 2) throw DomainError("bipyramid: need n >= 2");
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= kPi)
    throw DomainError("bipyramid: alpha must lie in (0, pi)");
  BipyramidReport r;
  r.n = n;
  r.alpha = alpha;
  r.apex_kind = apex_kind_for(n, alpha);
  if (n == 2) return r;  // flat: two faces glued along the equator
  r.wedge_volume = volume(tiling_wedge_angles(n, alpha));
  r.total_volume = n * r.wedge_volume;
  return r;
}

BipyramidReport bn_trunc(int n) {
  if (n < 2) throw DomainError("bipyramid: need n >= 2");
  BipyramidReport r;
  r.n = n;
  AngleVector w = maximal_wedge_angles(2.0 * kPi / n);
  r.alpha = kPi - w.D;  // the slant angles are alpha/2 = (pi - D)/2
  r.apex_kind = apex_kind_for(n, r.alpha);
  if (n == 2) return r;
  r.wedge_volume = volume(w);
  r.total_volume = n * r.wedge_volume;
  return r;
}

BipyramidReport bn_ideal(int n) {
  if (n < 3) throw DomainError("ideal bipyramid: need n >= 3");
  return bipyramid_volume(n, (n - 2) * kPi / n);
}

BipyramidReport bn_square(int n) {
  if (n < 2) throw DomainError("square bipyramid: need n >= 2");
  return bipyramid_volume(n, 0.5 * kPi);
}

double beta_g(double g) {
  if (!std::isfinite(g)) throw DomainError("beta: genus must be finite");
  double two_g = 2.0 * g;
  long long rounded = std::llround(two_g);
  if (std::abs(two_g - rounded) > 1e-9)
    throw DomainError("beta: 2g must be an integer");
  if (rounded < 4) throw DomainError("beta: need genus >= 2");
  int n = static_cast<int>(4 * rounded - 4);  // 8g - 4
  return bn_square(n).total_volume / (rounded - 1);  // divide by 2g - 1
}

VolumeBounds link_volume_upper_bound(const std::vector<int>& face_sizes,
                                     Ambient ambient, long long crossings) {
  if (crossings < 1) throw DomainError("volume bound: need crossings >= 1");
  VolumeBounds b;
  double per_crossing =
      (ambient == Ambient::ThickenedSurface) ? 2.0 * v_oct() : v_oct();
  b.octahedral_bound = crossings * per_crossing;
  for (int n : face_sizes) {
    if (n < 2) throw DomainError("volume bound: face sizes must be >= 2");
    if (n == 2) continue;  // bigons are collapsed before decomposing
    b.bipyramid_bound += (ambient == Ambient::ThickenedSurface)
                             ? bn_trunc(n).total_volume
                             : bn_ideal(n).total_volume;
  }
  return b;
}

}  // namespace tilink
