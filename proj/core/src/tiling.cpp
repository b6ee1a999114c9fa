#include "tilink/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "tilink/dilog.hpp"
#include "tilink/errors.hpp"

namespace tilink {
namespace {

constexpr double kPi = std::numbers::pi;

// Interior angle of a regular n-gon at circumradius scale s, clamped so
// the spherical endpoint (where the polygon degenerates) stays defined.
double interior_angle(int n, double s) {
  double arg = s * std::cos(kPi / n);
  return 2.0 * std::asin(std::clamp(arg, -1.0, 1.0));
}

double class_residual(const VertexConfig& cfg, double s) {
  double sum = 0.0;
  for (int n : cfg.sizes) sum += interior_angle(n, s);
  return sum - 2.0 * kPi;
}

std::set<int> present_sizes(const TilingSpec& spec) {
  std::set<int> sizes;
  for (const auto& cl : spec.classes)
    sizes.insert(cl.config.sizes.begin(), cl.config.sizes.end());
  return sizes;
}

// Densities published earlier for two configurations disagree with what
// this computation (and its cross-checks) produce; reports carry both.
const DiscrepancyNote* known_discrepancy(const TilingSpec& spec) {
  static const std::pair<std::vector<int>, DiscrepancyNote> table[] = {
      {{3, 6, 3, 6}, {3.0448, "discrepant"}},
      {{4, 8, 4, 8}, {5.4581, "discrepant"}},
  };
  if (spec.classes.size() != 1) return nullptr;
  auto canon = spec.classes[0].config.canonical_rotation();
  for (const auto& [key, note] : table)
    if (key == canon) return &note;
  return nullptr;
}

}  // namespace

std::string VertexConfig::str() const {
  std::string out;
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(sizes[i]);
  }
  return out;
}

std::vector<int> VertexConfig::canonical_rotation() const {
  std::vector<int> best = sizes;
  std::vector<int> rot = sizes;
  for (size_t i = 1; i < sizes.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

VertexConfig parse_vertex_config(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (ch == '.') {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  tokens.push_back(cur);

  VertexConfig cfg;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    bool numeric = !tok.empty() && tok.size() <= 9 &&
                   std::all_of(tok.begin(), tok.end(), [](char c) {
                     return c >= '0' && c <= '9';
                   });
    if (!numeric)
      throw ParseError("vertex config \"" + text + "\": token " +
                       std::to_string(i + 1) + " (\"" + tok +
                       "\") is not a positive integer");
    int n = std::stoi(tok);
    if (n < 3)
      throw ParseError("vertex config \"" + text + "\": token " +
                       std::to_string(i + 1) + " (\"" + tok +
                       "\") must be at least 3");
    cfg.sizes.push_back(n);
  }
  if (cfg.sizes.size() != 3 && cfg.sizes.size() != 4)
    throw ParseError("vertex config \"" + text + "\": expected 3 or 4 face sizes, got " +
                     std::to_string(cfg.sizes.size()));
  return cfg;
}

TilingSpec TilingSpec::single(VertexConfig config, std::string name) {
  return make({VertexClass{std::move(config), Rational(1)}}, {},
              std::move(name));
}

TilingSpec TilingSpec::make(std::vector<VertexClass> classes,
                            std::map<int, long long> faces,
                            std::string name) {
  if (classes.empty()) throw DomainError("tiling: need at least one class");
  Rational total(0);
  for (const auto& cl : classes) {
    if (cl.config.valence() != 3 && cl.config.valence() != 4)
      throw DomainError("tiling: classes must have valence 3 or 4");
    for (int n : cl.config.sizes)
      if (n < 3) throw DomainError("tiling: face sizes must be at least 3");
    if (cl.weight < Rational(0))
      throw DomainError("tiling: class weights must be nonnegative");
    total += cl.weight;
  }
  if (!(total > Rational(0)))
    throw DomainError("tiling: class weights must have positive sum");
  for (auto& cl : classes) cl.weight /= total;

  for (const auto& [size, count] : faces) {
    if (size < 3) throw DomainError("tiling: face multiset sizes must be >= 3");
    if (count <= 0) throw DomainError("tiling: face counts must be positive");
    bool seen = false;
    for (const auto& cl : classes)
      for (int n : cl.config.sizes) seen = seen || n == size;
    if (!seen)
      throw DomainError("tiling: face size " + std::to_string(size) +
                        " appears in no vertex class");
  }

  TilingSpec spec;
  spec.name = std::move(name);
  spec.classes = std::move(classes);
  spec.face_multiset = std::move(faces);

  if (!spec.face_multiset.empty()) {
    // A face multiset describes one closed polyhedral tiling; check its
    // Euler characteristic exactly before accepting it.
    int valence = spec.classes[0].config.valence();
    for (const auto& cl : spec.classes)
      if (cl.config.valence() != valence)
        throw DomainError("tiling: face multiset needs uniform valence");
    Rational V(0), E(0), F(0);
    for (const auto& [size, count] : spec.face_multiset) {
      V += Rational(size * count, valence);
      E += Rational(size * count, 2);
      F += Rational(count);
    }
    if (!V.is_integer() || !E.is_integer() || V - E + F != Rational(2))
      throw DomainError("tiling: face multiset fails the Euler check");
  }
  return spec;
}

const char* to_string(GeometryClass g) {
  switch (g) {
    case GeometryClass::Spherical:
      return "spherical";
    case GeometryClass::Euclidean:
      return "euclidean";
    default:
      return "hyperbolic";
  }
}

GeometryClass classify_geometry(const TilingSpec& spec) {
  if (spec.classes.empty()) throw DomainError("tiling: need at least one class");
  auto deficit_sign = [](const VertexConfig& cfg) {
    Rational sum(0);
    for (int n : cfg.sizes) sum += Rational(n - 2, n);
    if (sum == Rational(2)) return GeometryClass::Euclidean;
    return sum < Rational(2) ? GeometryClass::Spherical
                             : GeometryClass::Hyperbolic;
  };
  GeometryClass g = deficit_sign(spec.classes[0].config);
  for (size_t i = 1; i < spec.classes.size(); ++i) {
    if (deficit_sign(spec.classes[i].config) != g)
      throw DomainError("tiling: vertex classes disagree on geometry (" +
                        spec.classes[0].config.str() + " vs " +
                        spec.classes[i].config.str() + ")");
  }
  return g;
}

PolygonAngleAssignment solve_equilateral(const TilingSpec& spec, double tol) {
  if (!std::isfinite(tol) || tol <= 0.0)
    throw DomainError("equilateral solve: tolerance must be positive");
  GeometryClass geometry = classify_geometry(spec);
  auto sizes = present_sizes(spec);

  double s = 1.0;
  if (geometry != GeometryClass::Euclidean) {
    const VertexConfig& lead = spec.classes[0].config;
    double lo, hi;
    if (geometry == GeometryClass::Hyperbolic) {
      lo = 0.0;
      hi = 1.0;
    } else {
      // Spherical scales run up to the point where the largest polygon
      // degenerates (interior angle pi).
      lo = 1.0;
      hi = 1.0 / std::cos(kPi / *sizes.rbegin());
    }
    double flo = class_residual(lead, lo);
    double fhi = class_residual(lead, hi);
    if (!(flo < 0.0 && fhi > 0.0))
      throw DomainError("equilateral solve: no realization for " + lead.str());

    bool converged = false;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;  // interval exhausted
      double fmid = class_residual(lead, mid);
      s = mid;
      if (std::abs(fmid) <= tol) {
        converged = true;
        break;
      }
      (fmid < 0.0 ? lo : hi) = mid;
    }
    if (!converged) {
      std::ostringstream msg;
      msg << "equilateral solve: bisection did not reach tolerance " << tol;
      throw NumericalError(msg.str());
    }
  }

  // Every remaining class must close at the same scale.
  for (size_t i = 1; i < spec.classes.size(); ++i) {
    double r = class_residual(spec.classes[i].config, s);
    if (std::abs(r) > 1e-9) {
      std::ostringstream msg;
      msg << "equilateral solve: classes are not simultaneously equilateral ("
          << spec.classes[i].config.str() << " misses by " << r << ")";
      throw DomainError(msg.str());
    }
  }
  if (geometry == GeometryClass::Euclidean) {
    double r = class_residual(spec.classes[0].config, s);
    if (std::abs(r) > 1e-9)
      throw DomainError("equilateral solve: Euclidean class fails to close");
  }

  PolygonAngleAssignment out;
  out.geometry = geometry;
  out.s = s;
  if (geometry == GeometryClass::Hyperbolic)
    out.edge_length = 2.0 * std::acosh(1.0 / s);
  else if (geometry == GeometryClass::Spherical)
    out.edge_length = 2.0 * std::acos(1.0 / s);
  for (int n : sizes) out.angles[n] = interior_angle(n, s);
  return out;
}

DecompositionChecks check_decomposition(const TilingSpec& spec,
                                        const PolygonAngleAssignment& a) {
  constexpr double kTol = 1e-9;
  DecompositionChecks c;
  c.vertical_ok = c.equatorial_ok = c.bigon_ok = c.apex_ok = true;
  std::ostringstream detail;

  for (const auto& cl : spec.classes) {
    double sum = 0.0;
    for (int n : cl.config.sizes) sum += a.angles.at(n);
    int v = cl.config.valence();

    double vert = std::abs(sum - 2.0 * kPi);
    c.max_residual = std::max(c.max_residual, vert);
    if (vert > kTol) {
      c.vertical_ok = false;
      detail << "vertical angles around " << cl.config.str() << " miss by "
             << vert << "; ";
    }
    if (v == 4) {
      double eq = std::abs(v * kPi - sum - 2.0 * kPi);
      c.max_residual = std::max(c.max_residual, eq);
      if (eq > kTol) {
        c.equatorial_ok = false;
        detail << "equatorial angles around " << cl.config.str()
               << " miss by " << eq << "; ";
      }
    } else {
      c.has_bigons = true;
      // One bigon per crossing closes the equator: sum (pi - alpha) = pi.
      double bg = std::abs(v * kPi - sum - kPi);
      c.max_residual = std::max(c.max_residual, bg);
      if (bg > kTol) {
        c.bigon_ok = false;
        detail << "bigon relation at " << cl.config.str() << " misses by "
               << bg << "; ";
      }
    }
  }

  for (const auto& [n, alpha] : a.angles) {
    double s = 2.0 * kPi / n + alpha;
    VertexKind kind = s > kPi + kTol    ? VertexKind::Finite
                      : s < kPi - kTol ? VertexKind::UltraIdeal
                                       : VertexKind::Ideal;
    VertexKind expected = a.geometry == GeometryClass::Spherical
                              ? VertexKind::Finite
                          : a.geometry == GeometryClass::Euclidean
                              ? VertexKind::Ideal
                              : VertexKind::UltraIdeal;
    if (kind != expected) {
      c.apex_ok = false;
      detail << "apex over " << n << "-gons is " << to_string(kind)
             << " but the geometry needs " << to_string(expected) << "; ";
    }
  }

  c.detail = detail.str();
  if (!c.detail.empty()) c.detail.pop_back(), c.detail.pop_back();
  return c;
}

Rational euler_per_crossing(const TilingSpec& spec) {
  TilingSpec norm = TilingSpec::make(spec.classes, {}, spec.name);
  Rational chi(0);
  for (const auto& cl : norm.classes) {
    Rational faces(0);
    for (int n : cl.config.sizes) faces += Rational(1, n);
    // V - E + F per crossing: 1 - 2 + faces, with a half bigon extra at
    // 3-valent crossings (each inserted bigon serves two crossings).
    Rational local = faces - (cl.config.valence() == 4 ? Rational(1)
                                                       : Rational(1, 2));
    chi += cl.weight * local;
  }
  return chi;
}

Rational minimal_genus(const TilingSpec& spec) {
  TilingSpec norm = TilingSpec::make(spec.classes, {}, spec.name);
  if (classify_geometry(norm) != GeometryClass::Hyperbolic)
    throw DomainError("minimal genus: only meaningful for hyperbolic tilings");

  Rational chi = euler_per_crossing(norm);

  // Per-crossing incidence of each face size, bigons included.
  std::map<int, Rational> incidence;
  for (const auto& cl : norm.classes) {
    for (int n : cl.config.sizes) incidence[n] += cl.weight;
    if (cl.config.valence() == 3) incidence[2] += cl.weight;
  }

  // k crossings form a closed quotient when k*chi is an even integer and
  // every face class closes up (k * incidence_n / n faces of size n).
  long long k = (chi / Rational(2)).den();
  for (const auto& [n, inc] : incidence) k = checked_lcm(k, (inc / Rational(n)).den());

  // Scale up to euler characteristic at most -2 (genus at least 2).
  Rational per_k = Rational(k) * chi;  // even integer, negative
  long long m = 1;
  while (Rational(m) * per_k > Rational(-2)) ++m;

  Rational total_chi = Rational(m) * per_k;
  return (Rational(2) - total_chi) / Rational(2);
}

TilingReport density(const TilingSpec& spec, double solve_tol) {
  TilingSpec norm =
      TilingSpec::make(spec.classes, spec.face_multiset, spec.name);
  TilingReport rep;
  rep.spec = norm;
  rep.geometry = classify_geometry(norm);
  rep.assignment = solve_equilateral(norm, solve_tol);

  bool any_bigons = false;
  for (const auto& cl : norm.classes)
    if (cl.config.valence() == 3) any_bigons = true;
  if (any_bigons) rep.face_volumes[2] = 0.0;
  for (const auto& [n, alpha] : rep.assignment.angles)
    rep.face_volumes[n] = bipyramid_volume(n, alpha).total_volume;

  double dens = 0.0;
  for (const auto& cl : norm.classes) {
    double share = 0.0;
    for (int n : cl.config.sizes) share += rep.face_volumes.at(n) / n;
    dens += cl.weight.to_double() * share;
  }
  rep.density = dens;

  rep.euler_per_crossing = euler_per_crossing(norm);
  if (rep.geometry == GeometryClass::Hyperbolic)
    rep.min_genus = minimal_genus(norm);

  rep.checks = check_decomposition(norm, rep.assignment);

  if (!norm.face_multiset.empty()) {
    double total = 0.0;
    for (const auto& [size, count] : norm.face_multiset)
      total += count * rep.face_volumes.at(size);
    rep.total_volume = total;
    rep.vol_over_2 = 0.5 * total;
  }

  if (const DiscrepancyNote* note = known_discrepancy(norm)) rep.note = *note;
  return rep;
}

}  // namespace tilink
