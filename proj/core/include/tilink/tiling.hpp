#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tilink/bipyramid.hpp"
#include "tilink/rational.hpp"

namespace tilink {

// Cyclic vertex configuration of a tiling: the face sizes around one
// vertex, e.g. "3.4.6.4".  Valence 3 or 4, every size at least 3
// (bigons never appear in configurations; they arise only as link faces).
struct VertexConfig {
  std::vector<int> sizes;

  int valence() const { return static_cast<int>(sizes.size()); }
  std::string str() const;

  // Lexicographically least rotation; configurations that differ by a
  // cyclic shift describe the same vertex.
  std::vector<int> canonical_rotation() const;

  bool operator==(const VertexConfig& o) const { return sizes == o.sizes; }
};

// Parses "p.q.r" or "p.q.r.s".  Errors name the offending token and its
// position.  Throws ParseError.
VertexConfig parse_vertex_config(const std::string& text);

struct VertexClass {
  VertexConfig config;
  Rational weight;  // fraction of vertices in this class
};

// A k-uniform tiling: k vertex classes with weights summing to 1, plus an
// optional face multiset (size -> count) for closed (spherical) tilings
// and an optional display name.
struct TilingSpec {
  std::string name;
  std::vector<VertexClass> classes;
  std::map<int, long long> face_multiset;  // empty when not applicable

  static TilingSpec single(VertexConfig config, std::string name = "");
  // Validates and normalizes: at least one class, weights nonnegative with
  // a positive sum (scaled to sum exactly 1), face multiset sizes >= 3
  // with positive counts.  Throws DomainError.
  static TilingSpec make(std::vector<VertexClass> classes,
                         std::map<int, long long> faces = {},
                         std::string name = "");
};

enum class GeometryClass { Spherical, Euclidean, Hyperbolic };

const char* to_string(GeometryClass g);

// Decides the geometry from the angle-deficit sign, exactly: a class with
// configuration (n1..nv) needs sum_i (ni - 2)/ni equal to 2 for Euclidean,
// below for spherical, above for hyperbolic.  All classes must agree,
// otherwise DomainError.
GeometryClass classify_geometry(const TilingSpec& spec);

// Equilateral realization: all faces regular with a common edge length.
// s parametrizes the circumradius scale; the interior angle of a regular
// n-gon is alpha_n(s) = 2 asin(s cos(pi/n)), with s = 1 Euclidean,
// s < 1 hyperbolic, s > 1 spherical.
struct PolygonAngleAssignment {
  GeometryClass geometry{};
  double s = 1.0;
  double edge_length = 0.0;        // 0 in the Euclidean case (scale-free)
  std::map<int, double> angles;    // face size -> interior angle
};

// Solves sum of alpha_n(s) = 2 pi over the first class by bisection to
// |residual| <= tol, then verifies every other class closes up to 1e-9.
// Throws DomainError when no equilateral realization exists (bracket
// fails or classes disagree) and NumericalError when bisection stalls.
PolygonAngleAssignment solve_equilateral(const TilingSpec& spec,
                                         double tol = 1e-13);

// Consistency checks for the bipyramid decomposition of the induced
// alternating link: around each original vertex the vertical angles close
// (sum alpha = 2pi); around each crossing the equatorial angles close
// (4-valent: sum (pi - alpha) = 2pi; 3-valent, after bigon insertion:
// sum (pi - alpha) = pi); each apex kind matches the geometry class.
struct DecompositionChecks {
  bool vertical_ok = false;
  bool equatorial_ok = false;
  bool bigon_ok = false;       // vacuous (true) without 3-valent classes
  bool apex_ok = false;
  bool has_bigons = false;     // some class is 3-valent
  double max_residual = 0.0;   // worst closure residual encountered
  std::string detail;          // human-readable account of any failure
  bool all_ok() const {
    return vertical_ok && equatorial_ok && bigon_ok && apex_ok;
  }
};

DecompositionChecks check_decomposition(const TilingSpec& spec,
                                        const PolygonAngleAssignment& a);

// When the computed density disagrees with a previously published value,
// the report carries both instead of silently preferring either.
struct DiscrepancyNote {
  double published_value = 0.0;
  std::string status;  // "discrepant"
};

struct TilingReport {
  TilingSpec spec;
  GeometryClass geometry{};
  PolygonAngleAssignment assignment;
  std::map<int, double> face_volumes;  // size -> bipyramid volume (2 -> 0)
  double density = 0.0;                // volume per crossing of the link
  Rational euler_per_crossing;         // negative iff hyperbolic
  std::optional<Rational> min_genus;   // hyperbolic tilings only
  DecompositionChecks checks;
  // Present when the face multiset is given (closed tilings).
  std::optional<double> total_volume;
  std::optional<double> vol_over_2;
  std::optional<DiscrepancyNote> note;
};

// Full pipeline: solve the equilateral realization to solve_tol, convert
// each face size to its bipyramid volume (bn_ideal angles in the Euclidean
// limit arise automatically from alpha_n), and average per crossing with
// the class weights.  Bigon faces of 3-valent tilings count zero volume.
TilingReport density(const TilingSpec& spec, double solve_tol = 1e-13);

// Euler characteristic of the link-complement cell structure per crossing,
// computed exactly: for each class, sum_i 1/ni minus 1 (4-valent) or
// minus 1/2 (3-valent), averaged with the class weights.
Rational euler_per_crossing(const TilingSpec& spec);

// Smallest genus g such that some finite quotient of the tiling carries
// the induced alternating link: the least k >= 1 crossings making
// k * chi_pc an even integer <= -2 while every face class closes up
// (k * incidence_n / n integral, bigons included); then g = (2 - k chi)/2.
// Hyperbolic tilings only; throws DomainError otherwise.
Rational minimal_genus(const TilingSpec& spec);

}  // namespace tilink
