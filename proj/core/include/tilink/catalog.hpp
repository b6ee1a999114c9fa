#pragma once

#include <map>
#include <string>
#include <vector>

#include "tilink/tiling.hpp"

namespace tilink {

// One vertex-transitive spherical tiling (Platonic or Archimedean solid
// with valence 3 or 4) together with its face multiset.
struct CatalogSolid {
  std::string name;
  VertexConfig config;
  std::map<int, long long> faces;  // size -> count

  TilingSpec spec() const;
};

// The fifteen solids of valence 3 or 4 whose alternating links embed in
// the 3-sphere, in the traditional order (Platonic first, then the
// Archimedean solids by vertex count).
const std::vector<CatalogSolid>& spherical_catalog();

struct SphericalLinkVolume {
  std::string name;
  double total_volume = 0.0;           // vol(L): all faces' bipyramids
  double vol_over_2 = 0.0;
  std::map<int, double> angles;        // interior angle per face size
};

// Exact volume of the alternating link complement built on the solid's
// edge graph: solve the equilateral spherical realization and sum the
// per-face bipyramid volumes over the face multiset.
SphericalLinkVolume spherical_link_volume(const CatalogSolid& solid);

// Looks the solid up by (case-insensitive) name.  Throws DomainError for
// names outside the catalog.
SphericalLinkVolume spherical_link_volume(const std::string& name);

}  // namespace tilink
