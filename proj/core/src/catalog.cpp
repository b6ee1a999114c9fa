#include "tilink/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "tilink/errors.hpp"

namespace tilink {

TilingSpec CatalogSolid::spec() const {
  return TilingSpec::make({VertexClass{config, Rational(1)}}, faces, name);
}

const std::vector<CatalogSolid>& spherical_catalog() {
  static const std::vector<CatalogSolid> solids = {
      {"tetrahedron", {{3, 3, 3}}, {{3, 4}}},
      {"octahedron", {{3, 3, 3, 3}}, {{3, 8}}},
      {"cube", {{4, 4, 4}}, {{4, 6}}},
      {"dodecahedron", {{5, 5, 5}}, {{5, 12}}},
      {"truncated tetrahedron", {{3, 6, 6}}, {{3, 4}, {6, 4}}},
      {"cuboctahedron", {{3, 4, 3, 4}}, {{3, 8}, {4, 6}}},
      {"truncated cube", {{3, 8, 8}}, {{3, 8}, {8, 6}}},
      {"truncated octahedron", {{4, 6, 6}}, {{4, 6}, {6, 8}}},
      {"rhombicuboctahedron", {{3, 4, 4, 4}}, {{3, 8}, {4, 18}}},
      {"truncated cuboctahedron", {{4, 6, 8}}, {{4, 12}, {6, 8}, {8, 6}}},
      {"icosidodecahedron", {{3, 5, 3, 5}}, {{3, 20}, {5, 12}}},
      {"truncated dodecahedron", {{3, 10, 10}}, {{3, 20}, {10, 12}}},
      {"truncated icosahedron", {{5, 6, 6}}, {{5, 12}, {6, 20}}},
      {"rhombicosidodecahedron", {{3, 4, 5, 4}}, {{3, 20}, {4, 30}, {5, 12}}},
      {"truncated icosidodecahedron",
       {{4, 6, 10}},
       {{4, 30}, {6, 20}, {10, 12}}},
  };
  return solids;
}

SphericalLinkVolume spherical_link_volume(const CatalogSolid& solid) {
  TilingReport rep = density(solid.spec());
  if (rep.geometry != GeometryClass::Spherical)
    throw DomainError("catalog: " + solid.name + " is not spherical");
  SphericalLinkVolume out;
  out.name = solid.name;
  out.total_volume = *rep.total_volume;
  out.vol_over_2 = *rep.vol_over_2;
  out.angles = rep.assignment.angles;
  return out;
}

SphericalLinkVolume spherical_link_volume(const std::string& name) {
  auto fold = [](const std::string& s) {
    std::string t = s;
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return t;
  };
  std::string want = fold(name);
  for (const auto& solid : spherical_catalog())
    if (fold(solid.name) == want) return spherical_link_volume(solid);
  throw DomainError("catalog: unknown solid \"" + name + "\"");
}

}  // namespace tilink
