#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "tilink/catalog.hpp"
#include "tilink/dilog.hpp"
#include "tilink/errors.hpp"

using namespace tilink;

namespace {

// Half of the link volume for each solid, computed independently with
// 50-digit arithmetic.
const std::map<std::string, double> kVolOver2 = {
    {"tetrahedron", 1.014941606},
    {"octahedron", 3.663862377},
    {"cube", 5.074708032},
    {"dodecahedron", 20.58019935},
    {"truncated tetrahedron", 8.295649847},
    {"cuboctahedron", 12.04609204},
    {"truncated cube", 20.89155738},
    {"truncated octahedron", 25.22381556},
    {"rhombicuboctahedron", 31.69866156},
    {"truncated cuboctahedron", 57.26880573},
    {"icosidodecahedron", 39.87926506},
    {"truncated dodecahedron", 61.53561954},
    {"truncated icosahedron", 77.71394777},
    {"rhombicosidodecahedron", 92.71911065},
    {"truncated icosidodecahedron", 155.4565727},
};

}  // namespace

TEST_CASE("catalog lists the fifteen solids in order") {
  const std::vector<CatalogSolid>& solids = spherical_catalog();
  REQUIRE(solids.size() == 15);
  CHECK(solids.front().name == "tetrahedron");
  CHECK(solids[1].name == "octahedron");
  CHECK(solids[2].name == "cube");
  CHECK(solids[3].name == "dodecahedron");
  CHECK(solids.back().name == "truncated icosidodecahedron");
}

TEST_CASE("every solid passes the exact Euler check") {
  for (const CatalogSolid& solid : spherical_catalog()) {
    long long half_edges = 0;
    long long face_count = 0;
    for (const auto& [size, count] : solid.faces) {
      half_edges += static_cast<long long>(size) * count;
      face_count += count;
    }
    int valence = solid.config.valence();
    REQUIRE(half_edges % 2 == 0);
    REQUIRE(half_edges % valence == 0);
    long long V = half_edges / valence;
    long long E = half_edges / 2;
    CHECK(V - E + face_count == 2);

    // TilingSpec::make re-runs the same check in rational arithmetic.
    CHECK_NOTHROW((void)solid.spec());
    CHECK(classify_geometry(solid.spec()) == GeometryClass::Spherical);
  }
}

TEST_CASE("link volumes of the maximal ideal solids") {
  for (const CatalogSolid& solid : spherical_catalog()) {
    SphericalLinkVolume v = spherical_link_volume(solid);
    CHECK(v.vol_over_2 ==
          doctest::Approx(kVolOver2.at(solid.name)).epsilon(1e-9));
    CHECK(v.total_volume ==
          doctest::Approx(2 * v.vol_over_2).epsilon(1e-15));
    for (int size : solid.config.sizes) CHECK(v.angles.count(size) == 1);
  }

  // The simplest two rows are exactly the ideal-solid volumes.
  CHECK(spherical_link_volume("tetrahedron").vol_over_2 ==
        doctest::Approx(v_tet()).epsilon(1e-12));
  CHECK(spherical_link_volume("octahedron").vol_over_2 ==
        doctest::Approx(v_oct()).epsilon(1e-12));
}

TEST_CASE("lookup by name is case-insensitive and validated") {
  CHECK(spherical_link_volume("Truncated Cube").vol_over_2 ==
        doctest::Approx(20.89155738).epsilon(1e-9));
  CHECK_THROWS_AS((void)spherical_link_volume("icosahedron"), DomainError);
}
