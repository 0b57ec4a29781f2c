#include <gtest/gtest.h>

#include <json.hpp>

#include "polystrata/export.hpp"
#include "polystrata/permutahedron.hpp"

using namespace polystrata;
using nlohmann::json;

TEST(Export, PosetJsonShape) {
  const auto cp = c_lambda_poset(NumberPartition({1, 2, 4}));
  const auto j = json::parse(poset_json(cp.poset));
  EXPECT_EQ(j["elements"].size(), cp.poset.size());
  EXPECT_EQ(j["covers"].size(), cp.poset.covers().size());
  for (const auto& c : j["covers"]) {
    EXPECT_TRUE(cp.poset.less(c[0].get<std::size_t>(), c[1].get<std::size_t>()));
  }
}

TEST(Export, Deterministic) {
  for (int run = 0; run < 2; ++run) {
    static std::string first_dot, first_json;
    const auto faces = permutahedron_face_poset(4);
    const auto dot = poset_dot(faces.poset, "p");
    const auto js = poset_json(faces.poset);
    if (run == 0) {
      first_dot = dot;
      first_json = js;
    } else {
      EXPECT_EQ(dot, first_dot);
      EXPECT_EQ(js, first_json);
    }
  }
}

TEST(Export, DotIsBottomUp) {
  const auto dot = poset_dot(permutahedron_face_poset(3).poset, "hexagon");
  EXPECT_EQ(dot.rfind("digraph \"hexagon\" {", 0), 0u);
  EXPECT_NE(dot.find("rankdir=BT;"), std::string::npos);
}

TEST(Export, HomologyFormats) {
  HomologyResult h;
  h.set(3, 1);
  h.set(1, 0, {2});
  EXPECT_EQ(homology_json(h), R"({"groups":[{"betti":0,"degree":1,"torsion":[2]},{"betti":1,"degree":3,"torsion":[]}],"reduced":true})");
  EXPECT_EQ(homology_csv(h), "degree,betti,torsion\n1,0,2\n3,1,\n");
  EXPECT_EQ(homology_text(h), "H_1: Z/2\nH_3: Z\n");
  EXPECT_EQ(homology_text(HomologyResult()), "0\n");
}

TEST(Export, ComplexAndResonance) {
  const auto delta = delta_lambda_complex(NumberPartition({1, 2}));
  const auto j = json::parse(complex_json(delta.complex));
  EXPECT_EQ(j["dimension"], delta.complex.dimension());
  const auto r = json::parse(resonance_json(Composition({1, 2, 3})));
  EXPECT_EQ(r["parts"], json::array({1, 2, 3}));
  EXPECT_EQ(r["primitive"].size(), 1u);
  EXPECT_EQ(r["hyperplanes"].size(), 1u);
}

TEST(Export, Stabilization) {
  const auto report = stabilization_report(NumberPartition({2}), 2, 6);
  const auto csv = stabilization_csv(report);
  EXPECT_EQ(csv.rfind("n,degree,betti,torsion\n", 0), 0u);
  const auto j = json::parse(stabilization_json(report));
  EXPECT_TRUE(j.is_object());
}
