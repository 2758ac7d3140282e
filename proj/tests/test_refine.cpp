#include <memory>

#include "doctest.h"
#include "gluing/errors.hpp"
#include "gluing/fixtures.hpp"
#include "gluing/refine.hpp"
#include "support.hpp"

using namespace gluing;
namespace fx = gluing::fixtures;

TEST_CASE("reindexing along index maps keeps the relations") {
  IndexSet three = IndexSet::numbered(3), two = IndexSet::numbered(2);
  IndexMap fold{three, two, {0, 1, 1}};
  CHECK(fold.surjective());
  CHECK_FALSE(fold.injective());
  CHECK(reindex_object(fold, normalize({0, 1, 2})) == normalize({0, 1}));
  CHECK(reindex_object(fold, normalize({1, 2})) == GlObject::single(1));
  Report r = check_reindex(fold);
  INFO(r.render());
  CHECK(r.ok());
  for (std::size_t n = 1; n <= 3; ++n) CHECK(check_reindex(IndexMap::identity(IndexSet::numbered(n))).ok());
}

TEST_CASE("identity refinement") {
  auto f = std::make_shared<const GluingFunctor>(fx::circ());
  Refinement r = identity_refinement(f);
  Report rep = check_refinement(r);
  INFO(rep.render());
  CHECK(rep.ok());
  GluedSpace g = glue(*f);
  SpaceMap m = induced_map(r, g, g);
  CHECK(m.equals(SpaceMap::identity(g.space)));
}

TEST_CASE("cylinder refinement induces the expected map") {
  auto c1 = fx::cylinder(fx::arc3(), "C1");
  auto v = fx::cylinder(fx::ends(), "V");
  const SpaceMap incl = SpaceMap::from_names(fx::ends(), fx::arc3(), {{"l", "l"}, {"r", "r"}});
  Refinement r = fx::cylinder_refinement("V->C1", v, c1, incl);
  Report rep = check_refinement(r);
  INFO(rep.render());
  CHECK(rep.ok());
  GluedSpace gv = glue(*v), gc = glue(*c1);
  CHECK(gc.space->size() == 12);
  CHECK(gv.space->size() == 8);
  SpaceMap m = induced_map(r, gv, gc);
  CHECK(m.continuous());
  CHECK(m.injective());
}

TEST_CASE("a non-natural component is rejected") {
  auto c1 = fx::cylinder(fx::arc3(), "C1");
  Refinement r = identity_refinement(c1);
  const GlObject one = GlObject::single(0);
  const auto& comp = r.components.at(one);
  // swap two points of the first patch so the naturality squares break
  std::vector<std::size_t> t = comp.table();
  std::swap(t[0], t[1]);
  r.components.at(one) = SpaceMap(comp.dom(), comp.cod(), t);
  CHECK_FALSE(check_refinement(r).ok());
}

TEST_CASE("refinements compose") {
  auto c1 = fx::cylinder(fx::arc3(), "C1");
  Refinement id = identity_refinement(c1);
  Refinement both = compose_refinements(id, id);
  CHECK(check_refinement(both).ok());
  for (const auto& [a, m] : both.components) CHECK(m.equals(id.components.at(a)));
}

TEST_CASE("torus by composition") {
  ComposedGluing cg = compose_gdf(fx::torus_meta());
  INFO(cg.report.render());
  CHECK(cg.report.ok());
  GluedSpace t = glue(*cg.functor);
  CHECK(t.space->size() == 16);
  CHECK(find_homeomorphism(fx::c4_squared(), t.space).has_value());
  CHECK(cg.report.find("hypothesis (b) at [1,1,2]")->passed);
}

TEST_CASE("hypothesis (b) fails on the doubled-ends counter fixture") {
  CHECK_THROWS_AS(compose_gdf(fx::torus_counter_meta()), HypothesisBFailed);
  try {
    compose_gdf(fx::torus_counter_meta());
  } catch (const HypothesisBFailed& e) {
    CHECK(std::string(e.what()).find("[1,1,2]") != std::string::npos);
  }
}

TEST_CASE("compose_gdf requires the wiring edges") {
  GdfGluingData meta = fx::torus_meta();
  meta.edges.erase(meta.edges.begin());
  CHECK_THROWS_AS(compose_gdf(meta), Error);
}
