#include "doctest.h"
#include "gluing/cover.hpp"
#include "gluing/errors.hpp"
#include "gluing/fixtures.hpp"
#include "support.hpp"

using namespace gluing;
namespace fx = gluing::fixtures;

namespace {

void check_reconstruction(const Covering& c) {
  Report valid = check_covering(c);
  INFO(valid.render());
  REQUIRE(valid.ok());
  CoveringGluing cg = functor_of_covering(c);
  INFO(cg.report.render());
  CHECK(cg.report.ok());
  REQUIRE(cg.comparison.has_value());
  CHECK(is_homeomorphism(*cg.comparison));
  CHECK(support::homeomorphic(*cg.glued.space, *c.base));
  CHECK(cg.report.find("intersection equalities in the base")->passed);
  CHECK(cg.report.find("intersection equalities in Q")->passed);
}

}  // namespace

TEST_CASE("two-arc covering of the pseudocircle") { check_reconstruction(fx::c4_two_arcs()); }

TEST_CASE("two-strip covering of SQ9") { check_reconstruction(fx::sq9_two_strips()); }

TEST_CASE("covering kinds") {
  CHECK(fx::c4_two_arcs().kind == CoverKind::open);
  CHECK(parse_cover_kind("gluing") == CoverKind::gluing);
  CHECK_FALSE(parse_cover_kind("closed").has_value());
  // strips of SQ9 are not open, so the open kind fails on them
  Covering c = fx::sq9_two_strips();
  c.kind = CoverKind::open;
  CHECK_FALSE(check_covering(c).ok());
}

TEST_CASE("a family that misses a point is not a covering") {
  Covering c = fx::c4_two_arcs();
  c.legs.pop_back();
  Report r = check_covering(c);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.find("images cover the base")->passed);
}

TEST_CASE("covering of a glued space") {
  GluingFunctor f(fx::circ());
  GluedSpace g = glue(f);
  Covering c = covering_of_glued(f, g);
  CHECK(c.kind == CoverKind::open);
  CHECK(check_covering(c).ok());
  CHECK(c.legs.size() == 2);
}

TEST_CASE("site axioms on the fixtures") {
  Covering c = fx::c4_two_arcs();
  CHECK(site_axiom_iso(SpaceMap::identity(fx::c4())));
  CHECK_FALSE(site_axiom_iso(SpaceMap::constant(fx::c4(), fx::pt(), 0)));
  std::vector<Covering> sub;
  for (const auto& leg : c.legs) {
    Covering s{"", leg.dom(), {SpaceMap::identity(leg.dom())}, c.kind};
    sub.push_back(s);
  }
  auto [composite, ok] = site_axiom_compose(c, sub);
  CHECK(ok);
  CHECK(composite.legs.size() == c.legs.size());
  auto [pulled, ok2] = site_axiom_basechange(c, SpaceMap::identity(fx::c4()));
  CHECK(ok2);
  CHECK(pulled.kind == c.kind);
}

TEST_CASE("randomized site batch") {
  SiteReport s = run_site_batch(7, 60);
  INFO(s.report.render());
  CHECK(s.report.ok());
  CHECK(s.instances == 60);
  CHECK(s.open_instances > 0);
  CHECK(s.open_instances < s.instances);
  CHECK(s.kind_preserved == s.instances);
}
