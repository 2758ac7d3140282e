#include "doctest.h"
#include "gluing/errors.hpp"
#include "gluing/fixtures.hpp"
#include "gluing/glue.hpp"
#include "support.hpp"

using namespace gluing;
namespace fx = gluing::fixtures;

TEST_CASE("GD-CIRC glues to the pseudocircle") {
  GluingFunctor f(fx::circ());
  GluedSpace g = glue(f);
  CHECK(g.space->size() == 4);
  CHECK(g.space->find("l@1").has_value());
  CHECK(g.space->find("m@2").has_value());
  CHECK(find_homeomorphism(fx::c4(), g.space).has_value());
  // final topology against the oracle
  CHECK(support::final_topology(*g.relation.coproduct.space, g.projection->table(), g.space->size()) ==
        support::opens(*g.space));
  Report r = check_glued_properties(f, g);
  INFO(r.render());
  CHECK(r.ok());
  CHECK(r.checks.size() == 7);
}

TEST_CASE("overlap relation is an equivalence for valid data") {
  CHECK(check_equivalence(build_relation(fx::circ())).ok());
  support::Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    GluingData gd = support::random_gluing_data(rng, support::pick(rng, 1, 3), 4, "E");
    Report r = check_equivalence(build_relation(gd));
    INFO(r.render());
    CHECK(r.ok());
  }
}

TEST_CASE("check_equivalence reports witnesses") {
  Relation rel = build_relation(fx::circ());
  rel.pairs.erase(rel.pairs.begin());
  Report r = check_equivalence(rel);
  CHECK_FALSE(r.ok());
}

TEST_CASE("glue rejects an inconsistent relation") {
  // bad-inverse data fails validation before gluing
  CHECK_THROWS_AS(glue(fx::circ_bad_inverse()), ValidationFailed);
}

TEST_CASE("cone modes agree on random leg families") {
  GluingFunctor f(fx::circ());
  support::Rng rng(41);
  const std::vector<SpacePtr> apexes{fx::pt(), fx::sierp(), fx::disc2(), fx::arc3(), fx::c4()};
  int cones = 0, non_cones = 0;
  for (int t = 0; t < 150; ++t) {
    Cone c = support::random_cone(rng, f, apexes);
    const bool full = check_cone(f, c, ConeMode::full);
    CHECK(check_cone(f, c, ConeMode::figure3) == full);
    CHECK(check_cone(f, c, ConeMode::figure4) == full);
    (full ? cones : non_cones) += 1;
  }
  CHECK(cones > 10);
  CHECK(non_cones > 10);
}

TEST_CASE("check_cone requires every named leg") {
  GluingFunctor f(fx::circ());
  Cone c{fx::pt(), {{GlObject::single(0), SpaceMap::constant(fx::arc3(), fx::pt(), 0)}}};
  CHECK_THROWS_AS(check_cone(f, c, ConeMode::full), MissingLeg);
  CHECK_THROWS_AS(complete_cone(f, c), MissingLeg);
}

TEST_CASE("mediate factors cones through Q") {
  GluingFunctor f(fx::circ());
  GluedSpace g = glue(f);
  Cone c{fx::sierp(), {}};
  c.legs.emplace(GlObject::single(0),
                 SpaceMap::from_names(fx::arc3(), fx::sierp(), {{"l", "t"}, {"m", "b"}, {"r", "t"}}));
  c.legs.emplace(GlObject::single(1),
                 SpaceMap::from_names(fx::arc3(), fx::sierp(), {{"l", "t"}, {"m", "b"}, {"r", "t"}}));
  SpaceMap mu = mediate(f, g, c);
  CHECK(mu.continuous());
  for (int i = 0; i < 2; ++i)
    CHECK(compose(mu, g.leg(GlObject::single(i))).equals(c.legs.at(GlObject::single(i))));
  // legs that disagree on an overlap point do not descend
  c.legs.at(GlObject::single(1)) =
      SpaceMap::from_names(fx::arc3(), fx::sierp(), {{"l", "b"}, {"m", "b"}, {"r", "t"}});
  CHECK_THROWS_AS(mediate(f, g, c), CheckFailure);
}

TEST_CASE("universal property of the GD-CIRC gluing") {
  GluingFunctor f(fx::circ());
  Report r = verify_universal(f, glue(f));
  INFO(r.render());
  CHECK(r.ok());
}

TEST_CASE("the one-identification mutant is not the colimit") {
  GluingFunctor f(fx::circ());
  Report r = verify_universal(f, fx::circ_mutant_candidate());
  CHECK_FALSE(r.ok());
  const Check* c = r.find("candidate legs form a cone");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
}

TEST_CASE("universal property on random small data") {
  support::Rng rng(51);
  UniversalOptions opts;
  opts.apexes = {fx::pt(), fx::sierp()};
  for (int t = 0; t < 15; ++t) {
    GluingFunctor f(support::random_gluing_data(rng, support::pick(rng, 1, 2), 3, "U"));
    GluedSpace g = glue(f);
    CHECK(check_glued_properties(f, g).ok());
    Report r = verify_universal(f, g, opts);
    INFO(r.render());
    CHECK(r.ok());
  }
}

TEST_CASE("open gluing data has open embeddings") {
  GluingFunctor f(fx::circ());
  Report r = check_otop(f, glue(f));
  INFO(r.render());
  CHECK(r.ok());
  CHECK(r.find("legs are embeddings")->passed);
  CHECK(r.find("leg images are open")->passed);
  CHECK(r.find("images cover Q")->passed);
}
