#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "gluing/errors.hpp"
#include "gluing/glidx.hpp"
#include "support.hpp"

using namespace gluing;

namespace {

using Tuple = std::vector<int>;

std::vector<Tuple> all_tuples(int n) {
  std::vector<Tuple> out;
  for (int a = 0; a < n; ++a) out.push_back({a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.push_back({a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) out.push_back({a, b, c});
  return out;
}

// Equivalence closure of the three identifications on raw tuples.
std::map<Tuple, std::size_t> closure_classes(int n) {
  auto tuples = all_tuples(n);
  std::map<Tuple, std::size_t> pos;
  for (std::size_t p = 0; p < tuples.size(); ++p) pos[tuples[p]] = p;
  support::Classes<std::size_t> uf;
  for (const auto& t : tuples) {
    if (t.size() == 1) uf.unite(pos[t], pos[{t[0], t[0]}]);
    if (t.size() == 3) {
      if (t[1] == t[2]) uf.unite(pos[t], pos[{t[0], t[1]}]);
      uf.unite(pos[t], pos[{t[0], t[2], t[1]}]);
    }
  }
  std::map<Tuple, std::size_t> out;
  for (const auto& t : tuples) out[t] = uf.find(pos[t]);
  return out;
}

}  // namespace

TEST_CASE("normalize agrees with the equivalence-closure oracle") {
  for (int n = 1; n <= 4; ++n) {
    auto cls = closure_classes(n);
    for (const auto& [s, cs] : cls)
      for (const auto& [t, ct] : cls) CHECK((normalize(s) == normalize(t)) == (cs == ct));
  }
}

TEST_CASE("normalize examples") {
  CHECK(normalize({2}) == normalize({2, 2}));
  CHECK(normalize({0, 1, 1}) == normalize({0, 1}));
  CHECK(normalize({0, 2, 1}) == normalize({0, 1, 2}));
  CHECK(normalize({0, 1, 2}).kind == GlObject::Kind::triple);
  CHECK(normalize({0, 0, 1}).degenerate());
  CHECK_FALSE(normalize({1, 0, 0}).degenerate());
  CHECK_THROWS_AS(normalize({}), BadArity);
  CHECK_THROWS_AS(normalize({0, 1, 2, 3}), BadArity);
}

TEST_CASE("object census") {
  // one object per class of the closure oracle
  for (int n = 1; n <= 4; ++n) {
    auto cls = closure_classes(n);
    std::set<std::size_t> distinct;
    for (const auto& kv : cls) distinct.insert(kv.second);
    CHECK(GlCategory(static_cast<std::size_t>(n)).objects().size() == distinct.size());
  }
  CHECK(GlCategory(2).objects().size() == 6);
}

TEST_CASE("generator count is 2n^2 + 3n^3") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(generators(n).size() == 2 * n * n + 3 * n * n * n);
    CHECK(GlCategory(n).generators().size() == 2 * n * n + 3 * n * n * n);
  }
}

TEST_CASE("verify_relations passes for small index sets") {
  for (std::size_t n = 1; n <= 4; ++n) {
    Report r = verify_relations(n);
    INFO(r.render());
    CHECK(r.ok());
  }
}

TEST_CASE("generator labels round trip") {
  const IndexSet idx = IndexSet::numbered(3);
  for (const auto& g : generators(3)) {
    auto back = parse_generator(g.label(idx), idx);
    REQUIRE(back.has_value());
    CHECK(*back == g);
  }
  CHECK_FALSE(parse_generator("eta(1,9)", idx).has_value());
  CHECK_FALSE(parse_generator("zeta(1,2)", idx).has_value());
}

TEST_CASE("hom follows generators and composes") {
  const GlCategory cat(3);
  const GlObject one = GlObject::single(0), p = normalize({0, 1}), t = normalize({0, 1, 2});
  CHECK(cat.hom(one, p).has_value());
  CHECK(cat.hom(p, t).has_value());
  CHECK(cat.hom(one, t).has_value());
  CHECK_FALSE(cat.hom(t, one).has_value());
  CHECK_FALSE(cat.hom(p, one).has_value());
  auto f = *cat.hom(one, p), g = *cat.hom(p, t);
  CHECK(compose_hom(g, f) == *cat.hom(one, t));
  CHECK_THROWS_AS(compose_hom(f, g), CompositionMismatch);
  for (const auto& a : cat.objects()) CHECK(cat.hom(a, a)->is_identity());
}

TEST_CASE("degenerate triple is isomorphic to its pair") {
  const GlCategory cat(2);
  const GlObject p = normalize({1, 0}), t = normalize({0, 0, 1});
  CHECK(cat.hom(p, t).has_value());
  CHECK(cat.hom(t, p).has_value());
}

TEST_CASE("every generator edge is a hom") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const GlCategory cat(n);
    for (const auto& g : cat.generators()) CHECK(cat.hom(g.dom(), g.cod()).has_value());
    for (const auto& e : cat.edges()) CHECK_FALSE(e.is_identity());
  }
}

TEST_CASE("IndexSet lookups") {
  IndexSet idx({"a", "b"});
  CHECK(idx.index_of("b") == 1);
  CHECK_THROWS_AS(idx.index_of("z"), InputError);
  CHECK(IndexSet::numbered(2).name(1) == "2");
}
