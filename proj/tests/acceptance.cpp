// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gluing/cover.hpp"
#include "gluing/errors.hpp"
#include "gluing/fixtures.hpp"
#include "gluing/glidx.hpp"
#include "gluing/glue.hpp"
#include "gluing/refine.hpp"
#include "support.hpp"

using namespace gluing;
namespace fx = gluing::fixtures;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double limit_s;  // 0 means no runtime bound
  std::function<Outcome()> body;
};

// Fails the outcome with a message; returns ok for chaining.
bool expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
  return cond;
}

Outcome index_laws() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    Report r = verify_relations(n);
    expect(o, r.ok(), r.render());
  }
  // normalize against the closure of the identifications on raw tuples
  std::size_t compared = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::vector<int>> tuples;
    for (int a = 0; a < n; ++a) tuples.push_back({a});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) tuples.push_back({a, b});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) tuples.push_back({a, b, c});
    support::Classes<std::vector<int>> uf;
    for (const auto& t : tuples) {
      if (t.size() == 1) uf.unite(t, {t[0], t[0]});
      if (t.size() == 3) {
        if (t[1] == t[2]) uf.unite(t, {t[0], t[1]});
        uf.unite(t, {t[0], t[2], t[1]});
      }
    }
    for (const auto& s : tuples)
      for (const auto& t : tuples) {
        ++compared;
        if (!expect(o, (normalize(s) == normalize(t)) == uf.same(s, t), "normalize disagrees with the oracle"))
          return o;
      }
  }
  if (o.ok) o.detail = "relations hold for |I| = 1..4; " + std::to_string(compared) + " tuple pairs match the oracle";
  return o;
}

Outcome overlap_equivalence() {
  Outcome o;
  support::Rng rng(2024);
  std::size_t valid = 0, mutated = 0;
  for (int t = 0; t < 60; ++t) {
    GluingData gd = support::random_gluing_data(rng, support::pick(rng, 1, 3), 4, "R" + std::to_string(t));
    Report v = validate(gd);
    expect(o, v.ok(), "generated data invalid: " + v.render());
    Report e = check_equivalence(build_relation(gd));
    expect(o, e.ok(), "relation not an equivalence: " + e.render());
    ++valid;
  }
  for (int t = 0; t < 400 && mutated < 25; ++t) {
    GluingData gd = support::random_gluing_data(rng, support::pick(rng, 2, 3), 4, "M" + std::to_string(t));
    if (!support::mutate_cocycle(rng, gd)) continue;
    ++mutated;
    // The relation is only built for data that validates.
    Report v = validate(gd);
    Report e = v.ok() ? check_equivalence(build_relation(gd)) : Report{};
    bool witnessed = false;
    for (const Report* r : {&v, &e})
      for (const auto& c : r->checks)
        if (!c.passed && !c.witnesses.empty()) witnessed = true;
    expect(o, witnessed, "mutation " + gd.name + " passed both checks");
  }
  expect(o, mutated >= 20, "only " + std::to_string(mutated) + " mutations");
  if (o.ok)
    o.detail = std::to_string(valid) + " valid instances pass, " + std::to_string(mutated) +
               " mutated instances fail with witnesses";
  return o;
}

Outcome cone_modes() {
  Outcome o;
  support::Rng rng(77);
  const std::vector<SpacePtr> apexes{fx::pt(), fx::sierp(), fx::disc2(), fx::arc3(), fx::c4()};
  std::vector<GluingFunctor> fs{GluingFunctor(fx::circ()), GluingFunctor(fx::two_disc_point())};
  std::size_t families = 0, disagreements = 0, cones = 0;
  for (int t = 0; t < 160; ++t) {
    const GluingFunctor& f = fs[static_cast<std::size_t>(t) % fs.size()];
    Cone c = support::random_cone(rng, f, apexes);
    const bool a = check_cone(f, c, ConeMode::full);
    const bool b = check_cone(f, c, ConeMode::figure3);
    const bool d = check_cone(f, c, ConeMode::figure4);
    ++families;
    if (a != b || a != d) ++disagreements;
    if (a) ++cones;
  }
  expect(o, disagreements == 0, std::to_string(disagreements) + " disagreements");
  expect(o, cones > 0 && cones < families, "leg families did not mix verdicts");
  if (o.ok)
    o.detail = std::to_string(families) + " families (" + std::to_string(cones) +
               " cones), 0 disagreements";
  return o;
}

Outcome round_trip() {
  Outcome o;
  GluingFunctor f(fx::circ());
  GluedSpace g = glue(f);
  Report props = check_glued_properties(f, g);
  for (const char* name : {"(a) pair legs factor through anchors", "(b) triple legs factor through projections",
                           "(c) legs agree on overlaps", "(d) images cover Q",
                           "(e) overlap images are intersections", "(f) legs injective and continuous"}) {
    const Check* c = props.find(name);
    expect(o, c && c->passed, std::string("property failed: ") + name);
  }
  Report u = verify_universal(f, g);
  expect(o, u.ok(), u.render());
  Report m = verify_universal(f, fx::circ_mutant_candidate());
  expect(o, !m.ok(), "mutant passed the universal property");
  if (o.ok) {
    std::string notes;
    for (const auto& n : u.notes) notes += (notes.empty() ? "" : "; ") + n;
    std::string why;
    for (const auto& c : m.checks)
      if (!c.passed) why += (why.empty() ? "" : ", ") + c.name;
    o.detail = "(a)-(f) hold; " + notes + "; mutant rejected by: " + why;
  }
  return o;
}

Outcome open_gluing() {
  Outcome o;
  GluingFunctor f(fx::circ());
  Report r = check_otop(f, glue(f));
  expect(o, r.applicable, "GD-CIRC maps not all open");
  expect(o, r.ok(), r.render());
  if (o.ok) o.detail = "legs are open embeddings and cover Q";
  return o;
}

Outcome torus() {
  Outcome o;
  // sequential: cylinder, then two glued cylinders along the y-ends
  GluedSpace c1 = glue(*fx::cylinder(fx::arc3(), "C1"));
  GluedSpace c2 = glue(*fx::cylinder(fx::arc3(), "C2"));
  GluingFunctor seq_f(fx::torus_sequential(c1, c2));
  GluedSpace seq = glue(seq_f);
  // composed: the meta-gluing in one step
  ComposedGluing cg = compose_gdf(fx::torus_meta());
  GluedSpace comp = glue(*cg.functor);
  expect(o, seq.space->size() == 16 && comp.space->size() == 16, "torus models do not have 16 points");

  // Both routes glue the same two glued cylinders, so the patch legs of one
  // are a cone over the other's functor.
  auto patch_cone = [](const GluingFunctor& over, const GluedSpace& from) {
    Cone c{from.space, {}};
    for (int i = 0; i < static_cast<int>(over.index().size()); ++i) {
      const SpaceMap& leg = from.leg(GlObject::single(i));
      c.legs.emplace(GlObject::single(i), retarget(leg, over.data().patch(i), from.space));
    }
    return c;
  };
  Cone into_comp = patch_cone(seq_f, comp);
  Cone into_seq = patch_cone(*cg.functor, seq);
  try {
    SpaceMap mu = mediate(seq_f, seq, into_comp);
    SpaceMap nu = mediate(*cg.functor, comp, into_seq);
    expect(o, compose(nu, mu).equals(SpaceMap::identity(seq.space)), "nu o mu is not the identity");
    expect(o, compose(mu, nu).equals(SpaceMap::identity(comp.space)), "mu o nu is not the identity");
    expect(o, is_homeomorphism(mu), "mediating map is not a homeomorphism");
    expect(o, find_homeomorphism(fx::c4_squared(), comp.space).has_value(), "composed torus is not C4 x C4");
    expect(o, find_homeomorphism(fx::c4_squared(), seq.space).has_value(), "sequential torus is not C4 x C4");
  } catch (const Error& e) {
    expect(o, false, e.what());
  }
  if (o.ok) o.detail = "sequential and composed tori (16 points each) are mutually inverse via mediate; both match C4 x C4";
  return o;
}

Outcome coverings() {
  Outcome o;
  for (const Covering& c : {fx::c4_two_arcs(), fx::sq9_two_strips()}) {
    Report v = check_covering(c);
    expect(o, v.ok(), v.render());
    CoveringGluing cg = functor_of_covering(c);
    expect(o, cg.report.ok(), cg.report.render());
    expect(o, cg.comparison && is_homeomorphism(*cg.comparison), c.name + ": comparison map is not an iso");
    for (const char* name : {"intersection equalities in the base", "intersection equalities in Q"}) {
      const Check* k = cg.report.find(name);
      expect(o, k && k->passed, c.name + ": " + name);
    }
  }
  if (o.ok) o.detail = "C4 two-arc and SQ9 two-strip coverings reconstruct their bases";
  return o;
}

Outcome site() {
  Outcome o;
  SiteReport s = run_site_batch(1, 120, 8);
  expect(o, s.report.ok(), s.report.render());
  expect(o, s.instances >= 100, "too few instances");
  expect(o, s.open_instances > 0 && s.open_instances < s.instances, "kinds not mixed");
  expect(o, s.kind_preserved == s.instances,
         "kind preserved in " + std::to_string(s.kind_preserved) + "/" + std::to_string(s.instances));
  if (o.ok)
    o.detail = std::to_string(s.instances) + " coverings (" + std::to_string(s.open_instances) +
               " open); axioms pass; kind preserved " + std::to_string(s.kind_preserved) + "/" +
               std::to_string(s.instances);
  return o;
}

Outcome hypothesis_b() {
  Outcome o;
  ComposedGluing cg = compose_gdf(fx::torus_meta());
  std::size_t verified = 0;
  for (const auto& c : cg.report.checks)
    if (c.name.rfind("hypothesis (b)", 0) == 0) {
      expect(o, c.passed, c.name);
      ++verified;
    }
  expect(o, verified > 0, "no hypothesis (b) check ran");
  std::string raised;
  try {
    compose_gdf(fx::torus_counter_meta());
  } catch (const HypothesisBFailed& e) {
    raised = e.what();
  }
  expect(o, !raised.empty(), "counter fixture did not raise HypothesisBFailed");
  if (o.ok) {
    o.detail = std::to_string(verified) + " triple objects verified; counter fixture: " + raised;
    if (auto nl = o.detail.find('\n'); nl != std::string::npos) o.detail.resize(nl);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "index-category laws", 5, index_laws},
      {2, "overlap relation is an equivalence", 30, overlap_equivalence},
      {3, "cone modes agree", 0, cone_modes},
      {4, "GD-CIRC glued space and universal property", 30, round_trip},
      {5, "open gluing gives open embeddings", 0, open_gluing},
      {6, "torus: sequential vs composed", 60, torus},
      {7, "coverings reconstruct their base", 0, coverings},
      {8, "site axioms on random coverings", 0, site},
      {9, "hypothesis (b) on the torus meta-gluing", 0, hypothesis_b},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_s > 0 && secs > c.limit_s) {
      o.ok = false;
      o.detail = "over the runtime bound";
    }
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.number << "] " << c.title << " (" << time
              << "): " << o.detail << "\n";
    if (!o.ok) ++failed;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : "acceptance: all criteria pass")
            << "\n";
  return failed ? 1 : 0;
}
