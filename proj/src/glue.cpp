#include "gluing/glue.hpp"

#include <set>

#include "gluing/errors.hpp"
#include "gluing/fixtures.hpp"

namespace gluing {

const SpaceMap& GluedSpace::leg(const GlObject& a) const {
  auto it = legs.find(a);
  if (it == legs.end()) throw MissingLeg("MissingLeg: no leg for an object of the index category");
  return it->second;
}

Relation build_relation(const GluingData& gd) {
  Report r = validate(gd);
  if (!r.ok()) throw ValidationFailed(std::move(r));
  const int n = static_cast<int>(gd.n());
  std::vector<SpacePtr> patches;
  for (int i = 0; i < n; ++i) patches.push_back(gd.patch(i));
  Relation rel;
  rel.coproduct = disjoint_union(patches, gd.index.names(), "⊔U");
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const SpaceMap& ei = rel.coproduct.injections[static_cast<std::size_t>(i)];
      const SpaceMap& ej = rel.coproduct.injections[static_cast<std::size_t>(j)];
      for (std::size_t u = 0; u < gd.overlap(i, j)->size(); ++u) {
        std::size_t x = gd.anchor(i, j)(u);
        std::size_t y = gd.anchor(j, i)(gd.transition(i, j)(u));
        pairs.emplace(ei(x), ej(y));
      }
    }
  rel.pairs.assign(pairs.begin(), pairs.end());
  return rel;
}

Report check_equivalence(const Relation& rel) {
  Report r;
  r.title = "equivalence of the overlap relation";
  const auto& X = *rel.coproduct.space;
  std::set<std::pair<std::size_t, std::size_t>> s(rel.pairs.begin(), rel.pairs.end());
  auto name = [&](std::size_t p) { return X.point(p); };
  r.add("reflexive");
  r.add("symmetric");
  r.add("transitive");
  for (std::size_t p = 0; p < X.size(); ++p)
    r.record("reflexive", s.count({p, p}) != 0, name(p) + " is not related to itself");
  for (auto [p, q] : s)
    r.record("symmetric", s.count({q, p}) != 0,
             name(p) + " ~ " + name(q) + " but not " + name(q) + " ~ " + name(p));
  std::map<std::size_t, std::vector<std::size_t>> succ;
  for (auto [p, q] : s) succ[p].push_back(q);
  for (auto [p, q] : s)
    for (std::size_t t : succ[q])
      r.record("transitive", s.count({p, t}) != 0,
               name(p) + " ~ " + name(q) + " ~ " + name(t) + " but not " + name(p) + " ~ " +
                   name(t));
  return r;
}

GluedSpace glue(const GluingFunctor& f) {
  const GluingData& gd = f.data();
  GluedSpace out;
  out.relation = build_relation(gd);
  Report eq = check_equivalence(out.relation);
  if (!eq.ok()) throw NotEquivalence("NotEquivalence\n" + eq.render());
  Quotient q = quotient(out.relation.coproduct.space, out.relation.pairs,
                        "Q(" + (gd.name.empty() ? std::string("gluing") : gd.name) + ")");
  out.space = q.space;
  out.projection = q.projection;
  for (const auto& members : q.classes) {
    std::vector<std::string> names;
    for (std::size_t m : members) names.push_back(out.relation.coproduct.space->point(m));
    out.classes.push_back(std::move(names));
  }
  Cone c{out.space, {}};
  for (int i = 0; i < static_cast<int>(gd.n()); ++i)
    c.legs.emplace(GlObject::single(i),
                   compose(q.projection, out.relation.coproduct.injections[static_cast<std::size_t>(i)]));
  out.legs = complete_cone(f, std::move(c)).legs;
  return out;
}

GluedSpace glue(const GluingData& gd) { return glue(GluingFunctor(gd)); }

Cone complete_cone(const GluingFunctor& f, Cone cone) {
  for (const auto& a : f.category().objects()) {
    if (cone.legs.count(a)) continue;
    GlObject base = GlObject::single(a.i);
    auto it = cone.legs.find(base);
    if (it == cone.legs.end())
      throw MissingLeg("MissingLeg: patch leg " + base.str(f.index()) + " absent");
    auto m = f.category().hom(base, a);
    cone.legs.emplace(a, compose(it->second, f.eval(*m)));
  }
  return cone;
}

Cone cone_of(const GluedSpace& g) { return Cone{g.space, g.legs}; }

const char* to_string(ConeMode m) {
  switch (m) {
    case ConeMode::full: return "full";
    case ConeMode::figure3: return "figure3";
    case ConeMode::figure4: return "figure4";
  }
  return "?";
}

std::optional<ConeMode> parse_cone_mode(const std::string& s) {
  if (s == "full") return ConeMode::full;
  if (s == "figure3") return ConeMode::figure3;
  if (s == "figure4") return ConeMode::figure4;
  return std::nullopt;
}

bool check_cone(const GluingFunctor& f, const Cone& cone, ConeMode mode, std::string* witness) {
  const IndexSet& idx = f.index();
  auto leg = [&](const GlObject& a) -> const SpaceMap& {
    auto it = cone.legs.find(a);
    if (it == cone.legs.end()) throw MissingLeg("MissingLeg: cone has no leg at " + a.str(idx));
    return it->second;
  };
  auto fail = [&](const std::string& w) {
    if (witness) *witness = w;
    return false;
  };
  // psi_a o F(a -> b) must equal psi_b.
  auto commutes = [&](const GlObject& a, const SpaceMap& image, const GlObject& b,
                      const std::string& what) -> std::optional<std::string> {
    auto diff = compose(leg(a), image).difference(leg(b));
    if (diff) return what + ": " + *diff;
    return std::nullopt;
  };
  for (const auto& a : f.category().objects()) {
    const SpaceMap& m = leg(a);
    if (!m.cod()->same_topology(*cone.apex)) return fail("leg at " + a.str(idx) + " misses the apex");
    if (!m.continuous()) return fail("leg at " + a.str(idx) + " is not continuous");
  }
  const int n = static_cast<int>(idx.size());
  if (mode == ConeMode::full) {
    for (const auto& a : f.category().objects())
      for (const auto& b : f.category().objects()) {
        auto m = f.category().hom(a, b);
        if (!m || a == b) continue;
        if (auto w = commutes(a, f.eval(*m), b, a.str(idx) + " -> " + b.str(idx))) return fail(*w);
      }
    return true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const GlObject ij = normalize({i, j});
      const GlObject ji = normalize({j, i});
      const std::string at = "(" + idx.name(i) + "," + idx.name(j) + ")";
      if (mode == ConeMode::figure3) {
        if (auto w = commutes(ji, f.generator_image(Generator::tau(i, j)), ij, "(a) tau" + at))
          return fail(*w);
      } else {
        SpaceMap via = compose(f.generator_image(Generator::eta(j, i)),
                               f.generator_image(Generator::tau(i, j)));
        if (auto w = commutes(GlObject::single(j), via, ij, "(a) tau eta" + at)) return fail(*w);
      }
      if (auto w = commutes(GlObject::single(i), f.generator_image(Generator::eta(i, j)), ij,
                            "(b) eta" + at))
        return fail(*w);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int up : {j, k}) {
          Generator g = Generator::eta3(up, i, j, k);
          if (g.is_identity()) continue;
          const std::string at = "(c) " + g.label(idx);
          if (auto w = commutes(g.dom(), f.generator_image(g), g.cod(), at)) return fail(*w);
        }
  return true;
}

Report check_glued_properties(const GluingFunctor& f, const GluedSpace& candidate) {
  Report r;
  r.title = "glued-space properties";
  const GluingData& gd = f.data();
  const IndexSet& idx = f.index();
  const int n = static_cast<int>(gd.n());
  const auto& Q = *candidate.space;
  const std::string a = "(a) pair legs factor through anchors";
  const std::string b = "(b) triple legs factor through projections";
  const std::string c = "(c) legs agree on overlaps";
  const std::string d = "(d) images cover Q";
  const std::string e = "(e) overlap images are intersections";
  const std::string fi = "(f) legs injective and continuous";
  const std::string g = "(g) Q carries the final topology";
  for (const auto& name : {a, b, c, d, e, fi, g}) r.add(name);

  Cone full = complete_cone(f, cone_of(candidate));
  auto leg = [&](const GlObject& o) -> const SpaceMap& { return full.legs.at(o); };
  auto eq = [&](const std::string& check, const SpaceMap& x, const SpaceMap& y,
                const std::string& where) {
    auto diff = x.difference(y);
    r.record(check, !diff, where + ": " + diff.value_or(""));
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::string at = "(" + idx.name(i) + "," + idx.name(j) + ")";
      eq(a, leg(normalize({i, j})), compose(leg(GlObject::single(i)), gd.anchor(i, j)), at);
      eq(c, compose(leg(GlObject::single(i)), gd.anchor(i, j)),
         compose(leg(GlObject::single(j)), compose(gd.anchor(j, i), gd.transition(i, j))), at);
    }
  for (const auto& o : f.category().objects()) {
    if (o.kind != GlObject::Kind::triple) continue;
    for (int up : {o.j, o.k}) {
      Generator gen = Generator::eta3(up, o.i, o.j, o.k);
      eq(b, leg(o), compose(leg(normalize({o.i, up})), f.generator_image(gen)), gen.label(idx));
    }
  }
  PointSet covered(Q.size());
  std::vector<PointSet> images;
  for (int i = 0; i < n; ++i) {
    images.push_back(leg(GlObject::single(i)).image());
    covered |= images.back();
  }
  for (std::size_t q = 0; q < Q.size(); ++q)
    r.record(d, covered.contains(q), Q.point(q) + " lies in no image");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::string at = "(" + idx.name(i) + "," + idx.name(j) + ")";
      PointSet via_i = leg(GlObject::single(i)).image(gd.anchor(i, j).image());
      PointSet via_j = leg(GlObject::single(j)).image(gd.anchor(j, i).image());
      PointSet meet = images[static_cast<std::size_t>(i)] & images[static_cast<std::size_t>(j)];
      r.record(e, via_i == via_j && via_i == meet,
               at + ": " + Q.describe(via_i) + ", " + Q.describe(via_j) + ", intersection " +
                   Q.describe(meet));
    }
  for (int i = 0; i < n; ++i) {
    const SpaceMap& l = leg(GlObject::single(i));
    MapReport mr = analyze_map(l);
    r.record(fi, mr.injective && mr.continuous,
             "leg " + idx.name(i) + ": " + (mr.witnesses.empty() ? "" : mr.witnesses.front()));
  }
  // Final-topology minimal opens: close {q} under images of minimal opens of
  // preimage points, then compare with the candidate's table.
  for (std::size_t q = 0; q < Q.size(); ++q) {
    PointSet v(Q.size());
    v.insert(q);
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < n; ++i) {
        const SpaceMap& l = leg(GlObject::single(i));
        for (std::size_t x : l.preimage(v).elements()) {
          PointSet add = l.image(l.dom()->min_open(x));
          if (!add.subset_of(v)) {
            v |= add;
            grew = true;
          }
        }
      }
    }
    r.record(g, v == Q.min_open(q),
             "min_open(" + Q.point(q) + ") is " + Q.describe(Q.min_open(q)) +
                 " but the final topology gives " + Q.describe(v));
  }
  r.notes.push_back("(g) is an added diagnostic; (a)-(f) alone do not pin down the topology of Q");
  return r;
}

SpaceMap mediate(const GluingFunctor& f, const GluedSpace& glued, const Cone& cone) {
  const GluingData& gd = f.data();
  const IndexSet& idx = f.index();
  const int n = static_cast<int>(gd.n());
  const auto& Q = *glued.space;
  Cone full = complete_cone(f, cone);
  std::vector<std::optional<std::size_t>> value(Q.size());
  std::vector<std::string> source(Q.size());
  for (int i = 0; i < n; ++i) {
    const SpaceMap& iota = glued.leg(GlObject::single(i));
    const SpaceMap psi = retarget(full.legs.at(GlObject::single(i)), iota.dom(), cone.apex, "cone leg");
    for (std::size_t x = 0; x < iota.dom()->size(); ++x) {
      std::size_t q = iota(x);
      std::string here = iota.dom()->point(x) + "@" + idx.name(i);
      if (!value[q]) {
        value[q] = psi(x);
        source[q] = here;
      } else if (*value[q] != psi(x)) {
        throw IllDefined("IllDefined(" + source[q] + ", " + here + "): both reach " + Q.point(q) +
                         " but the cone sends them to " + cone.apex->point(*value[q]) + " and " +
                         cone.apex->point(psi(x)));
      }
    }
  }
  // The relation pairs are checked separately so that a candidate whose legs
  // were built elsewhere still has every identification examined.
  if (!glued.relation.pairs.empty()) {
    const auto& X = *glued.relation.coproduct.space;
    std::vector<std::pair<int, std::size_t>> origin(X.size());
    for (int i = 0; i < n; ++i) {
      const SpaceMap& inj = glued.relation.coproduct.injections[static_cast<std::size_t>(i)];
      for (std::size_t x = 0; x < inj.dom()->size(); ++x) origin[inj(x)] = {i, x};
    }
    for (auto [p, q] : glued.relation.pairs) {
      auto [i, x] = origin[p];
      auto [j, y] = origin[q];
      const SpaceMap& ei = glued.relation.coproduct.injections[static_cast<std::size_t>(i)];
      const SpaceMap& ej = glued.relation.coproduct.injections[static_cast<std::size_t>(j)];
      std::size_t a = retarget(full.legs.at(GlObject::single(i)), ei.dom(), cone.apex)(x);
      std::size_t b = retarget(full.legs.at(GlObject::single(j)), ej.dom(), cone.apex)(y);
      if (a != b)
        throw IllDefined("IllDefined(" + X.point(p) + ", " + X.point(q) + ")");
    }
  }
  std::vector<std::size_t> table(Q.size());
  for (std::size_t q = 0; q < Q.size(); ++q) {
    if (!value[q]) throw NotCovering("NotCovering: " + Q.point(q) + " has no provenance");
    table[q] = *value[q];
  }
  SpaceMap mu(glued.space, cone.apex, std::move(table));
  for (const auto& [a, psi] : full.legs) {
    auto it = glued.legs.find(a);
    if (it == glued.legs.end()) continue;
    auto diff = compose(mu, it->second).difference(psi);
    if (diff) throw IllDefined("IllDefined: leg " + a.str(idx) + " does not factor: " + *diff);
  }
  if (!mu.continuous()) {
    MapReport mr = analyze_map(mu);
    throw NotContinuous("mediating map is not continuous: " +
                        (mr.witnesses.empty() ? std::string() : mr.witnesses.front()));
  }
  return mu;
}

Report verify_universal(const GluingFunctor& f, const GluedSpace& glued,
                        const UniversalOptions& opts) {
  Report r;
  r.title = "universal property";
  const GluingData& gd = f.data();
  const int n = static_cast<int>(gd.n());
  std::vector<SpacePtr> apexes = opts.apexes;
  if (apexes.empty()) apexes = {fixtures::pt(), fixtures::sierp(), fixtures::disc2(), fixtures::arc3()};
  if (opts.include_self) apexes.push_back(glued.space);

  std::string w;
  r.record("candidate legs form a cone", check_cone(f, complete_cone(f, cone_of(glued)),
                                                    ConeMode::figure4, &w),
           w);
  for (const auto& N : apexes) {
    const std::string check = "unique mediator, apex " + N->name();
    r.add(check);
    std::vector<std::vector<SpaceMap>> choices;
    std::uint64_t combos = 1;
    for (int i = 0; i < n; ++i) {
      choices.push_back(enumerate_continuous_maps(gd.patch(i), N, opts.budget));
      combos *= std::max<std::uint64_t>(1, choices.back().size());
      if (combos > opts.budget.max_candidates)
        throw SearchBudgetExceeded("SearchBudgetExceeded: too many leg families for apex " +
                                   N->name());
    }
    std::vector<SpaceMap> maps = enumerate_continuous_maps(glued.space, N, opts.budget);
    std::size_t cones = 0;
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    bool done = n == 0;
    for (const auto& ch : choices)
      if (ch.empty()) done = true;
    while (!done) {
      Cone c{N, {}};
      for (int i = 0; i < n; ++i)
        c.legs.emplace(GlObject::single(i), choices[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]);
      c = complete_cone(f, std::move(c));
      if (check_cone(f, c, ConeMode::figure4)) {
        ++cones;
        std::vector<const SpaceMap*> found;
        for (const auto& mu : maps) {
          bool ok = true;
          for (int i = 0; i < n && ok; ++i)
            ok = compose(mu, glued.leg(GlObject::single(i)))
                     .equals(c.legs.at(GlObject::single(i)));
          if (ok) found.push_back(&mu);
        }
        std::string legs;
        for (int i = 0; i < n; ++i) {
          const auto& m = c.legs.at(GlObject::single(i));
          legs += " psi_" + gd.index.name(i) + "=";
          for (std::size_t x = 0; x < m.dom()->size(); ++x)
            legs += (x ? "," : "") + m.dom()->point(x) + ">" + N->point(m(x));
        }
        bool ok = found.size() == 1;
        std::string why = std::to_string(found.size()) + " mediators for cone" + legs;
        if (ok) {
          try {
            ok = mediate(f, glued, c).equals(*found.front());
            if (!ok) why = "mediate disagrees with the enumerated map for cone" + legs;
          } catch (const CheckFailure& e) {
            ok = false;
            why = std::string("mediate rejects cone") + legs + ": " + e.what();
          }
        }
        r.record(check, ok, why);
      }
      std::size_t p = 0;
      while (p < pick.size()) {
        if (++pick[p] < choices[p].size()) break;
        pick[p] = 0;
        ++p;
      }
      done = p == pick.size();
    }
    r.notes.push_back("apex " + N->name() + ": " + std::to_string(cones) + " cones checked");
  }
  return r;
}

Report check_otop(const GluingFunctor& f, const GluedSpace& glued) {
  Report r;
  r.title = "open-map gluing";
  const GluingData& gd = f.data();
  const IndexSet& idx = gd.index;
  const int n = static_cast<int>(gd.n());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::string at = "(" + idx.name(i) + "," + idx.name(j) + ")";
      MapReport ma = analyze_map(gd.anchor(i, j));
      MapReport mt = analyze_map(gd.transition(i, j));
      if (!ma.open_map) {
        r.applicable = false;
        r.notes.push_back("anchor " + at + " is not open: " + ma.witnesses.front());
      }
      if (!mt.open_map) {
        r.applicable = false;
        r.notes.push_back("transition " + at + " is not open: " + mt.witnesses.front());
      }
    }
  const auto& Q = *glued.space;
  PointSet covered(Q.size());
  for (int i = 0; i < n; ++i) {
    const SpaceMap& l = glued.leg(GlObject::single(i));
    MapReport mr = analyze_map(l);
    r.record("legs are embeddings", mr.embedding,
             "leg " + idx.name(i) + ": " + (mr.witnesses.empty() ? "" : mr.witnesses.front()));
    PointSet img = l.image();
    r.record("leg images are open", Q.is_open(img), "image of leg " + idx.name(i) + " is " +
                                                         Q.describe(img));
    covered |= img;
  }
  for (std::size_t q = 0; q < Q.size(); ++q)
    r.record("images cover Q", covered.contains(q), Q.point(q) + " uncovered");
  return r;
}

}  // namespace gluing
