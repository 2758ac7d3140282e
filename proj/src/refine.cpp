#include "gluing/refine.hpp"

#include <set>

#include "gluing/errors.hpp"

namespace gluing {

IndexMap IndexMap::identity(const IndexSet& s) {
  IndexMap m{s, s, {}};
  for (std::size_t i = 0; i < s.size(); ++i) m.table.push_back(static_cast<int>(i));
  return m;
}

bool IndexMap::surjective() const {
  std::set<int> hit(table.begin(), table.end());
  return hit.size() == target.size();
}

bool IndexMap::injective() const {
  std::set<int> hit(table.begin(), table.end());
  return hit.size() == table.size();
}

GlObject reindex_object(const IndexMap& gamma, const GlObject& a) {
  std::vector<int> t;
  for (int x : a.tuple()) t.push_back(gamma(x));
  return normalize(t);
}

Generator reindex_generator(const IndexMap& gamma, const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::eta: return Generator::eta(gamma(g.i), gamma(g.j));
    case Generator::Kind::tau: return Generator::tau(gamma(g.i), gamma(g.j));
    case Generator::Kind::eta3:
      return Generator::eta3(gamma(g.n), gamma(g.i), gamma(g.j), gamma(g.k));
    case Generator::Kind::tau3: return Generator::tau3(gamma(g.i), gamma(g.j), gamma(g.k));
  }
  return g;
}

Reindexing reindex(const IndexMap& gamma) {
  Reindexing out;
  GlCategory cat(gamma.source.size());
  for (const auto& a : cat.objects()) out.objects.emplace(a, reindex_object(gamma, a));
  for (const auto& g : cat.generators()) out.generators.emplace_back(g, reindex_generator(gamma, g));
  return out;
}

Report check_reindex(const IndexMap& gamma) {
  Report r;
  r.title = "reindexing functoriality";
  const GlCategory source(gamma.source.size());
  const GlCategory target(gamma.target.size());
  Reindexing t = reindex(gamma);
  for (const auto& [g, h] : t.generators) {
    const std::string w = g.label(gamma.source) + " -> " + h.label(gamma.target);
    r.record("generator endpoints follow objects",
             t.objects.at(g.dom()) == h.dom() && t.objects.at(g.cod()) == h.cod(), w);
    r.record("identities preserved", !g.is_identity() || h.is_identity(), w);
  }
  // Every morphism a -> b maps to a morphism gamma(a) -> gamma(b); composites
  // of images then agree by uniqueness in the target category.
  for (const auto& a : source.objects())
    for (const auto& b : source.objects()) {
      if (!source.hom(a, b)) continue;
      r.record("hom sets preserved",
               target.hom(t.objects.at(a), t.objects.at(b)).has_value(),
               a.str(gamma.source) + " -> " + b.str(gamma.source));
    }
  return r;
}

namespace {

SpaceMap fine_image(const Refinement& r, const Generator& g) {
  return r.fine->generator_image(reindex_generator(r.gamma, g));
}

const SpaceMap& component(const Refinement& r, const GlObject& a) {
  auto it = r.components.find(a);
  if (it == r.components.end())
    throw MissingComponent("MissingComponent: refinement '" + r.name + "' has no component at " +
                           a.str(r.gamma.source));
  return it->second;
}

// Point of F(a) forced by the constraint maps; each pair (project, want) asks
// that project(s) equal want.
std::optional<std::size_t> forced_point(
    const SpacePtr& space, const std::vector<std::pair<const SpaceMap*, std::size_t>>& constraints) {
  std::optional<std::size_t> found;
  for (std::size_t s = 0; s < space->size(); ++s) {
    bool ok = true;
    for (const auto& [proj, want] : constraints) ok = ok && (*proj)(s) == want;
    if (!ok) continue;
    if (found) return std::nullopt;
    found = s;
  }
  return found;
}

}  // namespace

Refinement identity_refinement(const FunctorPtr& f) {
  Refinement r{"id", IndexMap::identity(f->index()), f, f, {}};
  for (const auto& a : f->category().objects())
    r.components.emplace(a, SpaceMap::identity(f->object(a)));
  return r;
}

Refinement complete_refinement(Refinement r) {
  const GluingFunctor& F = *r.coarse;
  const IndexSet& idx = r.gamma.source;
  for (const auto& a : F.category().objects()) {
    if (r.components.count(a)) continue;
    if (a.kind == GlObject::Kind::single) component(r, a);  // throws
    const SpacePtr dom = r.fine->object(reindex_object(r.gamma, a));
    const SpacePtr cod = F.object(a);
    // Each naturality square with a generator into a pins down rho_a(u)
    // through the coarse image of that generator.
    std::vector<std::pair<Generator, GlObject>> into;
    if (a.kind == GlObject::Kind::pair) {
      into.emplace_back(Generator::eta(a.i, a.j), GlObject::single(a.i));
    } else {
      into.emplace_back(Generator::eta3(a.j, a.i, a.j, a.k), normalize({a.i, a.j}));
      into.emplace_back(Generator::eta3(a.k, a.i, a.j, a.k), normalize({a.i, a.k}));
    }
    std::vector<SpaceMap> coarse_maps, pushed;
    for (const auto& [g, from] : into) {
      coarse_maps.push_back(F.generator_image(g));
      pushed.push_back(compose(component(r, from), fine_image(r, g)));
    }
    if (a.kind == GlObject::Kind::pair) {
      // The transition square through [j,i] adds a second constraint.
      Generator t = Generator::tau(a.j, a.i);
      GlObject ji = normalize({a.j, a.i});
      if (r.components.count(ji)) {
        coarse_maps.push_back(F.generator_image(t));
        pushed.push_back(compose(component(r, ji), fine_image(r, t)));
      }
    }
    std::vector<std::size_t> table(dom->size());
    for (std::size_t u = 0; u < dom->size(); ++u) {
      std::vector<std::pair<const SpaceMap*, std::size_t>> constraints;
      for (std::size_t c = 0; c < coarse_maps.size(); ++c)
        constraints.emplace_back(&coarse_maps[c], pushed[c](u));
      auto s = forced_point(cod, constraints);
      if (!s)
        throw MissingComponent("MissingComponent: refinement '" + r.name + "' component at " +
                               a.str(idx) + " is not forced at point " + dom->point(u));
      table[u] = *s;
    }
    r.components.emplace(a, SpaceMap(dom, cod, std::move(table)));
  }
  return r;
}

Report check_refinement(const Refinement& r) {
  Report out;
  out.title = "refinement " + r.name;
  const GluingFunctor& F = *r.coarse;
  const GluingFunctor& G = *r.fine;
  const IndexSet& idx = r.gamma.source;
  const std::string typed = "components typed and continuous";
  const std::string nat = "naturality squares commute";
  out.add(typed);
  out.add(nat);
  if (!(F.index() == r.gamma.source) || !(G.index() == r.gamma.target)) {
    out.record(typed, false, "index map does not match the functors' index sets");
    return out;
  }
  for (const auto& a : F.category().objects()) {
    const SpaceMap& rho = component(r, a);
    bool ok = rho.dom()->same_topology(*G.object(reindex_object(r.gamma, a))) &&
              rho.cod()->same_topology(*F.object(a));
    out.record(typed, ok, a.str(idx) + ": component has the wrong domain or codomain");
    if (ok) out.record(typed, rho.continuous(), a.str(idx) + ": component not continuous");
  }
  if (!out.ok()) return out;
  for (const auto& g : F.category().generators()) {
    if (g.is_identity()) continue;
    // rho_a o G(gamma g) = F(g) o rho_b as maps G(gamma b) -> F(a)
    SpaceMap lhs = compose(component(r, g.dom()), fine_image(r, g));
    SpaceMap rhs = compose(F.generator_image(g), component(r, g.cod()));
    auto diff = lhs.difference(rhs);
    out.record(nat, !diff, g.label(idx) + ": " + diff.value_or(""));
  }
  if (!r.gamma.injective())
    out.notes.push_back("index map is not injective; collapsed pairs are read through normalization");
  return out;
}

Refinement compose_refinements(const Refinement& outer, const Refinement& inner) {
  if (outer.fine.get() != inner.coarse.get() &&
      !same_data(outer.fine->data(), inner.coarse->data()))
    throw CompositionMismatch("CompositionMismatch: refinements do not share a middle functor");
  Refinement r;
  r.name = outer.name + " o " + inner.name;
  r.gamma = IndexMap{outer.gamma.source, inner.gamma.target, {}};
  for (int x : outer.gamma.table) r.gamma.table.push_back(inner.gamma(x));
  r.fine = inner.fine;
  r.coarse = outer.coarse;
  for (const auto& a : outer.coarse->category().objects()) {
    const SpaceMap& o = component(outer, a);
    const SpaceMap& i = component(inner, reindex_object(outer.gamma, a));
    r.components.emplace(a, compose(o, i));
  }
  return r;
}

SpaceMap induced_map(const Refinement& r, const GluedSpace& glued_fine,
                     const GluedSpace& glued_coarse) {
  if (!r.gamma.surjective())
    throw MissingComponent("index map of refinement '" + r.name +
                           "' is not surjective; some fine patch has no coarse leg");
  const GluingFunctor& F = *r.coarse;
  const GluingFunctor& G = *r.fine;
  // Cone over the fine functor with apex the coarse glued space: the leg at
  // gamma(a) is iota^F_a o rho_a.
  Cone cone{glued_coarse.space, {}};
  for (const auto& a : F.category().objects()) {
    GlObject target = reindex_object(r.gamma, a);
    SpaceMap leg = compose(glued_coarse.leg(a), component(r, a));
    auto [it, fresh] = cone.legs.emplace(target, leg);
    if (!fresh) {
      auto diff = it->second.difference(leg);
      if (diff)
        throw IllDefined("IllDefined: refinement '" + r.name + "' gives two legs at " +
                         target.str(r.gamma.target) + ": " + *diff);
    }
  }
  Cone full = complete_cone(G, std::move(cone));
  return mediate(G, glued_fine, full);
}

ComposedGluing compose_gdf(const GdfGluingData& meta) {
  ComposedGluing out;
  out.report.title = "composed gluing " + meta.name;
  const IndexSet& idx = meta.index;
  const GlCategory cat(idx.size());
  const int n = static_cast<int>(idx.size());

  auto node = [&](const GlObject& a) -> const FunctorPtr& {
    auto it = meta.nodes.find(a);
    if (it == meta.nodes.end())
      throw MissingComponent("MissingComponent: meta gluing '" + meta.name + "' has no node at " +
                             a.str(idx));
    return it->second;
  };
  for (const auto& a : cat.objects()) out.node_glued.emplace(a, glue(*node(a)));
  out.report.record("nodes glue", true);

  auto edge = [&](const GlObject& a, const GlObject& b) -> const Refinement& {
    auto it = meta.edges.find({a, b});
    if (it == meta.edges.end())
      throw MissingComponent("MissingComponent: meta gluing '" + meta.name + "' has no edge " +
                             a.str(idx) + " -> " + b.str(idx));
    return it->second;
  };
  Report edges;
  for (const auto& [ends, r] : meta.edges) {
    const auto& [a, b] = ends;
    bool wired = r.fine.get() == node(b).get() && r.coarse.get() == node(a).get();
    edges.record("edges connect their nodes", wired, a.str(idx) + " -> " + b.str(idx));
    edges.merge(check_refinement(r), a.str(idx) + " -> " + b.str(idx) + ": ");
  }
  out.report.merge(edges);
  if (!edges.ok()) throw ValidationFailed(out.report);

  auto induce = [&](const GlObject& a, const GlObject& b) -> const SpaceMap& {
    auto key = std::make_pair(a, b);
    auto it = out.induced.find(key);
    if (it != out.induced.end()) return it->second;
    SpaceMap mu = induced_map(edge(a, b), out.node_glued.at(b), out.node_glued.at(a));
    return out.induced.emplace(key, std::move(mu)).first->second;
  };

  std::vector<SpacePtr> patches;
  std::map<std::pair<int, int>, SpacePtr> overlaps;
  std::map<std::pair<int, int>, SpaceMap> anchors, transitions;
  for (int i = 0; i < n; ++i) patches.push_back(out.node_glued.at(GlObject::single(i)).space);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      GlObject ij = normalize({i, j});
      overlaps[{i, j}] = out.node_glued.at(ij).space;
      anchors.emplace(std::make_pair(i, j), induce(GlObject::single(i), ij));
      transitions.emplace(std::make_pair(i, j), induce(normalize({j, i}), ij));
    }
  out.data = make_gluing_data(meta.name, idx, patches, overlaps, anchors, transitions);
  out.data = derive_triple_maps(std::move(out.data), false);
  Report v = validate(out.data);
  out.report.merge(v, "composed data: ");

  for (const auto& o : cat.objects()) {
    if (o.kind != GlObject::Kind::triple) continue;
    const std::string name = "hypothesis (b) at " + o.str(idx);
    const SpaceMap& to_j = induce(normalize({o.i, o.j}), o);
    const SpaceMap& to_k = induce(normalize({o.i, o.k}), o);
    const Pullback& P = out.data.triple(o.i, o.j, o.k);
    SpaceMap canonical;
    try {
      canonical = pair_into(P, to_j, to_k);
    } catch (const CompositionMismatch& e) {
      throw HypothesisBFailed("HypothesisBFailed" + o.str(idx) +
                              ": glued triple does not land in the pullback: " + e.what());
    }
    if (!is_homeomorphism(canonical)) {
      MapReport mr = analyze_map(canonical);
      std::string why = canonical.dom()->size() != canonical.cod()->size()
                            ? std::to_string(canonical.dom()->size()) + " points against " +
                                  std::to_string(canonical.cod()->size()) + " in the pullback"
                            : (mr.witnesses.empty() ? std::string("not a homeomorphism")
                                                    : mr.witnesses.front());
      throw HypothesisBFailed("HypothesisBFailed" + o.str(idx) + ": " + why);
    }
    out.report.record(name, true);
  }
  if (!v.ok()) throw ValidationFailed(out.report);
  out.functor = std::make_shared<const GluingFunctor>(out.data);
  return out;
}

}  // namespace gluing
