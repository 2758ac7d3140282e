#include "gluing/cover.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gluing/errors.hpp"

namespace gluing {

const char* to_string(CoverKind k) { return k == CoverKind::open ? "open" : "gluing"; }

std::optional<CoverKind> parse_cover_kind(const std::string& s) {
  if (s == "gluing") return CoverKind::gluing;
  if (s == "open") return CoverKind::open;
  return std::nullopt;
}

Report check_covering(const Covering& c) {
  Report r;
  r.title = "covering " + c.name + " (" + to_string(c.kind) + ")";
  const std::string typed = "legs land in the base";
  const std::string inj = "legs injective";
  const std::string cont = "legs continuous";
  const std::string open = "legs open";
  const std::string cover = "images cover the base";
  r.add(typed);
  r.add(inj);
  r.add(cont);
  if (c.kind == CoverKind::open) r.add(open);
  r.add(cover);
  PointSet hit(c.base->size());
  for (std::size_t n = 0; n < c.legs.size(); ++n) {
    const SpaceMap& leg = c.legs[n];
    const std::string who = "leg " + std::to_string(n + 1) + " from " + leg.dom()->name();
    if (!leg.cod()->same_topology(*c.base)) {
      r.record(typed, false, who + " lands in " + leg.cod()->name());
      continue;
    }
    const SpaceMap l = retarget(leg, leg.dom(), c.base);
    MapReport m = analyze_map(l);
    r.record(inj, m.injective, who + (m.witnesses.empty() ? "" : ": " + m.witnesses.front()));
    r.record(cont, m.continuous, who);
    if (c.kind == CoverKind::open) r.record(open, m.open_map, who);
    hit |= l.image();
  }
  for (std::size_t x = 0; x < c.base->size(); ++x)
    r.record(cover, hit.contains(x), "uncovered point " + c.base->point(x));
  return r;
}

CoveringGluing functor_of_covering(const Covering& c) {
  Report pre = check_covering(c);
  if (!pre.ok()) throw ValidationFailed(pre);
  const int m = static_cast<int>(c.legs.size());
  std::vector<SpaceMap> legs;
  std::vector<SpacePtr> patches;
  for (const auto& l : c.legs) {
    legs.push_back(retarget(l, l.dom(), c.base));
    patches.push_back(l.dom());
  }
  const IndexSet idx = IndexSet::numbered(static_cast<std::size_t>(m));
  std::map<std::pair<int, int>, Pullback> pbs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j)
        pbs.emplace(std::make_pair(i, j),
                    pullback(legs[i], legs[j], "U" + idx.name(i) + "∧U" + idx.name(j)));
  std::map<std::pair<int, int>, SpacePtr> overlaps;
  std::map<std::pair<int, int>, SpaceMap> anchors, transitions;
  for (const auto& [ij, pb] : pbs) {
    const auto [i, j] = ij;
    overlaps[ij] = pb.space;
    anchors.emplace(ij, pb.first);
    transitions.emplace(ij, pair_into(pbs.at({j, i}), pb.second, pb.first));
  }
  CoveringGluing out{derive_triple_maps(make_gluing_data("G(" + c.name + ")", idx, patches,
                                                         overlaps, anchors, transitions)),
                     {}, std::nullopt, {}};
  out.report.title = "gluing data of covering " + c.name;
  GluingFunctor f(out.data);
  out.glued = glue(f);

  const std::string cone = "covering legs form a cone";
  const std::string iso = "glued space homeomorphic to the base";
  const std::string in_base = "intersection equalities in the base";
  const std::string in_q = "intersection equalities in Q";
  Cone k{c.base, {}};
  for (int i = 0; i < m; ++i) k.legs.emplace(GlObject::single(i), legs[i]);
  k = complete_cone(f, std::move(k));
  std::string w;
  bool is_cone = check_cone(f, k, ConeMode::full, &w);
  out.report.record(cone, is_cone, w);
  if (is_cone) {
    out.comparison = mediate(f, out.glued, k);
    MapReport mr = analyze_map(*out.comparison);
    out.report.record(iso, is_homeomorphism(*out.comparison),
                      mr.witnesses.empty() ? "comparison map is not bijective" : mr.witnesses.front());
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const std::string at = "(" + idx.name(i) + "," + idx.name(j) + ")";
      const SpaceMap& a = out.data.anchor(i, j);
      PointSet lhs = legs[i].image(a.image());
      PointSet rhs = legs[i].image() & legs[j].image();
      out.report.record(in_base, lhs == rhs,
                        at + ": " + c.base->describe(lhs) + " vs " + c.base->describe(rhs));
      const SpaceMap& qi = out.glued.leg(GlObject::single(i));
      const SpaceMap& qj = out.glued.leg(GlObject::single(j));
      PointSet ql = qi.image(a.image());
      PointSet qr = qi.image() & qj.image();
      out.report.record(in_q, ql == qr,
                        at + ": " + out.glued.space->describe(ql) + " vs " +
                            out.glued.space->describe(qr));
    }
  for (std::size_t n = 0; n < legs.size(); ++n)
    if (!analyze_map(legs[n]).embedding)
      out.report.notes.push_back("leg " + std::to_string(n + 1) +
                                 " is not an embedding; Q carries the finer topology of the patches");
  return out;
}

Covering covering_of_glued(const GluingFunctor& f, const GluedSpace& glued) {
  const GluingData& gd = f.data();
  Covering c{"cover(" + glued.space->name() + ")", glued.space, {}, CoverKind::open};
  for (int i = 0; i < static_cast<int>(gd.n()); ++i) {
    c.legs.push_back(glued.leg(GlObject::single(i)));
    for (int j = 0; j < static_cast<int>(gd.n()); ++j)
      if (!analyze_map(gd.anchor(i, j)).open_map || !analyze_map(gd.transition(i, j)).open_map)
        c.kind = CoverKind::gluing;
  }
  return c;
}

bool site_axiom_iso(const SpaceMap& phi) {
  if (!is_homeomorphism(phi)) return false;
  Covering c{"iso", phi.cod(), {phi}, CoverKind::open};
  return check_covering(c).ok();
}

std::pair<Covering, bool> site_axiom_compose(const Covering& c, const std::vector<Covering>& sub) {
  if (sub.size() != c.legs.size())
    throw InputError("composite covering needs one subcovering per leg: " +
                     std::to_string(c.legs.size()) + " legs, " + std::to_string(sub.size()) +
                     " subcoverings");
  Covering out{c.name + "∘sub", c.base, {}, c.kind};
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (!sub[i].base->same_topology(*c.legs[i].dom()))
      throw CompositionMismatch("CompositionMismatch: subcovering " + std::to_string(i + 1) +
                                " covers '" + sub[i].base->name() + "', not the patch '" +
                                c.legs[i].dom()->name() + "'");
    if (sub[i].kind == CoverKind::gluing) out.kind = CoverKind::gluing;
    for (const auto& l : sub[i].legs) out.legs.push_back(compose(c.legs[i], l));
  }
  bool ok = check_covering(out).ok();
  return {std::move(out), ok};
}

std::pair<Covering, bool> site_axiom_basechange(const Covering& c, const SpaceMap& phi) {
  Covering out{c.name + "×" + phi.dom()->name(), phi.dom(), {}, c.kind};
  const SpaceMap to_base = retarget(phi, phi.dom(), c.base, "base change");
  for (std::size_t n = 0; n < c.legs.size(); ++n) {
    const SpaceMap leg = retarget(c.legs[n], c.legs[n].dom(), c.base);
    Pullback pb = pullback(leg, to_base, leg.dom()->name() + "×" + phi.dom()->name());
    out.legs.push_back(pb.second);
  }
  bool ok = check_covering(out).ok();
  return {std::move(out), ok};
}

// ---- randomized batch ----

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

SpacePtr random_space(Rng& rng, std::size_t n, const std::string& name) {
  std::vector<std::string> points;
  for (std::size_t x = 0; x < n; ++x) points.push_back("p" + std::to_string(x));
  std::vector<std::vector<std::string>> opens;
  const std::size_t k = uniform(rng, 0, n + 1);
  for (std::size_t o = 0; o < k; ++o) {
    std::vector<std::string> s;
    for (const auto& p : points)
      if (uniform(rng, 0, 1)) s.push_back(p);
    opens.push_back(std::move(s));
  }
  return share(FiniteSpace::from_opens(name, std::move(points), opens));
}

// Copy of s with renamed points and a finer topology when discrete is set,
// together with the bijection onto s.
SpaceMap relabel(const SpacePtr& s, const std::string& name, bool discrete) {
  std::vector<std::string> points;
  std::vector<PointSet> table;
  for (std::size_t x = 0; x < s->size(); ++x) {
    points.push_back(name + "." + s->point(x));
    if (discrete) {
      PointSet t(s->size());
      t.insert(x);
      table.push_back(std::move(t));
    } else {
      table.push_back(s->min_open(x));
    }
  }
  SpacePtr copy = share(FiniteSpace::from_table(name, std::move(points), std::move(table)));
  std::vector<std::size_t> id(s->size());
  std::iota(id.begin(), id.end(), std::size_t{0});
  return SpaceMap(copy, s, std::move(id));
}

Covering random_covering(Rng& rng, const SpacePtr& u, CoverKind kind, const std::string& name) {
  Covering c{name, u, {}, kind};
  PointSet hit(u->size());
  auto add_patch = [&](const PointSet& s) {
    if (s.empty()) return;
    Subspace sub = subspace(u, s);
    const bool finer = kind == CoverKind::gluing && uniform(rng, 0, 2) == 0;
    SpaceMap copy = relabel(sub.space, name + ".U" + std::to_string(c.legs.size() + 1), finer);
    c.legs.push_back(compose(sub.inclusion, copy));
    hit |= s;
  };
  const std::size_t tries = uniform(rng, 1, 3);
  for (std::size_t t = 0; t < tries; ++t) {
    PointSet s(u->size());
    for (std::size_t x = 0; x < u->size(); ++x)
      if (uniform(rng, 0, 2) == 0) s |= kind == CoverKind::open ? u->min_open(x) : PointSet(u->size());
    if (kind == CoverKind::gluing)
      for (std::size_t x = 0; x < u->size(); ++x)
        if (uniform(rng, 0, 1)) s.insert(x);
    add_patch(s);
  }
  for (std::size_t x = 0; x < u->size(); ++x) {
    if (hit.contains(x)) continue;
    PointSet s = kind == CoverKind::open ? u->min_open(x) : PointSet(u->size());
    s.insert(x);
    add_patch(s);
  }
  return c;
}

}  // namespace

SiteReport run_site_batch(std::uint64_t seed, std::size_t count, std::size_t max_points) {
  SiteReport out;
  Report& r = out.report;
  r.title = "site axioms, seed " + std::to_string(seed) + ", " + std::to_string(count) + " coverings";
  const std::string valid = "generated coverings valid";
  const std::string iso = "iso axiom";
  const std::string collapse = "iso axiom rejects collapses";
  const std::string comp = "compose axiom";
  const std::string base = "basechange axiom";
  const std::string kind = "basechange preserves kind";
  for (const auto& n : {valid, iso, collapse, comp, base, kind}) r.add(n);
  Rng rng(seed);
  for (std::size_t t = 0; t < count; ++t) {
    const std::string tag = "#" + std::to_string(t);
    const SpacePtr u = random_space(rng, uniform(rng, 1, max_points), "X" + std::to_string(t));
    const CoverKind k = t % 2 ? CoverKind::open : CoverKind::gluing;
    Covering c = random_covering(rng, u, k, "K" + std::to_string(t));
    ++out.instances;
    if (k == CoverKind::open) ++out.open_instances;
    Report cr = check_covering(c);
    r.record(valid, cr.ok(), tag + " " + cr.render());

    // Isomorphism: a relabelled, permuted copy mapping onto u.
    std::vector<std::size_t> perm(u->size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> names(u->size());
    std::vector<PointSet> table(u->size(), PointSet(u->size()));
    for (std::size_t x = 0; x < u->size(); ++x) names[perm[x]] = "v" + std::to_string(x);
    for (std::size_t x = 0; x < u->size(); ++x)
      for (std::size_t y : u->min_open(x).elements()) table[perm[x]].insert(perm[y]);
    SpacePtr v = share(FiniteSpace::from_table("V" + std::to_string(t), names, std::move(table)));
    std::vector<std::size_t> back(u->size());
    for (std::size_t x = 0; x < u->size(); ++x) back[perm[x]] = x;
    r.record(iso, site_axiom_iso(SpaceMap(v, u, back)), tag);
    if (u->size() > 1)
      r.record(collapse, !site_axiom_iso(SpaceMap::constant(u, u, 0)), tag);

    // Composition with random subcoverings of the same kind.
    std::vector<Covering> sub;
    for (std::size_t i = 0; i < c.legs.size(); ++i)
      sub.push_back(random_covering(rng, c.legs[i].dom(), k, c.name + "." + std::to_string(i + 1)));
    auto [composite, composed] = site_axiom_compose(c, sub);
    r.record(comp, composed, tag + " " + check_covering(composite).render());

    // Base change along a random continuous map from a small random space.
    SpacePtr w = random_space(rng, uniform(rng, 1, 4), "W" + std::to_string(t));
    std::vector<SpaceMap> maps = enumerate_continuous_maps(w, u);
    const SpaceMap& phi = maps[uniform(rng, 0, maps.size() - 1)];
    auto [pulled, changed] = site_axiom_basechange(c, phi);
    r.record(base, changed, tag + " " + check_covering(pulled).render());
    Covering strict = pulled;
    strict.kind = k;
    const bool kept = pulled.kind == k && check_covering(strict).ok();
    r.record(kind, kept, tag);
    if (kept) ++out.kind_preserved;
  }
  r.notes.push_back(std::to_string(out.instances) + " coverings, " +
                    std::to_string(out.open_instances) + " open, kind preserved in " +
                    std::to_string(out.kind_preserved));
  return out;
}

}  // namespace gluing
