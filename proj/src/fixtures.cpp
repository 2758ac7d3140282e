#include "gluing/fixtures.hpp"

#include <numeric>

namespace gluing::fixtures {

namespace {

SpaceMap by_name(const SpacePtr& dom, const SpacePtr& cod) {
  std::map<std::string, std::string> t;
  for (const auto& p : dom->points()) t[p] = p;
  return SpaceMap::from_names(dom, cod, t);
}

SpaceMap incl(const SpacePtr& dom, const SpacePtr& cod) { return by_name(dom, cod); }

SpacePtr copy_named(const SpacePtr& s, const std::string& name) {
  std::vector<PointSet> table;
  for (std::size_t x = 0; x < s->size(); ++x) table.push_back(s->min_open(x));
  return share(FiniteSpace::from_table(name, s->points(), std::move(table)));
}

// y coordinate of a member name "(x,y)@tag".
std::string y_of(const std::string& member) {
  auto comma = member.find(',');
  auto close = member.find(')', comma);
  return member.substr(comma + 1, close - comma - 1);
}

}  // namespace

SpacePtr pt() { return terminal(); }

SpacePtr sierp() {
  static const SpacePtr s = share(FiniteSpace::make("SIERP", {"t", "b"}, {{"t", {"t"}}, {"b", {"t", "b"}}}));
  return s;
}

SpacePtr disc2() {
  static const SpacePtr s = share(FiniteSpace::make("DISC2", {"a", "b"}, {{"a", {"a"}}, {"b", {"b"}}}));
  return s;
}

SpacePtr arc3() {
  static const SpacePtr s = share(FiniteSpace::make(
      "ARC3", {"l", "m", "r"}, {{"l", {"l"}}, {"m", {"l", "m", "r"}}, {"r", {"r"}}}));
  return s;
}

SpacePtr sq9() {
  static const SpacePtr s = product(arc3(), arc3(), "SQ9");
  return s;
}

SpacePtr c4() {
  static const SpacePtr s = share(FiniteSpace::make(
      "C4", {"l", "r", "m1", "m2"},
      {{"l", {"l"}}, {"r", {"r"}}, {"m1", {"l", "m1", "r"}}, {"m2", {"l", "m2", "r"}}}));
  return s;
}

SpacePtr ends() {
  static const SpacePtr s = subspace(arc3(), arc3()->subset({"l", "r"}), "ENDS").space;
  return s;
}

SpacePtr c4_squared() {
  static const SpacePtr s = product(c4(), c4(), "C4×C4");
  return s;
}

GluingData trivial(const SpacePtr& u) {
  return derive_triple_maps(make_gluing_data("trivial", IndexSet({"i"}), {u}, {}, {}, {}));
}

namespace {

GluingData circ_with(const std::string& name, const SpaceMap& phi21) {
  const SpacePtr d = disc2(), a = arc3();
  const SpaceMap anchor = SpaceMap::from_names(d, a, {{"a", "l"}, {"b", "r"}});
  return make_gluing_data(name, IndexSet::numbered(2), {a, a}, {{{0, 1}, d}, {{1, 0}, d}},
                          {{{0, 1}, anchor}, {{1, 0}, anchor}},
                          {{{0, 1}, SpaceMap::identity(d)}, {{1, 0}, phi21}});
}

}  // namespace

GluingData circ() { return derive_triple_maps(circ_with("GD-CIRC", SpaceMap::identity(disc2()))); }

GluingData circ_bad_inverse() {
  return circ_with("GD-CIRC-bad-inverse",
                   SpaceMap::from_names(disc2(), disc2(), {{"a", "b"}, {"b", "a"}}));
}

GluingData circ_one_identification() {
  const SpacePtr a = arc3();
  const SpacePtr o = subspace(disc2(), disc2()->subset({"a"}), "A").space;
  const SpaceMap anchor = SpaceMap::from_names(o, a, {{"a", "l"}});
  return derive_triple_maps(make_gluing_data(
      "GD-CIRC-one-identification", IndexSet::numbered(2), {a, a}, {{{0, 1}, o}, {{1, 0}, o}},
      {{{0, 1}, anchor}, {{1, 0}, anchor}},
      {{{0, 1}, SpaceMap::identity(o)}, {{1, 0}, SpaceMap::identity(o)}}));
}

GluedSpace circ_mutant_candidate() {
  GluedSpace g = glue(circ_one_identification());
  for (auto it = g.legs.begin(); it != g.legs.end();)
    it = it->first.kind == GlObject::Kind::single ? std::next(it) : g.legs.erase(it);
  return g;
}

GluingData two_disc_point() {
  const SpacePtr d = disc2();
  const SpacePtr o = subspace(d, d->subset({"a"}), "A").space;
  const SpaceMap anchor = incl(o, d);
  return derive_triple_maps(make_gluing_data(
      "two-disc-point", IndexSet::numbered(2), {d, d}, {{{0, 1}, o}, {{1, 0}, o}},
      {{{0, 1}, anchor}, {{1, 0}, anchor}},
      {{{0, 1}, SpaceMap::identity(o)}, {{1, 0}, SpaceMap::identity(o)}}));
}

GluingData broken_cocycle() {
  const SpacePtr d = disc2();
  const SpaceMap id = SpaceMap::identity(d);
  const SpaceMap swap = SpaceMap::from_names(d, d, {{"a", "b"}, {"b", "a"}});
  std::map<std::pair<int, int>, SpacePtr> overlaps;
  std::map<std::pair<int, int>, SpaceMap> anchors, transitions;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      overlaps[{i, j}] = d;
      anchors.emplace(std::make_pair(i, j), id);
      bool twisted = (i == 0 && j == 2) || (i == 2 && j == 0);
      transitions.emplace(std::make_pair(i, j), twisted ? swap : id);
    }
  GluingData gd = make_gluing_data("broken-cocycle", IndexSet::numbered(3), {d, d, d}, overlaps,
                                   anchors, transitions);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        gd.set_triple_transition(i, j, k, by_name(gd.triple(i, j, k).space, gd.triple(j, i, k).space));
  return gd;
}

// ---- torus ----

FunctorPtr cylinder(const SpacePtr& y, const std::string& name) {
  const SpacePtr u1 = product(arc3(), y, name + ".U1");
  const SpacePtr u2 = product(arc3(), y, name + ".U2");
  const SpacePtr e12 = product(ends(), y, name + ".U12");
  const SpacePtr e21 = product(ends(), y, name + ".U21");
  const SpaceMap inc = incl(ends(), arc3());
  const SpaceMap idy = SpaceMap::identity(y);
  std::vector<std::size_t> same(e12->size());
  std::iota(same.begin(), same.end(), std::size_t{0});
  GluingData gd = make_gluing_data(
      name, IndexSet::numbered(2), {u1, u2}, {{{0, 1}, e12}, {{1, 0}, e21}},
      {{{0, 1}, product_map(inc, idy, e12, u1)}, {{1, 0}, product_map(inc, idy, e21, u2)}},
      {{{0, 1}, SpaceMap(e12, e21, same)}, {{1, 0}, SpaceMap(e21, e12, same)}});
  return std::make_shared<const GluingFunctor>(derive_triple_maps(std::move(gd)));
}

Refinement cylinder_refinement(const std::string& name, const FunctorPtr& fine,
                               const FunctorPtr& coarse, const SpaceMap& fy) {
  Refinement r{name, IndexMap::identity(coarse->index()), fine, coarse, {}};
  for (int j = 0; j < 2; ++j) {
    const GlObject a = GlObject::single(j);
    r.components.emplace(a, product_map(SpaceMap::identity(arc3()), fy, fine->object(a),
                                        coarse->object(a)));
  }
  return complete_refinement(std::move(r));
}

namespace {

GdfGluingData torus_shape(const std::string& name, const SpacePtr& triple_y,
                          const SpaceMap& triple_fold) {
  const SpacePtr a = arc3(), e = ends();
  const SpaceMap inc = incl(e, a);
  const SpaceMap ide = SpaceMap::identity(e);
  const GlObject s1 = GlObject::single(0), s2 = GlObject::single(1);
  const GlObject p12 = normalize({0, 1}), p21 = normalize({1, 0});
  const GlObject t112 = normalize({0, 0, 1}), t212 = normalize({1, 0, 1});

  GdfGluingData m;
  m.name = name;
  m.index = IndexSet::numbered(2);
  m.nodes[s1] = cylinder(a, "C1");
  m.nodes[s2] = cylinder(a, "C2");
  m.nodes[p12] = cylinder(e, "V12");
  m.nodes[p21] = cylinder(e, "V21");
  m.nodes[t212] = m.nodes[p21];
  m.nodes[t112] = triple_y ? cylinder(triple_y, "W112") : m.nodes[p12];

  auto add = [&](GlObject from, GlObject to, const std::string& label, const SpaceMap& fy) {
    m.edges.emplace(std::make_pair(from, to),
                    cylinder_refinement(label, m.nodes.at(to), m.nodes.at(from), fy));
  };
  add(s1, p12, "eta(1,2)", inc);
  add(s2, p21, "eta(2,1)", inc);
  add(p21, p12, "tau(1,2)", ide);
  add(p12, p21, "tau(2,1)", ide);
  add(s2, t212, "eta^2(2,1,2)", inc);
  add(p21, t212, "eta^1(2,1,2)", ide);
  if (triple_y) {
    add(s1, t112, "eta^1(1,1,2)", compose(inc, triple_fold));
    add(p12, t112, "eta^2(1,1,2)", triple_fold);
  } else {
    add(s1, t112, "eta^1(1,1,2)", inc);
    add(p12, t112, "eta^2(1,1,2)", ide);
  }
  return m;
}

}  // namespace

GdfGluingData torus_meta() { return torus_shape("torus", nullptr, SpaceMap()); }

GdfGluingData torus_counter_meta() {
  const SpacePtr y4 = share(FiniteSpace::from_opens("ENDS4", {"l", "r", "l'", "r'"},
                                                    {{"l"}, {"r"}, {"l'"}, {"r'"}}));
  const SpaceMap fold = SpaceMap::from_names(y4, ends(), {{"l", "l"}, {"r", "r"}, {"l'", "l"}, {"r'", "r"}});
  return torus_shape("torus-counter", y4, fold);
}

GluingData torus_sequential(const GluedSpace& cyl1, const GluedSpace& cyl2) {
  auto edge_classes = [](const GluedSpace& g) {
    PointSet s(g.space->size());
    for (std::size_t q = 0; q < g.classes.size(); ++q)
      for (const auto& member : g.classes[q]) {
        std::string y = y_of(member);
        if (y == "l" || y == "r") s.insert(q);
      }
    return s;
  };
  const SpacePtr q1 = copy_named(cyl1.space, "Q(C1)");
  const SpacePtr q2 = copy_named(cyl2.space, "Q(C2)");
  Subspace e12 = subspace(q1, edge_classes(cyl1), "E12");
  Subspace e21 = subspace(q2, edge_classes(cyl2), "E21");
  GluingData gd = make_gluing_data(
      "torus-sequential", IndexSet::numbered(2), {q1, q2},
      {{{0, 1}, e12.space}, {{1, 0}, e21.space}},
      {{{0, 1}, e12.inclusion}, {{1, 0}, e21.inclusion}},
      {{{0, 1}, by_name(e12.space, e21.space)}, {{1, 0}, by_name(e21.space, e12.space)}});
  return derive_triple_maps(std::move(gd));
}

// ---- coverings ----

Covering c4_two_arcs() {
  const SpacePtr c = c4();
  Subspace a1 = subspace(c, c->subset({"l", "m1", "r"}), "A1");
  Subspace a2 = subspace(c, c->subset({"l", "m2", "r"}), "A2");
  return Covering{"C4-two-arcs", c, {a1.inclusion, a2.inclusion}, CoverKind::open};
}

Covering sq9_two_strips() {
  const SpacePtr s = sq9();
  PointSet left(s->size()), right(s->size());
  for (std::size_t x = 0; x < s->size(); ++x) {
    const std::string& p = s->point(x);
    if (p.rfind("(l,", 0) == 0 || p.rfind("(m,", 0) == 0) left.insert(x);
    if (p.rfind("(m,", 0) == 0 || p.rfind("(r,", 0) == 0) right.insert(x);
  }
  Subspace a = subspace(s, left, "S-left");
  Subspace b = subspace(s, right, "S-right");
  return Covering{"SQ9-two-strips", s, {a.inclusion, b.inclusion}, CoverKind::gluing};
}

}  // namespace gluing::fixtures
