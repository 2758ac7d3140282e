#include "gluing/gdata.hpp"

#include <functional>

#include "gluing/errors.hpp"

namespace gluing {

SpacePtr object_space(const GluingData& gd, const GlObject& a) {
  switch (a.kind) {
    case GlObject::Kind::single: return gd.patch(a.i);
    case GlObject::Kind::pair: return gd.overlap(a.i, a.j);
    case GlObject::Kind::triple: return gd.triple(a.i, a.j, a.k).space;
  }
  return nullptr;
}

namespace {

std::string tuple_str(const IndexSet& idx, std::initializer_list<int> t) {
  std::string out = "(";
  bool first = true;
  for (int i : t) {
    out += (first ? "" : ",") + idx.name(i);
    first = false;
  }
  return out + ")";
}

// First point whose image has a different name, for maps that should be identities.
std::optional<std::string> moved_point(const SpaceMap& f) {
  for (std::size_t x = 0; x < f.dom()->size(); ++x)
    if (f.cod()->point(f(x)) != f.dom()->point(x))
      return f.dom()->point(x) + " -> " + f.cod()->point(f(x));
  return std::nullopt;
}

// Canonical object image of normalize(i,j,k) -> ordered pullback T_ijk.
SpaceMap to_ordered(const GluingData& gd, int i, int j, int k) {
  const Pullback& T = gd.triple(i, j, k);
  SpacePtr obj = object_space(gd, normalize({i, j, k}));
  if (j == k) {
    auto id = SpaceMap::identity(gd.overlap(i, j));
    return retarget(pair_into(T, id, id), obj, T.space, "diagonal");
  }
  if (j < k) return SpaceMap::identity(T.space);
  return triple_swap(gd, i, k, j);
}

// Ordered pullback T_ijk -> canonical object image of normalize(i,j,k).
SpaceMap from_ordered(const GluingData& gd, int i, int j, int k) {
  const Pullback& T = gd.triple(i, j, k);
  SpacePtr obj = object_space(gd, normalize({i, j, k}));
  if (j == k) return retarget(T.first, T.space, obj, "collapse");
  if (j < k) return SpaceMap::identity(T.space);
  return triple_swap(gd, i, j, k);
}

SpaceMap formula_image_of(const GluingData& gd, const Generator& g) {
  const SpacePtr dom_img = object_space(gd, g.dom());
  const SpacePtr cod_img = object_space(gd, g.cod());
  switch (g.kind) {
    case Generator::Kind::eta:
      return retarget(gd.anchor(g.i, g.j), cod_img, dom_img, "anchor");
    case Generator::Kind::tau:
      return retarget(gd.transition(g.i, g.j), cod_img, dom_img, "transition");
    case Generator::Kind::eta3: {
      const Pullback& T = gd.triple(g.i, g.j, g.k);
      const SpaceMap& proj = g.n == g.j ? T.first : T.second;
      return retarget(compose(proj, to_ordered(gd, g.i, g.j, g.k)), cod_img, dom_img,
                      "triple projection");
    }
    case Generator::Kind::tau3: {
      const auto& phi = gd.triple_transition(g.i, g.j, g.k);
      if (!phi) throw UnknownMorphism("triple transition missing");
      SpaceMap m = compose(from_ordered(gd, g.j, g.i, g.k),
                           compose(*phi, to_ordered(gd, g.i, g.j, g.k)));
      return retarget(m, cod_img, dom_img, "triple transition");
    }
  }
  throw UnknownMorphism("unknown generator kind");
}

}  // namespace

bool GluingData::has_triple_maps() const {
  for (const auto& m : triple_transition_)
    if (!m) return false;
  return true;
}

void GluingData::set_triple_transition(int i, int j, int k, SpaceMap m) {
  triple_transition_[at(i, j, k)] =
      retarget(m, triple(i, j, k).space, triple(j, i, k).space,
               "triple transition " + tuple_str(index, {i, j, k}));
}

void GluingData::clear_triple_transitions() {
  for (auto& m : triple_transition_) m.reset();
}

void GluingData::set_transition(int i, int j, SpaceMap m) {
  transition_[at(i, j)] = retarget(m, overlap(i, j), overlap(j, i),
                                   "transition " + tuple_str(index, {i, j}));
}

GluingData make_gluing_data(std::string name, IndexSet index, std::vector<SpacePtr> patches,
                            std::map<std::pair<int, int>, SpacePtr> overlaps,
                            std::map<std::pair<int, int>, SpaceMap> anchors,
                            std::map<std::pair<int, int>, SpaceMap> transitions) {
  GluingData gd;
  gd.name = std::move(name);
  gd.index = std::move(index);
  const int n = static_cast<int>(gd.n());
  if (patches.size() != gd.n()) throw InputError("gluing data needs one patch per index");
  gd.patch_ = std::move(patches);
  gd.overlap_.resize(gd.n() * gd.n());
  gd.anchor_.resize(gd.n() * gd.n());
  gd.transition_.resize(gd.n() * gd.n());
  auto need = [&](auto& table, int i, int j, const char* what) {
    auto it = table.find({i, j});
    if (it == table.end())
      throw InputError(std::string("gluing data '") + gd.name + "' lacks " + what + " " +
                       tuple_str(gd.index, {i, j}));
    return it->second;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = overlaps.find({i, j});
      if (it != overlaps.end())
        gd.overlap_[gd.at(i, j)] = it->second;
      else if (i == j)
        gd.overlap_[gd.at(i, j)] = gd.patch_[i];
      else
        need(overlaps, i, j, "overlap");
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::string at = tuple_str(gd.index, {i, j});
      if (i == j && !anchors.count({i, j}))
        gd.anchor_[gd.at(i, j)] =
            retarget(SpaceMap::identity(gd.patch_[i]), gd.overlap(i, i), gd.patch_[i], "anchor");
      else
        gd.anchor_[gd.at(i, j)] =
            retarget(need(anchors, i, j, "anchor"), gd.overlap(i, j), gd.patch_[i], "anchor " + at);
      if (i == j && !transitions.count({i, j}))
        gd.transition_[gd.at(i, j)] = SpaceMap::identity(gd.overlap(i, i));
      else
        gd.transition_[gd.at(i, j)] = retarget(need(transitions, i, j, "transition"),
                                               gd.overlap(i, j), gd.overlap(j, i),
                                               "transition " + at);
    }
  gd.triple_.resize(gd.n() * gd.n() * gd.n());
  gd.triple_transition_.resize(gd.triple_.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        gd.triple_[gd.at(i, j, k)] = pullback(gd.anchor(i, j), gd.anchor(i, k),
                                              "T" + tuple_str(gd.index, {i, j, k}));
  return gd;
}

SpaceMap triple_swap(const GluingData& gd, int i, int j, int k) {
  const Pullback& from = gd.triple(i, j, k);
  const Pullback& to = gd.triple(i, k, j);
  return pair_into(to, from.second, from.first);
}

Report validate(const GluingData& gd) {
  Report r;
  r.title = "validate " + (gd.name.empty() ? std::string("gluing data") : gd.name);
  const int n = static_cast<int>(gd.n());
  const IndexSet& idx = gd.index;
  const std::string a = "(a) U_ii = U_i";
  const std::string b = "(b) phi_ii = id";
  const std::string cont = "all maps continuous";
  const std::string inv = "phi_ji phi_ij = id";
  const std::string present = "triple transitions present";
  const std::string c = "(c) cocycle phi^j_ik = phi^i_jk phi^k_ij";
  const std::string d = "(d) first projection square";
  r.add(a);
  r.add(b);
  r.add(cont);
  r.add(inv);
  r.add(present);
  r.add(c);
  r.add(d);
  for (int i = 0; i < n; ++i) {
    const std::string w = "i=" + idx.name(i);
    bool same = gd.overlap(i, i)->same_topology(*gd.patch(i));
    r.record(a, same, w + ": overlap '" + gd.overlap(i, i)->name() + "' differs from patch '" +
                          gd.patch(i)->name() + "'");
    if (same) {
      auto moved = moved_point(gd.anchor(i, i));
      r.record(a, !moved, w + ": anchor moves " + moved.value_or(""));
    }
    auto moved = moved_point(gd.transition(i, i));
    r.record(b, !moved, w + ": " + moved.value_or("") + " is moved");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::string at = tuple_str(idx, {i, j});
      for (const auto* m : {&gd.anchor(i, j), &gd.transition(i, j)}) {
        MapReport mr = analyze_map(*m);
        r.record(cont, mr.continuous,
                 std::string(m == &gd.anchor(i, j) ? "anchor " : "transition ") + at + ": " +
                     (mr.witnesses.empty() ? "" : mr.witnesses.front()));
      }
      auto diff = compose(gd.transition(j, i), gd.transition(i, j))
                      .difference(SpaceMap::identity(gd.overlap(i, j)));
      r.record(inv, !diff, at + ": " + diff.value_or(""));
    }
  if (!gd.has_triple_maps()) {
    r.record(present, false, "derive them or supply them explicitly");
    r.record(c, false, "not evaluated without triple transitions");
    r.record(d, false, "not evaluated without triple transitions");
    return r;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const std::string at = tuple_str(idx, {i, j, k});
        const SpaceMap& phi = *gd.triple_transition(i, j, k);
        MapReport mr = analyze_map(phi);
        r.record(cont, mr.continuous,
                 "triple transition " + at + ": " +
                     (mr.witnesses.empty() ? "" : mr.witnesses.front()));
        // Both sides as maps T_ijk -> T_kij, routing through the coordinate swaps
        // that identify T_jik with T_jki and T_kji with T_kij.
        SpaceMap lhs = compose(triple_swap(gd, k, j, i),
                               compose(*gd.triple_transition(j, k, i),
                                       compose(triple_swap(gd, j, i, k), phi)));
        SpaceMap rhs = compose(*gd.triple_transition(i, k, j), triple_swap(gd, i, j, k));
        auto diff = lhs.difference(rhs);
        r.record(c, !diff, at + ": " + diff.value_or(""));
        SpaceMap top = compose(gd.triple(j, i, k).first, phi);
        SpaceMap bottom = compose(gd.transition(i, j), gd.triple(i, j, k).first);
        diff = top.difference(bottom);
        r.record(d, !diff, at + ": " + diff.value_or(""));
      }
  r.notes.push_back(
      "triple transitions are typed T_ijk -> U_ji x_{U_j} U_jk (the second factor is U_jk)");
  return r;
}

GluingData derive_triple_maps(GluingData gd, bool check_result) {
  const int n = static_cast<int>(gd.n());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Pullback& from = gd.triple(i, j, k);
        const Pullback& to = gd.triple(j, i, k);
        std::vector<std::size_t> t(from.space->size());
        for (std::size_t p = 0; p < t.size(); ++p) {
          std::size_t want = gd.transition(i, j)(from.first(p));
          std::vector<std::size_t> candidates;
          for (std::size_t q = 0; q < to.space->size(); ++q)
            if (to.first(q) == want) candidates.push_back(q);
          if (candidates.size() != 1)
            throw NotDetermined("NotDetermined" + tuple_str(gd.index, {i, j, k}) + " at " +
                                from.space->point(p) + ": " + std::to_string(candidates.size()) +
                                " candidates in " + to.space->name() +
                                "; supply this triple transition explicitly");
          t[p] = candidates.front();
        }
        gd.set_triple_transition(i, j, k, SpaceMap(from.space, to.space, std::move(t)));
      }
  if (check_result) {
    Report r = validate(gd);
    if (!r.ok()) throw ValidationFailed(std::move(r));
  }
  return gd;
}

bool same_data(const GluingData& a, const GluingData& b) {
  if (!(a.index == b.index)) return false;
  const int n = static_cast<int>(a.n());
  for (int i = 0; i < n; ++i)
    if (!a.patch(i)->same_topology(*b.patch(i))) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!a.overlap(i, j)->same_topology(*b.overlap(i, j))) return false;
      if (!a.anchor(i, j).equals(b.anchor(i, j))) return false;
      if (!a.transition(i, j).equals(b.transition(i, j))) return false;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto& x = a.triple_transition(i, j, k);
        const auto& y = b.triple_transition(i, j, k);
        if (x.has_value() != y.has_value()) return false;
        if (x && !x->equals(*y)) return false;
      }
  return true;
}

// ---- functor ----

GluingFunctor::GluingFunctor(GluingData gd) : data_(std::move(gd)), cat_(data_.n()) {
  Report r = validate(data_);
  if (!r.ok()) throw ValidationFailed(std::move(r));

  functoriality_.title = "functoriality of " + (data_.name.empty() ? "gluing data" : data_.name);
  const IndexSet& idx = data_.index;
  const int n = static_cast<int>(data_.n());
  auto F = [&](const Generator& g) { return formula_image(g); };
  auto check = [&](const std::string& name, const SpaceMap& x, const SpaceMap& y,
                   const std::string& where) {
    auto diff = x.difference(y);
    functoriality_.record(name, !diff, where + ": " + diff.value_or(""));
  };

  for (const auto& g : cat_.generators())
    if (g.is_identity())
      check("identity generators map to identities", F(g),
            SpaceMap::identity(object(g.dom())), g.label(idx));

  // Relation families, written contravariantly: F(g o f) = F(f) o F(g).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::string w = tuple_str(idx, {i, j});
      check("(b) tau_ij tau_ji = id", compose(F(Generator::tau(j, i)), F(Generator::tau(i, j))),
            SpaceMap::identity(object(normalize({i, j}))), w);
      for (int k = 0; k < n; ++k) {
        const std::string w3 = tuple_str(idx, {i, j, k});
        check("(c) triple transpositions",
              compose(F(Generator::tau3(j, k, i)), F(Generator::tau3(i, j, k))),
              F(Generator::tau3(i, k, j)), w3);
        check("(c) triple transpositions",
              compose(F(Generator::tau3(j, i, k)), F(Generator::tau3(i, j, k))),
              SpaceMap::identity(object(normalize({i, j, k}))), w3);
        check("(d) pushout square", compose(F(Generator::eta(i, j)), F(Generator::eta3(j, i, j, k))),
              compose(F(Generator::eta(i, k)), F(Generator::eta3(k, i, j, k))), w3);
        check("(e) transposition square",
              compose(F(Generator::eta3(i, j, i, k)), F(Generator::tau3(i, j, k))),
              compose(F(Generator::tau(i, j)), F(Generator::eta3(j, i, j, k))), w3);
      }
    }

  // Path independence: assign images along a spanning forest, then demand that
  // every generator agrees with it.
  for (const auto& a : cat_.objects()) {
    std::map<GlObject, SpaceMap> value;
    value.emplace(a, SpaceMap::identity(object(a)));
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& e : cat_.edges()) {
        auto from = value.find(e.dom());
        if (from == value.end() || value.count(e.cod())) continue;
        value.emplace(e.cod(), compose(from->second, F(e)));
        grew = true;
      }
    }
    for (const auto& g : cat_.generators()) {
      if (g.is_identity()) continue;
      auto from = value.find(g.dom());
      if (from == value.end()) continue;
      check("path independence", compose(from->second, F(g)), value.at(g.cod()),
            a.str(idx) + " via " + g.label(idx));
    }
    for (auto& [b, m] : value) hom_image_.emplace(std::make_pair(a, b), std::move(m));
  }
  if (!functoriality_.ok()) throw ValidationFailed(functoriality_);
}

SpacePtr GluingFunctor::object(const GlObject& a) const {
  if (!cat_.contains(a)) throw UnknownMorphism("object outside the index category");
  return object_space(data_, a);
}

SpaceMap GluingFunctor::formula_image(const Generator& g) const {
  return formula_image_of(data_, g);
}

SpaceMap GluingFunctor::to_ordered(int i, int j, int k) const {
  return gluing::to_ordered(data_, i, j, k);
}

SpaceMap GluingFunctor::from_ordered(int i, int j, int k) const {
  return gluing::from_ordered(data_, i, j, k);
}

SpaceMap GluingFunctor::generator_image(const Generator& g) const {
  const int n = static_cast<int>(data_.n());
  for (int x : {g.i, g.j, g.k, g.n})
    if (x < 0 || x >= n) throw UnknownMorphism("generator outside the index set");
  if (g.is_identity()) return SpaceMap::identity(object(g.dom()));
  return formula_image(g);
}

SpaceMap GluingFunctor::eval(const GlMorphism& m) const {
  if (!cat_.contains(m.dom) || !cat_.contains(m.cod))
    throw UnknownMorphism("UnknownMorphism: endpoint outside the index category");
  auto it = hom_image_.find({m.dom, m.cod});
  if (it == hom_image_.end())
    throw UnknownMorphism("UnknownMorphism: no morphism " + m.dom.str(index()) + " -> " +
                          m.cod.str(index()));
  return it->second;
}

GluingFunctor functor_of(const GluingData& gd) { return GluingFunctor(gd); }

GluingData data_of(const GluingFunctor& f) {
  const int n = static_cast<int>(f.data().n());
  std::vector<SpacePtr> patches;
  std::map<std::pair<int, int>, SpacePtr> overlaps;
  std::map<std::pair<int, int>, SpaceMap> anchors, transitions;
  for (int i = 0; i < n; ++i) patches.push_back(f.object(GlObject::single(i)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      overlaps[{i, j}] = f.object(normalize({i, j}));
      anchors.emplace(std::make_pair(i, j), f.generator_image(Generator::eta(i, j)));
      transitions.emplace(std::make_pair(i, j), f.generator_image(Generator::tau(i, j)));
    }
  GluingData gd = make_gluing_data(f.data().name, f.index(), patches, overlaps, anchors, transitions);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        SpaceMap img = f.generator_image(Generator::tau3(i, j, k));
        SpaceMap m = compose(to_ordered(gd, j, i, k), compose(img, from_ordered(gd, i, j, k)));
        gd.set_triple_transition(i, j, k, m);
      }
  return gd;
}

}  // namespace gluing
