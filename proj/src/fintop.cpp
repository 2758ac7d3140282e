#include "gluing/fintop.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "gluing/errors.hpp"

namespace gluing {

// ---- PointSet ----

PointSet::PointSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  for (std::size_t x = 0; x < universe; ++x) s.insert(x);
  return s;
}

bool PointSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t PointSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool PointSet::subset_of(const PointSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<std::size_t> PointSet::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

PointSet& PointSet::operator|=(const PointSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

// ---- FiniteSpace ----

void FiniteSpace::build_index() {
  index_.clear();
  for (std::size_t x = 0; x < points_.size(); ++x) {
    if (!index_.emplace(points_[x], x).second)
      throw InvalidTopology("duplicate point '" + points_[x] + "' in space '" + name_ + "'");
  }
}

FiniteSpace FiniteSpace::from_table(std::string name, std::vector<std::string> points,
                                    std::vector<PointSet> min_open) {
  FiniteSpace s;
  s.name_ = std::move(name);
  s.points_ = std::move(points);
  s.build_index();
  if (min_open.size() != s.points_.size())
    throw InvalidTopology("min-open table size mismatch in space '" + s.name_ + "'");
  for (std::size_t x = 0; x < min_open.size(); ++x) {
    if (!min_open[x].contains(x))
      throw InvalidTopology("InvalidTopology(" + s.points_[x] + ", " + s.points_[x] +
                            "): point not in its own minimal open in '" + s.name_ + "'");
  }
  for (std::size_t x = 0; x < min_open.size(); ++x) {
    for (std::size_t y : min_open[x].elements()) {
      if (!min_open[y].subset_of(min_open[x]))
        throw InvalidTopology("InvalidTopology(" + s.points_[x] + ", " + s.points_[y] +
                              "): min_open(" + s.points_[y] + ") not contained in min_open(" +
                              s.points_[x] + ") in '" + s.name_ + "'");
    }
  }
  s.min_open_ = std::move(min_open);
  return s;
}

FiniteSpace FiniteSpace::make(std::string name, std::vector<std::string> points,
                              const std::map<std::string, std::vector<std::string>>& min_open) {
  FiniteSpace probe;
  probe.name_ = name;
  probe.points_ = points;
  probe.build_index();
  std::vector<PointSet> table(points.size(), PointSet(points.size()));
  for (const auto& [p, members] : min_open) {
    std::size_t x = probe.index_of(p);
    for (const auto& q : members) table[x].insert(probe.index_of(q));
  }
  return from_table(std::move(name), std::move(points), std::move(table));
}

FiniteSpace FiniteSpace::from_opens(std::string name, std::vector<std::string> points,
                                    const std::vector<std::vector<std::string>>& opens) {
  FiniteSpace probe;
  probe.name_ = name;
  probe.points_ = points;
  probe.build_index();
  const std::size_t n = points.size();
  std::vector<PointSet> table(n, PointSet::full(n));
  for (const auto& open : opens) {
    PointSet s = probe.subset(open);
    for (std::size_t x : s.elements()) table[x] &= s;
  }
  return from_table(std::move(name), std::move(points), std::move(table));
}

std::size_t FiniteSpace::index_of(const std::string& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw UnknownPoint("UnknownPoint(" + p + ") in space '" + name_ + "'");
  return it->second;
}

std::optional<std::size_t> FiniteSpace::find(const std::string& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FiniteSpace::is_open(const PointSet& s) const {
  for (std::size_t x : s.elements())
    if (!min_open_[x].subset_of(s)) return false;
  return true;
}

bool FiniteSpace::is_open(const std::vector<std::string>& subset_names) const {
  return is_open(subset(subset_names));
}

PointSet FiniteSpace::subset(const std::vector<std::string>& names) const {
  PointSet s(size());
  for (const auto& p : names) s.insert(index_of(p));
  return s;
}

std::vector<std::string> FiniteSpace::names(const PointSet& s) const {
  std::vector<std::string> out;
  for (std::size_t x : s.elements()) out.push_back(points_[x]);
  return out;
}

std::string FiniteSpace::describe(const PointSet& s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t x : s.elements()) {
    if (!first) out += ",";
    out += points_[x];
    first = false;
  }
  return out + "}";
}

bool FiniteSpace::same_topology(const FiniteSpace& other) const {
  if (this == &other) return true;
  if (size() != other.size()) return false;
  if (points_ == other.points_) return min_open_ == other.min_open_;
  std::vector<std::size_t> to_other(size());
  for (std::size_t x = 0; x < size(); ++x) {
    auto y = other.find(points_[x]);
    if (!y) return false;
    to_other[x] = *y;
  }
  for (std::size_t x = 0; x < size(); ++x) {
    PointSet mapped(size());
    for (std::size_t y : min_open_[x].elements()) mapped.insert(to_other[y]);
    if (!(mapped == other.min_open_[to_other[x]])) return false;
  }
  return true;
}

SpacePtr share(FiniteSpace s) { return std::make_shared<const FiniteSpace>(std::move(s)); }

// ---- SpaceMap ----

SpaceMap::SpaceMap(SpacePtr dom, SpacePtr cod, std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_->size())
    throw UnknownPoint("map table size does not match domain '" + dom_->name() + "'");
  for (std::size_t v : table_)
    if (v >= cod_->size())
      throw UnknownPoint("map value outside codomain '" + cod_->name() + "'");
}

SpaceMap SpaceMap::from_names(SpacePtr dom, SpacePtr cod,
                              const std::map<std::string, std::string>& table) {
  std::vector<std::size_t> t(dom->size(), 0);
  std::vector<bool> seen(dom->size(), false);
  for (const auto& [x, y] : table) {
    std::size_t i = dom->index_of(x);
    t[i] = cod->index_of(y);
    seen[i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw UnknownPoint("map from '" + dom->name() + "' to '" + cod->name() +
                         "' has no value for point " + dom->point(i));
  return SpaceMap(std::move(dom), std::move(cod), std::move(t));
}

SpaceMap SpaceMap::identity(SpacePtr s) {
  std::vector<std::size_t> t(s->size());
  std::iota(t.begin(), t.end(), std::size_t{0});
  return SpaceMap(s, s, std::move(t));
}

SpaceMap SpaceMap::constant(SpacePtr dom, SpacePtr cod, std::size_t value) {
  std::vector<std::size_t> t(dom->size(), value);
  return SpaceMap(std::move(dom), std::move(cod), std::move(t));
}

std::string SpaceMap::apply(const std::string& p) const {
  return cod_->point(table_[dom_->index_of(p)]);
}

PointSet SpaceMap::image(const PointSet& s) const {
  PointSet out(cod_->size());
  for (std::size_t x : s.elements()) out.insert(table_[x]);
  return out;
}

PointSet SpaceMap::image() const { return image(PointSet::full(dom_->size())); }

PointSet SpaceMap::preimage(const PointSet& s) const {
  PointSet out(dom_->size());
  for (std::size_t x = 0; x < table_.size(); ++x)
    if (s.contains(table_[x])) out.insert(x);
  return out;
}

bool SpaceMap::continuous() const {
  for (std::size_t x = 0; x < table_.size(); ++x)
    if (!image(dom_->min_open(x)).subset_of(cod_->min_open(table_[x]))) return false;
  return true;
}

bool SpaceMap::injective() const {
  std::vector<bool> hit(cod_->size(), false);
  for (std::size_t v : table_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool SpaceMap::surjective() const { return image().count() == cod_->size(); }

bool SpaceMap::equals(const SpaceMap& other) const { return !difference(other).has_value(); }

std::optional<std::string> SpaceMap::difference(const SpaceMap& other) const {
  if (!dom_->same_topology(*other.dom_))
    return "domains differ ('" + dom_->name() + "' vs '" + other.dom_->name() + "')";
  if (!cod_->same_topology(*other.cod_))
    return "codomains differ ('" + cod_->name() + "' vs '" + other.cod_->name() + "')";
  for (std::size_t x = 0; x < table_.size(); ++x) {
    const std::string& p = dom_->point(x);
    const std::string& mine = cod_->point(table_[x]);
    const std::string& theirs = other.cod_->point(other.table_[other.dom_->index_of(p)]);
    if (mine != theirs) return p + " in " + dom_->name() + " maps to " + mine + " vs " + theirs;
  }
  return std::nullopt;
}

MapReport analyze_map(const SpaceMap& f) {
  MapReport r;
  const auto& A = *f.dom();
  const auto& B = *f.cod();
  r.continuous = true;
  for (std::size_t x = 0; x < A.size(); ++x) {
    if (!f.image(A.min_open(x)).subset_of(B.min_open(f(x)))) {
      r.continuous = false;
      r.witnesses.push_back("continuity: f(min_open(" + A.point(x) + ")) = " +
                            B.describe(f.image(A.min_open(x))) + " not inside min_open(" +
                            B.point(f(x)) + ")");
    }
  }
  r.injective = true;
  std::vector<std::optional<std::size_t>> pre(B.size());
  for (std::size_t x = 0; x < A.size(); ++x) {
    auto& slot = pre[f(x)];
    if (slot) {
      r.injective = false;
      r.witnesses.push_back("injectivity: " + A.point(*slot) + " and " + A.point(x) +
                            " both map to " + B.point(f(x)));
    } else {
      slot = x;
    }
  }
  r.open_map = true;
  for (std::size_t x = 0; x < A.size(); ++x) {
    PointSet img = f.image(A.min_open(x));
    if (!B.is_open(img)) {
      r.open_map = false;
      r.witnesses.push_back("openness: image of min_open(" + A.point(x) + ") is " +
                            B.describe(img) + ", not open");
    }
  }
  r.embedding = r.injective && r.continuous;
  if (r.embedding) {
    PointSet whole = f.image();
    for (std::size_t x = 0; x < A.size(); ++x) {
      PointSet img = f.image(A.min_open(x));
      PointSet induced = B.min_open(f(x)) & whole;
      if (!(img == induced)) {
        r.embedding = false;
        r.witnesses.push_back("embedding: image of min_open(" + A.point(x) + ") is " +
                              B.describe(img) + " but the subspace min-open is " +
                              B.describe(induced));
      }
    }
  }
  return r;
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (f.cod() != g.dom() && !f.cod()->same_topology(*g.dom()))
    throw CompositionMismatch("CompositionMismatch: cannot compose map from '" +
                              g.dom()->name() + "' after map into '" + f.cod()->name() + "'");
  std::vector<std::size_t> t(f.dom()->size());
  const bool same = f.cod() == g.dom() || f.cod()->points() == g.dom()->points();
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::size_t mid = f(x);
    if (!same) mid = g.dom()->index_of(f.cod()->point(mid));
    t[x] = g(mid);
  }
  return SpaceMap(f.dom(), g.cod(), std::move(t));
}

SpaceMap retarget(const SpaceMap& f, const SpacePtr& dom, const SpacePtr& cod,
                  const std::string& what) {
  if (f.dom() == dom && f.cod() == cod) return f;
  if (!f.dom()->same_topology(*dom))
    throw CompositionMismatch("CompositionMismatch: " + what + " has domain '" +
                              f.dom()->name() + "', expected '" + dom->name() + "'");
  if (!f.cod()->same_topology(*cod))
    throw CompositionMismatch("CompositionMismatch: " + what + " has codomain '" +
                              f.cod()->name() + "', expected '" + cod->name() + "'");
  std::vector<std::size_t> t(dom->size());
  for (std::size_t x = 0; x < t.size(); ++x)
    t[x] = cod->index_of(f.cod()->point(f(f.dom()->index_of(dom->point(x)))));
  return SpaceMap(dom, cod, std::move(t));
}

// ---- constructions ----

Coproduct disjoint_union(const std::vector<SpacePtr>& spaces, std::vector<std::string> tags,
                         std::string name) {
  if (tags.empty())
    for (std::size_t i = 0; i < spaces.size(); ++i) tags.push_back(std::to_string(i));
  if (tags.size() != spaces.size()) throw InvalidTopology("disjoint union: tag count mismatch");
  if (name.empty()) {
    name = "⊔(";
    for (std::size_t i = 0; i < spaces.size(); ++i)
      name += (i ? "," : "") + spaces[i]->name();
    name += ")";
  }
  std::vector<std::string> points;
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    offset.push_back(points.size());
    for (const auto& p : spaces[i]->points()) points.push_back(p + "@" + tags[i]);
  }
  std::vector<PointSet> table;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    for (std::size_t x = 0; x < spaces[i]->size(); ++x) {
      PointSet s(points.size());
      for (std::size_t y : spaces[i]->min_open(x).elements()) s.insert(offset[i] + y);
      table.push_back(std::move(s));
    }
  }
  Coproduct out;
  out.space = share(FiniteSpace::from_table(std::move(name), std::move(points), std::move(table)));
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    std::vector<std::size_t> t(spaces[i]->size());
    std::iota(t.begin(), t.end(), offset[i]);
    out.injections.emplace_back(spaces[i], out.space, std::move(t));
  }
  return out;
}

Subspace subspace(const SpacePtr& s, const PointSet& subset, std::string name) {
  if (name.empty()) name = s->name() + "|" + s->describe(subset);
  std::vector<std::size_t> members = subset.elements();
  std::vector<std::size_t> pos(s->size(), 0);
  std::vector<std::string> points;
  for (std::size_t k = 0; k < members.size(); ++k) {
    pos[members[k]] = k;
    points.push_back(s->point(members[k]));
  }
  std::vector<PointSet> table;
  for (std::size_t x : members) {
    PointSet t(members.size());
    for (std::size_t y : (s->min_open(x) & subset).elements()) t.insert(pos[y]);
    table.push_back(std::move(t));
  }
  Subspace out;
  out.space = share(FiniteSpace::from_table(std::move(name), std::move(points), std::move(table)));
  out.inclusion = SpaceMap(out.space, s, members);
  return out;
}

Pullback pullback(const SpaceMap& f, const SpaceMap& g, std::string name) {
  if (f.cod() != g.cod() && !f.cod()->same_topology(*g.cod()))
    throw CompositionMismatch("CompositionMismatch: pullback of maps into '" + f.cod()->name() +
                              "' and '" + g.cod()->name() + "'");
  const auto& A = *f.dom();
  const auto& B = *g.dom();
  if (name.empty()) name = A.name() + "×[" + f.cod()->name() + "]" + B.name();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const bool same = f.cod() == g.cod() || f.cod()->points() == g.cod()->points();
  for (std::size_t u = 0; u < A.size(); ++u)
    for (std::size_t v = 0; v < B.size(); ++v) {
      std::size_t gv = same ? g(v) : f.cod()->index_of(g.cod()->point(g(v)));
      if (f(u) == gv) pairs.emplace_back(u, v);
    }
  std::vector<std::string> points;
  for (auto [u, v] : pairs) points.push_back("(" + A.point(u) + "," + B.point(v) + ")");
  std::vector<PointSet> table;
  for (auto [u, v] : pairs) {
    PointSet t(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (A.min_open(u).contains(pairs[k].first) && B.min_open(v).contains(pairs[k].second))
        t.insert(k);
    table.push_back(std::move(t));
  }
  Pullback out;
  out.space = share(FiniteSpace::from_table(std::move(name), std::move(points), std::move(table)));
  std::vector<std::size_t> t1, t2;
  for (auto [u, v] : pairs) {
    t1.push_back(u);
    t2.push_back(v);
  }
  out.first = SpaceMap(out.space, f.dom(), std::move(t1));
  out.second = SpaceMap(out.space, g.dom(), std::move(t2));
  return out;
}

SpacePtr terminal() {
  static const SpacePtr pt = share(FiniteSpace::make("PT", {"p"}, {{"p", {"p"}}}));
  return pt;
}

SpacePtr product(const SpacePtr& a, const SpacePtr& b, std::string name) {
  if (name.empty()) name = a->name() + "×" + b->name();
  auto pb = pullback(SpaceMap::constant(a, terminal(), 0), SpaceMap::constant(b, terminal(), 0),
                     std::move(name));
  return pb.space;
}

SpaceMap product_map(const SpaceMap& f, const SpaceMap& g, const SpacePtr& dom,
                     const SpacePtr& cod) {
  std::vector<std::size_t> t(dom->size());
  for (std::size_t x = 0; x < dom->size(); ++x) {
    std::size_t u = x / g.dom()->size();
    std::size_t v = x % g.dom()->size();
    t[x] = f(u) * g.cod()->size() + g(v);
  }
  return SpaceMap(dom, cod, std::move(t));
}

SpaceMap pair_into(const Pullback& pb, const SpaceMap& a, const SpaceMap& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> where;
  for (std::size_t k = 0; k < pb.space->size(); ++k) where[{pb.first(k), pb.second(k)}] = k;
  std::vector<std::size_t> t(a.dom()->size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    auto it = where.find({a(x), b(x)});
    if (it == where.end())
      throw CompositionMismatch("pair (" + a.cod()->point(a(x)) + "," + b.cod()->point(b(x)) +
                                ") of " + a.dom()->point(x) + " is not in the pullback");
    t[x] = it->second;
  }
  return SpaceMap(a.dom(), pb.space, std::move(t));
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Quotient quotient(const SpacePtr& s, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                  std::string name) {
  const std::size_t n = s->size();
  DisjointSets ds(n);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw UnknownPoint("quotient pair outside space '" + s->name() + "'");
    ds.unite(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t x = 0; x < n; ++x) by_root[ds.find(x)].push_back(x);

  // Name each class by its least member name and order classes by name.
  std::vector<std::pair<std::string, std::vector<std::size_t>>> named;
  for (auto& [root, members] : by_root) {
    std::string least = s->point(members.front());
    for (std::size_t m : members) least = std::min(least, s->point(m));
    named.emplace_back(least, members);
  }
  std::sort(named.begin(), named.end());

  std::vector<std::size_t> cls(n);
  for (std::size_t c = 0; c < named.size(); ++c)
    for (std::size_t m : named[c].second) cls[m] = c;

  auto saturate = [&](const PointSet& set) {
    PointSet out(n);
    for (std::size_t x : set.elements())
      for (std::size_t m : named[cls[x]].second) out.insert(m);
    return out;
  };

  std::vector<PointSet> table;
  for (std::size_t c = 0; c < named.size(); ++c) {
    PointSet hull(n);
    for (std::size_t m : named[c].second) hull.insert(m);
    while (true) {
      PointSet grown = hull;
      for (std::size_t x : hull.elements()) grown |= s->min_open(x);
      grown = saturate(grown);
      if (grown == hull) break;
      hull = std::move(grown);
    }
    PointSet q(named.size());
    for (std::size_t x : hull.elements()) q.insert(cls[x]);
    table.push_back(std::move(q));
  }

  if (name.empty()) name = s->name() + "/~";
  std::vector<std::string> points;
  Quotient out;
  for (auto& [least, members] : named) {
    points.push_back(least);
    out.classes.push_back(members);
  }
  out.space = share(FiniteSpace::from_table(std::move(name), std::move(points), std::move(table)));
  out.projection = SpaceMap(s, out.space, cls);
  return out;
}

// ---- oracles ----

std::vector<SpaceMap> enumerate_continuous_maps(const SpacePtr& a, const SpacePtr& b,
                                                const SearchBudget& budget) {
  const std::size_t n = a->size();
  const std::size_t m = b->size();
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m != 0 && candidates > budget.max_candidates / m + 1) {
      candidates = budget.max_candidates + 1;
      break;
    }
    candidates *= m;
  }
  if (candidates > budget.max_candidates)
    throw SearchBudgetExceeded("SearchBudgetExceeded: " + std::to_string(m) + "^" +
                               std::to_string(n) + " candidate maps from '" + a->name() +
                               "' to '" + b->name() + "' exceed the budget of " +
                               std::to_string(budget.max_candidates));
  std::vector<SpaceMap> out;
  std::vector<std::size_t> t(n, 0);
  // Depth-first over lexicographic assignments, pruning on monotonicity of the
  // specialization preorder (y in min_open(x) forces f(y) in min_open(f(x))).
  auto consistent = [&](std::size_t x) {
    for (std::size_t y = 0; y <= x; ++y) {
      if (a->min_open(x).contains(y) && !b->min_open(t[x]).contains(t[y])) return false;
      if (a->min_open(y).contains(x) && !b->min_open(t[y]).contains(t[x])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      out.emplace_back(a, b, t);
      return;
    }
    for (std::size_t v = 0; v < m; ++v) {
      t[x] = v;
      if (consistent(x)) self(self, x + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool is_homeomorphism(const SpaceMap& f) {
  if (f.dom()->size() != f.cod()->size()) return false;
  if (!f.injective()) return false;
  for (std::size_t x = 0; x < f.dom()->size(); ++x)
    if (!(f.image(f.dom()->min_open(x)) == f.cod()->min_open(f(x)))) return false;
  return true;
}

std::optional<SpaceMap> find_homeomorphism(const SpacePtr& a, const SpacePtr& b,
                                           const SearchBudget& budget) {
  const std::size_t n = a->size();
  if (n != b->size()) return std::nullopt;
  auto signature = [](const FiniteSpace& s) {
    std::vector<std::pair<std::size_t, std::size_t>> sig(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
      std::size_t indeg = 0;
      for (std::size_t y = 0; y < s.size(); ++y)
        if (s.min_open(y).contains(x)) ++indeg;
      sig[x] = {s.min_open(x).count(), indeg};
    }
    return sig;
  };
  auto sa = signature(*a);
  auto sb = signature(*b);
  {
    auto xa = sa, xb = sb;
    std::sort(xa.begin(), xa.end());
    std::sort(xb.begin(), xb.end());
    if (xa != xb) return std::nullopt;
  }
  // Assign the most constrained points first.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return sa[x] > sa[y];
  });
  std::vector<std::size_t> t(n, 0);
  std::vector<bool> assigned(n, false), used(n, false);
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    std::size_t x = order[k];
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || sb[v] != sa[x]) continue;
      if (++nodes > budget.max_nodes)
        throw SearchBudgetExceeded("SearchBudgetExceeded: homeomorphism search between '" +
                                   a->name() + "' and '" + b->name() + "' exceeded " +
                                   std::to_string(budget.max_nodes) + " nodes");
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        std::size_t y = order[j];
        ok = (a->min_open(x).contains(y) == b->min_open(v).contains(t[y])) &&
             (a->min_open(y).contains(x) == b->min_open(t[y]).contains(v));
      }
      if (!ok) continue;
      t[x] = v;
      used[v] = true;
      if (self(self, k + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return SpaceMap(a, b, t);
}

}  // namespace gluing
