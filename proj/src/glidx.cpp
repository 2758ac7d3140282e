#include "gluing/glidx.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <set>

#include "gluing/errors.hpp"

namespace gluing {

IndexSet::IndexSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw InputError("duplicate index name '" + n + "'");
}

IndexSet IndexSet::numbered(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return IndexSet(std::move(names));
}

int IndexSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown index '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

std::vector<int> GlObject::tuple() const {
  switch (kind) {
    case Kind::single: return {i};
    case Kind::pair: return {i, j};
    case Kind::triple: return {i, j, k};
  }
  return {};
}

std::string GlObject::str(const IndexSet& idx) const {
  std::string out = "[";
  auto t = tuple();
  for (std::size_t p = 0; p < t.size(); ++p) out += (p ? "," : "") + idx.name(t[p]);
  return out + "]";
}

GlObject normalize(const std::vector<int>& raw) {
  switch (raw.size()) {
    case 1: return GlObject::single(raw[0]);
    case 2:
      if (raw[0] == raw[1]) return GlObject::single(raw[0]);
      return {GlObject::Kind::pair, raw[0], raw[1], 0};
    case 3:
      if (raw[1] == raw[2]) return normalize({raw[0], raw[1]});
      return {GlObject::Kind::triple, raw[0], std::min(raw[1], raw[2]), std::max(raw[1], raw[2])};
    default:
      throw BadArity("BadArity: index tuples have length 1 to 3, got " +
                     std::to_string(raw.size()));
  }
}

GlObject Generator::dom() const {
  switch (kind) {
    case Kind::eta: return GlObject::single(i);
    case Kind::tau: return normalize({j, i});
    case Kind::eta3: return normalize({i, n});
    case Kind::tau3: return normalize({j, i, k});
  }
  return {};
}

GlObject Generator::cod() const {
  switch (kind) {
    case Kind::eta:
    case Kind::tau: return normalize({i, j});
    case Kind::eta3:
    case Kind::tau3: return normalize({i, j, k});
  }
  return {};
}

std::string Generator::label(const IndexSet& idx) const {
  switch (kind) {
    case Kind::eta: return "eta(" + idx.name(i) + "," + idx.name(j) + ")";
    case Kind::tau: return "tau(" + idx.name(i) + "," + idx.name(j) + ")";
    case Kind::eta3:
      return "eta^" + idx.name(n) + "(" + idx.name(i) + "," + idx.name(j) + "," + idx.name(k) +
             ")";
    case Kind::tau3:
      return "tau^" + idx.name(k) + "(" + idx.name(i) + "," + idx.name(j) + "," + idx.name(k) +
             ")";
  }
  return {};
}

std::optional<Generator> parse_generator(const std::string& text, const IndexSet& idx) {
  static const std::regex re(R"(^\s*(eta|tau)(\^([^()\s]+))?\(([^,()]+),([^,()]+)(,([^,()]+))?\)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return std::nullopt;
  try {
    const bool eta = m[1] == "eta";
    const int i = idx.index_of(m[4]);
    const int j = idx.index_of(m[5]);
    if (!m[7].matched) {
      if (m[3].matched) return std::nullopt;
      return eta ? Generator::eta(i, j) : Generator::tau(i, j);
    }
    const int k = idx.index_of(m[7]);
    if (!m[3].matched) return std::nullopt;
    const int up = idx.index_of(m[3]);
    if (eta) {
      if (up != j && up != k) return std::nullopt;
      return Generator::eta3(up, i, j, k);
    }
    if (up != k) return std::nullopt;
    return Generator::tau3(i, j, k);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

GlMorphism identity_morphism(GlObject a) { return {a, a, {}}; }

GlMorphism morphism_of(const Generator& g) {
  if (g.is_identity()) return identity_morphism(g.dom());
  return {g.dom(), g.cod(), {g}};
}

GlMorphism compose_hom(const GlMorphism& g, const GlMorphism& f) {
  if (!(f.cod == g.dom)) throw CompositionMismatch("CompositionMismatch in Gl(I)");
  GlMorphism out{f.dom, g.cod, f.path};
  out.path.insert(out.path.end(), g.path.begin(), g.path.end());
  if (out.dom == out.cod) out.path.clear();
  return out;
}

std::vector<Generator> generators(std::size_t n) {
  std::vector<Generator> out;
  const int N = static_cast<int>(n);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      out.push_back(Generator::eta(i, j));
      out.push_back(Generator::tau(i, j));
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        out.push_back(Generator::eta3(j, i, j, k));
        out.push_back(Generator::eta3(k, i, j, k));
        out.push_back(Generator::tau3(i, j, k));
      }
  return out;
}

GlCategory::GlCategory(std::size_t n) : n_(n), generators_(gluing::generators(n)) {
  const int N = static_cast<int>(n);
  std::set<GlObject> objs;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        objs.insert(normalize({i}));
        objs.insert(normalize({i, j}));
        objs.insert(normalize({i, j, k}));
      }
  objects_.assign(objs.begin(), objs.end());
  for (std::size_t p = 0; p < objects_.size(); ++p) pos_[objects_[p]] = p;

  std::map<std::pair<GlObject, GlObject>, Generator> distinct;
  for (const auto& g : generators_)
    if (!g.is_identity()) distinct.emplace(std::make_pair(g.dom(), g.cod()), g);
  for (const auto& [ends, g] : distinct) edges_.push_back(g);

  std::vector<std::vector<std::size_t>> out_edges(objects_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) out_edges[pos_.at(edges_[e].dom())].push_back(e);

  reach_.assign(objects_.size(), std::vector<std::optional<Generator>>(objects_.size()));
  for (std::size_t s = 0; s < objects_.size(); ++s) {
    std::vector<bool> seen(objects_.size(), false);
    seen[s] = true;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t e : out_edges[a]) {
        std::size_t b = pos_.at(edges_[e].cod());
        if (seen[b]) continue;
        seen[b] = true;
        reach_[s][b] = edges_[e];
        queue.push_back(b);
      }
    }
  }
}

bool GlCategory::contains(const GlObject& a) const { return pos_.count(a) != 0; }

std::optional<GlMorphism> GlCategory::hom(const GlObject& a, const GlObject& b) const {
  auto ia = pos_.find(a);
  auto ib = pos_.find(b);
  if (ia == pos_.end() || ib == pos_.end()) return std::nullopt;
  if (a == b) return identity_morphism(a);
  if (!reach_[ia->second][ib->second]) return std::nullopt;
  std::vector<Generator> path;
  std::size_t cur = ib->second;
  while (cur != ia->second) {
    const Generator& g = *reach_[ia->second][cur];
    path.push_back(g);
    cur = pos_.at(g.dom());
  }
  std::reverse(path.begin(), path.end());
  return GlMorphism{a, b, std::move(path)};
}

Report verify_relations(std::size_t n) {
  Report r;
  r.title = "index category relations for |I| = " + std::to_string(n);
  const IndexSet idx = IndexSet::numbered(n);
  const GlCategory cat(n);
  const int N = static_cast<int>(n);
  auto M = [](const Generator& g) { return morphism_of(g); };
  auto is_id = [](const GlMorphism& m) { return m.dom == m.cod; };

  // Both sides must compose, agree on endpoints, and be realised by hom.
  auto equal = [&](const std::string& family, const GlMorphism& lhs, const GlMorphism& rhs,
                   const std::string& where) {
    bool ok = lhs == rhs;
    auto h = cat.hom(lhs.dom, lhs.cod);
    ok = ok && h.has_value() && *h == lhs;
    r.record(family, ok, where);
  };
  auto composed = [&](const std::string& family, const Generator& g, const Generator& f,
                      const std::string& where) -> std::optional<GlMorphism> {
    try {
      return compose_hom(M(g), M(f));
    } catch (const CompositionMismatch&) {
      r.record(family, false, "not composable at " + where);
      return std::nullopt;
    }
  };

  for (int i = 0; i < N; ++i) {
    std::string w = "i=" + idx.name(i);
    r.record("(a) eta_ii = tau_ii = id",
             is_id(M(Generator::eta(i, i))) && is_id(M(Generator::tau(i, i))), w);
  }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      std::string w = "(i,j)=(" + idx.name(i) + "," + idx.name(j) + ")";
      if (auto c = composed("(b) tau_ij tau_ji = id", Generator::tau(i, j), Generator::tau(j, i), w))
        equal("(b) tau_ij tau_ji = id", *c, identity_morphism(normalize({i, j})), w);
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        std::string w = "(i,j,k)=(" + idx.name(i) + "," + idx.name(j) + "," + idx.name(k) + ")";
        if (auto c = composed("(c) triple transpositions", Generator::tau3(i, j, k),
                              Generator::tau3(j, k, i), w))
          equal("(c) triple transpositions", *c, M(Generator::tau3(i, k, j)), w);
        if (auto c = composed("(c) triple transpositions", Generator::tau3(i, j, k),
                              Generator::tau3(j, i, k), w))
          equal("(c) triple transpositions", *c, identity_morphism(normalize({i, j, k})), w);
        auto l = composed("(d) pushout square", Generator::eta3(j, i, j, k), Generator::eta(i, j), w);
        auto rr = composed("(d) pushout square", Generator::eta3(k, i, j, k), Generator::eta(i, k), w);
        if (l && rr) equal("(d) pushout square", *l, *rr, w);
        auto l2 = composed("(e) transposition square", Generator::tau3(i, j, k),
                           Generator::eta3(i, j, i, k), w);
        auto r2 = composed("(e) transposition square", Generator::eta3(j, i, j, k),
                           Generator::tau(i, j), w);
        if (l2 && r2) equal("(e) transposition square", *l2, *r2, w);
      }
  for (const auto& g : cat.generators()) {
    auto h = cat.hom(g.dom(), g.cod());
    r.record("generators realised by hom", h.has_value(), g.label(idx));
  }
  // Identity and associativity laws over all composable object triples.
  for (const auto& a : cat.objects())
    for (const auto& b : cat.objects()) {
      auto f = cat.hom(a, b);
      if (!f) continue;
      r.record("identity laws",
               compose_hom(*f, identity_morphism(a)) == *f &&
                   compose_hom(identity_morphism(b), *f) == *f,
               a.str(idx) + "->" + b.str(idx));
      for (const auto& c : cat.objects()) {
        auto g = cat.hom(b, c);
        if (!g) continue;
        auto gf = compose_hom(*g, *f);
        auto direct = cat.hom(a, c);
        r.record("composites realised by hom", direct && *direct == gf,
                 a.str(idx) + "->" + b.str(idx) + "->" + c.str(idx));
      }
    }
  std::string degenerate;
  for (const auto& o : cat.objects())
    if (o.degenerate()) degenerate += (degenerate.empty() ? "" : " ") + o.str(idx);
  if (!degenerate.empty())
    r.notes.push_back("degenerate triples kept as distinct objects: " + degenerate);
  return r;
}

}  // namespace gluing
