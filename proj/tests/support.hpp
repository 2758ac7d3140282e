#pragma once

// Independent oracles and random generators for the tests. Nothing here calls
// the min-open machinery it is meant to check: topologies are closed by brute
// force over subset bitmasks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gluing/fintop.hpp"
#include "gluing/gdata.hpp"
#include "gluing/glue.hpp"

namespace support {

using Mask = std::uint32_t;
using gluing::FiniteSpace;
using gluing::PointSet;
using gluing::SpaceMap;
using gluing::SpacePtr;

inline Mask full_mask(std::size_t n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Closes a family of subsets under pairwise unions and intersections.
inline std::set<Mask> close_topology(std::size_t n, const std::vector<Mask>& gens) {
  std::set<Mask> t = {0, full_mask(n)};
  t.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(t.begin(), t.end());
    for (Mask a : cur)
      for (Mask b : cur) {
        grew |= t.insert(a | b).second;
        grew |= t.insert(a & b).second;
      }
  }
  return t;
}

inline Mask mask_of(const PointSet& s) {
  Mask m = 0;
  for (std::size_t x : s.elements()) m |= Mask{1} << x;
  return m;
}

// Open sets of s, generated from the minimal opens as a subbasis.
inline std::set<Mask> opens(const FiniteSpace& s) {
  std::vector<Mask> gens;
  for (std::size_t x = 0; x < s.size(); ++x) gens.push_back(mask_of(s.min_open(x)));
  return close_topology(s.size(), gens);
}

inline Mask image(const SpaceMap& f, Mask a) {
  Mask out = 0;
  for (std::size_t x = 0; x < f.dom()->size(); ++x)
    if (a >> x & 1) out |= Mask{1} << f(x);
  return out;
}

inline Mask preimage(const SpaceMap& f, Mask b) {
  Mask out = 0;
  for (std::size_t x = 0; x < f.dom()->size(); ++x)
    if (b >> f(x) & 1) out |= Mask{1} << x;
  return out;
}

inline bool continuous(const SpaceMap& f) {
  auto od = opens(*f.dom());
  for (Mask v : opens(*f.cod()))
    if (!od.count(preimage(f, v))) return false;
  return true;
}

inline bool open_map(const SpaceMap& f) {
  auto oc = opens(*f.cod());
  for (Mask u : opens(*f.dom()))
    if (!oc.count(image(f, u))) return false;
  return true;
}

inline bool injective(const SpaceMap& f) {
  std::set<std::size_t> seen(f.table().begin(), f.table().end());
  return seen.size() == f.dom()->size();
}

// Subspace topology of f(dom) pulled back along f equals the topology of dom.
inline bool embedding(const SpaceMap& f) {
  if (!injective(f) || !continuous(f)) return false;
  auto oc = opens(*f.cod());
  std::set<Mask> induced;
  for (Mask v : oc) induced.insert(preimage(f, v));
  return induced == opens(*f.dom());
}

// Every function A -> B, filtered by the continuity oracle.
inline std::size_t count_continuous(const SpacePtr& a, const SpacePtr& b) {
  std::size_t n = a->size(), m = b->size(), total = 1, count = 0;
  for (std::size_t k = 0; k < n; ++k) total *= m;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> t(n);
    std::size_t c = code;
    for (std::size_t k = 0; k < n; ++k) {
      t[k] = c % m;
      c /= m;
    }
    if (continuous(SpaceMap(a, b, t))) ++count;
  }
  return count;
}

// Opens of the quotient of x by the class map cls: S is open when its
// preimage is open in x.
inline std::set<Mask> final_topology(const FiniteSpace& x, const std::vector<std::size_t>& cls,
                                     std::size_t classes) {
  auto ox = opens(x);
  std::set<Mask> out;
  for (Mask s = 0; s <= full_mask(classes); ++s) {
    Mask pre = 0;
    for (std::size_t p = 0; p < x.size(); ++p)
      if (s >> cls[p] & 1) pre |= Mask{1} << p;
    if (ox.count(pre)) out.insert(s);
    if (s == full_mask(classes)) break;
  }
  return out;
}

// Brute-force homeomorphism test: some bijection matches open-set families.
inline bool homeomorphic(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.size() != b.size()) return false;
  auto oa = opens(a), ob = opens(b);
  if (oa.size() != ob.size()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (Mask u : oa) {
      Mask v = 0;
      for (std::size_t x = 0; x < a.size(); ++x)
        if (u >> x & 1) v |= Mask{1} << perm[x];
      if (!ob.count(v)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Union-find over arbitrary keys.
template <class T>
class Classes {
 public:
  const T& find(const T& x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) return parent_.emplace(x, x).first->first;
    if (it->second == x) return it->first;
    T root = find(it->second);
    it->second = root;
    return parent_.find(root)->first;
  }
  void unite(const T& a, const T& b) {
    T ra = find(a), rb = find(b);
    if (ra != rb) parent_[ra] = rb;
  }
  bool same(const T& a, const T& b) { return find(a) == find(b); }

 private:
  std::map<T, T> parent_;
};

// ---- random generators ----

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline SpacePtr random_space(Rng& rng, std::size_t n, const std::string& name,
                             const std::string& prefix = "x") {
  std::vector<std::string> pts;
  for (std::size_t x = 0; x < n; ++x) pts.push_back(prefix + std::to_string(x));
  std::vector<std::vector<std::string>> gens;
  const std::size_t k = pick(rng, 0, n + 1);
  for (std::size_t g = 0; g < k; ++g) {
    std::vector<std::string> s;
    for (const auto& p : pts)
      if (pick(rng, 0, 1)) s.push_back(p);
    gens.push_back(s);
  }
  return gluing::share(FiniteSpace::from_opens(name, pts, gens));
}

inline SpaceMap random_map(Rng& rng, const SpacePtr& a, const SpacePtr& b) {
  std::vector<std::size_t> t(a->size());
  for (auto& v : t) v = pick(rng, 0, b->size() - 1);
  return SpaceMap(a, b, t);
}

// Valid gluing data cut out of a random global space: patches are random
// subspaces with shuffled point names, overlaps are the intersections.
inline gluing::GluingData random_gluing_data(Rng& rng, std::size_t patches, std::size_t max_points,
                                             const std::string& name) {
  const std::size_t g = pick(rng, 1, std::min<std::size_t>(patches * max_points, 8));
  SpacePtr global = random_space(rng, g, name + ".G", "g");
  std::vector<PointSet> members;
  for (std::size_t i = 0; i < patches; ++i) {
    PointSet s(g);
    std::vector<std::size_t> order(g);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t size = pick(rng, 1, std::min(max_points, g));
    for (std::size_t k = 0; k < size; ++k) s.insert(order[k]);
    members.push_back(s);
  }
  // Patch i: subspace on members[i] with points renamed "p<i>_<k>" in a
  // shuffled order so that names carry no identification.
  std::vector<SpacePtr> patch;
  std::vector<std::map<std::size_t, std::size_t>> local;  // global point -> patch index
  for (std::size_t i = 0; i < patches; ++i) {
    std::vector<std::size_t> pts = members[i].elements();
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<std::string> names;
    std::map<std::size_t, std::size_t> at;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      names.push_back("p" + std::to_string(i + 1) + "_" + std::to_string(k));
      at[pts[k]] = k;
    }
    std::vector<PointSet> table;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      PointSet t(pts.size());
      for (std::size_t y : (global->min_open(pts[k]) & members[i]).elements()) t.insert(at[y]);
      table.push_back(t);
    }
    patch.push_back(gluing::share(FiniteSpace::from_table(
        name + ".U" + std::to_string(i + 1), names, table)));
    local.push_back(at);
  }
  std::map<std::pair<int, int>, SpacePtr> overlaps;
  std::map<std::pair<int, int>, SpaceMap> anchors, transitions;
  std::map<std::pair<int, int>, std::vector<std::size_t>> over_pts;
  for (std::size_t i = 0; i < patches; ++i)
    for (std::size_t j = 0; j < patches; ++j) {
      if (i == j) continue;
      PointSet both = members[i] & members[j];
      std::vector<std::size_t> pts = both.elements();
      std::shuffle(pts.begin(), pts.end(), rng);
      std::vector<std::string> names;
      std::vector<std::size_t> to_patch;
      std::map<std::size_t, std::size_t> at;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        names.push_back("o" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(k));
        at[pts[k]] = k;
        to_patch.push_back(local[i].at(pts[k]));
      }
      std::vector<PointSet> table;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        PointSet t(pts.size());
        for (std::size_t y : (global->min_open(pts[k]) & both).elements()) t.insert(at[y]);
        table.push_back(t);
      }
      auto key = std::make_pair(static_cast<int>(i), static_cast<int>(j));
      overlaps[key] = gluing::share(FiniteSpace::from_table(
          name + ".U" + std::to_string(i + 1) + std::to_string(j + 1), names, table));
      anchors.emplace(key, SpaceMap(overlaps[key], patch[i], to_patch));
      over_pts[key] = pts;
    }
  for (const auto& [key, pts] : over_pts) {
    auto back = std::make_pair(key.second, key.first);
    const auto& other = over_pts.at(back);
    std::vector<std::size_t> t(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k)
      t[k] = static_cast<std::size_t>(std::find(other.begin(), other.end(), pts[k]) - other.begin());
    transitions.emplace(key, SpaceMap(overlaps.at(key), overlaps.at(back), t));
  }
  return gluing::derive_triple_maps(gluing::make_gluing_data(
      name, gluing::IndexSet::numbered(patches), patch, overlaps, anchors, transitions));
}

// Twists phi_ij by a nontrivial permutation of U_ij (and phi_ji by its
// inverse) while keeping the old triple maps. Returns false when no overlap
// has two points.
inline bool mutate_cocycle(Rng& rng, gluing::GluingData& gd) {
  std::vector<std::pair<int, int>> candidates;
  const int n = static_cast<int>(gd.n());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && gd.overlap(i, j)->size() >= 2) candidates.emplace_back(i, j);
  if (candidates.empty()) return false;
  auto [i, j] = candidates[pick(rng, 0, candidates.size() - 1)];
  const std::size_t m = gd.overlap(i, j)->size();
  std::vector<std::size_t> sigma(m);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do std::shuffle(sigma.begin(), sigma.end(), rng);
  while (std::is_sorted(sigma.begin(), sigma.end()));
  std::vector<std::size_t> inv(m);
  for (std::size_t k = 0; k < m; ++k) inv[sigma[k]] = k;
  const SpacePtr uij = gd.overlap(i, j);
  SpaceMap s(uij, uij, sigma), s_inv(uij, uij, inv);
  SpaceMap phi = gluing::compose(gd.transition(i, j), s);
  SpaceMap back = gluing::compose(s_inv, gd.transition(j, i));
  gd.set_transition(i, j, phi);
  gd.set_transition(j, i, back);
  return true;
}

// Candidate leg family: continuous patch legs into a random apex, completed,
// then with probability one half a non-patch leg is replaced at random.
inline gluing::Cone random_cone(Rng& rng, const gluing::GluingFunctor& f,
                                const std::vector<SpacePtr>& apexes) {
  const SpacePtr apex = apexes[pick(rng, 0, apexes.size() - 1)];
  gluing::Cone c{apex, {}};
  for (int i = 0; i < static_cast<int>(f.index().size()); ++i) {
    auto maps = gluing::enumerate_continuous_maps(f.data().patch(i), apex);
    c.legs.emplace(gluing::GlObject::single(i), maps[pick(rng, 0, maps.size() - 1)]);
  }
  c = gluing::complete_cone(f, std::move(c));
  if (pick(rng, 0, 1) == 1) {
    std::vector<gluing::GlObject> others;
    for (const auto& a : f.category().objects())
      if (a.kind != gluing::GlObject::Kind::single) others.push_back(a);
    const auto& a = others[pick(rng, 0, others.size() - 1)];
    auto maps = gluing::enumerate_continuous_maps(f.object(a), apex);
    c.legs.at(a) = maps[pick(rng, 0, maps.size() - 1)];
  }
  return c;
}

}  // namespace support
