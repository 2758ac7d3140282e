#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gluing {

// Dynamic bitset over the point indices of one space.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe);
  static PointSet full(std::size_t universe);

  std::size_t universe() const { return n_; }
  bool contains(std::size_t x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(std::size_t x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(std::size_t x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
  bool empty() const;
  std::size_t count() const;
  bool subset_of(const PointSet& other) const;
  std::vector<std::size_t> elements() const;

  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// A finite topology stored as its minimal-open table.
class FiniteSpace {
 public:
  // Validates both min-open invariants; throws InvalidTopology or UnknownPoint.
  static FiniteSpace make(std::string name, std::vector<std::string> points,
                          const std::map<std::string, std::vector<std::string>>& min_open);
  static FiniteSpace from_table(std::string name, std::vector<std::string> points,
                                std::vector<PointSet> min_open);
  // Topology generated by an arbitrary family of subsets.
  static FiniteSpace from_opens(std::string name, std::vector<std::string> points,
                                const std::vector<std::vector<std::string>>& opens);

  const std::string& name() const { return name_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point(std::size_t x) const { return points_[x]; }
  std::size_t index_of(const std::string& p) const;
  std::optional<std::size_t> find(const std::string& p) const;
  const PointSet& min_open(std::size_t x) const { return min_open_[x]; }

  bool is_open(const PointSet& s) const;
  bool is_open(const std::vector<std::string>& subset) const;
  PointSet subset(const std::vector<std::string>& names) const;
  std::vector<std::string> names(const PointSet& s) const;
  std::string describe(const PointSet& s) const;

  // Structural equality: same point names with the same min-open sets.
  bool same_topology(const FiniteSpace& other) const;

 private:
  FiniteSpace() = default;
  void build_index();

  std::string name_;
  std::vector<std::string> points_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<PointSet> min_open_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

SpacePtr share(FiniteSpace s);

class SpaceMap {
 public:
  SpaceMap() = default;
  SpaceMap(SpacePtr dom, SpacePtr cod, std::vector<std::size_t> table);
  static SpaceMap from_names(SpacePtr dom, SpacePtr cod,
                             const std::map<std::string, std::string>& table);
  static SpaceMap identity(SpacePtr s);
  static SpaceMap constant(SpacePtr dom, SpacePtr cod, std::size_t value);

  const SpacePtr& dom() const { return dom_; }
  const SpacePtr& cod() const { return cod_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t operator()(std::size_t x) const { return table_[x]; }
  std::string apply(const std::string& p) const;

  PointSet image(const PointSet& s) const;
  PointSet image() const;
  PointSet preimage(const PointSet& s) const;

  bool continuous() const;
  bool injective() const;
  bool surjective() const;

  // Structural equality of domains, codomains and tables (by point name).
  bool equals(const SpaceMap& other) const;
  // First domain point where the two maps differ, rendered for reports.
  std::optional<std::string> difference(const SpaceMap& other) const;

 private:
  SpacePtr dom_;
  SpacePtr cod_;
  std::vector<std::size_t> table_;
};

struct MapReport {
  bool continuous = false;
  bool injective = false;
  bool open_map = false;
  bool embedding = false;
  std::vector<std::string> witnesses;
};

MapReport analyze_map(const SpaceMap& f);

SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

// Same map rebuilt over other domain/codomain objects of identical topology
// (matched by point name). Throws CompositionMismatch otherwise.
SpaceMap retarget(const SpaceMap& f, const SpacePtr& dom, const SpacePtr& cod,
                  const std::string& what = "map");

struct Coproduct {
  SpacePtr space;
  std::vector<SpaceMap> injections;
};

// Points are tagged "x@tag"; tags default to the position in the list.
Coproduct disjoint_union(const std::vector<SpacePtr>& spaces,
                         std::vector<std::string> tags = {}, std::string name = {});

struct Subspace {
  SpacePtr space;
  SpaceMap inclusion;
};

Subspace subspace(const SpacePtr& s, const PointSet& subset, std::string name = {});

struct Pullback {
  SpacePtr space;
  SpaceMap first;
  SpaceMap second;
};

// Points are "(u,v)" with f(u) = g(v).
Pullback pullback(const SpaceMap& f, const SpaceMap& g, std::string name = {});

SpacePtr terminal();
SpacePtr product(const SpacePtr& a, const SpacePtr& b, std::string name = {});
SpaceMap product_map(const SpaceMap& f, const SpaceMap& g, const SpacePtr& dom,
                     const SpacePtr& cod);

// Unique map into a pullback induced by a commuting pair (a: X -> A, b: X -> B).
SpaceMap pair_into(const Pullback& pb, const SpaceMap& a, const SpaceMap& b);

struct Quotient {
  SpacePtr space;
  SpaceMap projection;
  std::vector<std::vector<std::size_t>> classes;  // members per quotient point
};

Quotient quotient(const SpacePtr& s, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                  std::string name = {});

struct SearchBudget {
  std::uint64_t max_candidates = 1'000'000;
  std::uint64_t max_nodes = 5'000'000;
};

std::vector<SpaceMap> enumerate_continuous_maps(const SpacePtr& a, const SpacePtr& b,
                                                const SearchBudget& budget = {});

bool is_homeomorphism(const SpaceMap& f);

std::optional<SpaceMap> find_homeomorphism(const SpacePtr& a, const SpacePtr& b,
                                           const SearchBudget& budget = {});

}  // namespace gluing
