#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gluing/report.hpp"

namespace gluing {

// Named finite index set; indices are positions 0..n-1.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<std::string> names);
  static IndexSet numbered(std::size_t n);  // "1".."n"

  std::size_t size() const { return names_.size(); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::string> names_;
};

// Normal form of an object of the gluing index category.
struct GlObject {
  enum class Kind { single = 1, pair = 2, triple = 3 };
  Kind kind = Kind::single;
  int i = 0;
  int j = 0;  // pair: second index; triple: smaller of the unordered pair
  int k = 0;  // triple: larger of the unordered pair

  static GlObject single(int i) { return {Kind::single, i, 0, 0}; }

  std::vector<int> tuple() const;
  // A triple whose unordered pair contains its first index, like [i,i,k].
  bool degenerate() const { return kind == Kind::triple && (j == i || k == i); }
  std::string str(const IndexSet& idx) const;

  friend auto operator<=>(const GlObject&, const GlObject&) = default;
};

// Applies i=(i,i), (i,j,j)=(i,j), (i,j,k)=(i,k,j). Throws BadArity.
GlObject normalize(const std::vector<int>& raw);

struct Generator {
  enum class Kind { eta, tau, eta3, tau3 };
  Kind kind = Kind::eta;
  int i = 0, j = 0, k = 0;
  int n = 0;  // upper index of eta3; for tau3 it is always k

  static Generator eta(int i, int j) { return {Kind::eta, i, j, 0, 0}; }
  static Generator tau(int i, int j) { return {Kind::tau, i, j, 0, 0}; }
  static Generator eta3(int n, int i, int j, int k) { return {Kind::eta3, i, j, k, n}; }
  static Generator tau3(int i, int j, int k) { return {Kind::tau3, i, j, k, k}; }

  GlObject dom() const;
  GlObject cod() const;
  bool is_identity() const { return dom() == cod(); }
  std::string label(const IndexSet& idx) const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

// Parses labels like "eta(1,2)", "tau(1,2)", "eta^2(1,2,3)", "tau^3(1,2,3)".
std::optional<Generator> parse_generator(const std::string& text, const IndexSet& idx);

struct GlMorphism {
  GlObject dom;
  GlObject cod;
  std::vector<Generator> path;  // diagnostic only; equality is by endpoints

  bool is_identity() const { return dom == cod; }
  friend bool operator==(const GlMorphism& a, const GlMorphism& b) {
    return a.dom == b.dom && a.cod == b.cod;
  }
};

GlMorphism identity_morphism(GlObject a);
GlMorphism morphism_of(const Generator& g);
// Throws CompositionMismatch unless cod(f) == dom(g).
GlMorphism compose_hom(const GlMorphism& g, const GlMorphism& f);

class GlCategory {
 public:
  explicit GlCategory(std::size_t n);

  std::size_t index_count() const { return n_; }
  const std::vector<GlObject>& objects() const { return objects_; }
  // Every generator, 2n^2 + 3n^3 entries, before deduplication.
  const std::vector<Generator>& generators() const { return generators_; }
  // One representative generator per distinct non-identity (dom, cod) pair.
  const std::vector<Generator>& edges() const { return edges_; }
  std::optional<GlMorphism> hom(const GlObject& a, const GlObject& b) const;
  bool contains(const GlObject& a) const;

 private:
  std::size_t n_;
  std::vector<GlObject> objects_;
  std::vector<Generator> generators_;
  std::vector<Generator> edges_;
  std::map<GlObject, std::size_t> pos_;
  // reach_[a][b] = last generator on a shortest path from a to b
  std::vector<std::vector<std::optional<Generator>>> reach_;
};

std::vector<Generator> generators(std::size_t n);

Report verify_relations(std::size_t n);

}  // namespace gluing
