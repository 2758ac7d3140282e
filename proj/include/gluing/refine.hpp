#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gluing/gdata.hpp"
#include "gluing/glidx.hpp"
#include "gluing/glue.hpp"
#include "gluing/report.hpp"

namespace gluing {

struct IndexMap {
  IndexSet source;
  IndexSet target;
  std::vector<int> table;

  int operator()(int i) const { return table.at(static_cast<std::size_t>(i)); }
  static IndexMap identity(const IndexSet& s);
  bool surjective() const;
  bool injective() const;
};

GlObject reindex_object(const IndexMap& gamma, const GlObject& a);
Generator reindex_generator(const IndexMap& gamma, const Generator& g);

struct Reindexing {
  std::map<GlObject, GlObject> objects;
  std::vector<std::pair<Generator, Generator>> generators;
};

Reindexing reindex(const IndexMap& gamma);

// Checks that reindexed generators keep their endpoints consistent with the
// object table and that every relation family survives substitution.
Report check_reindex(const IndexMap& gamma);

using FunctorPtr = std::shared_ptr<const GluingFunctor>;

// Components rho_a : fine(Gl(gamma)(a)) -> coarse(a), continuous direction.
struct Refinement {
  std::string name;
  IndexMap gamma;
  FunctorPtr fine;
  FunctorPtr coarse;
  std::map<GlObject, SpaceMap> components;
};

Refinement identity_refinement(const FunctorPtr& f);

// Fills pair and triple components that the naturality squares force.
// Throws MissingComponent when a single component is absent or a square
// leaves a choice open.
Refinement complete_refinement(Refinement r);

Report check_refinement(const Refinement& r);

// Pastes inner : H -> G after outer : G -> F into H -> F.
Refinement compose_refinements(const Refinement& outer, const Refinement& inner);

// The map glued(fine) -> glued(coarse) induced by the refinement.
SpaceMap induced_map(const Refinement& r, const GluedSpace& glued_fine,
                     const GluedSpace& glued_coarse);

// Gluing data whose nodes are gluing functors. An edge for a morphism a -> b
// of Gl(I) is a refinement from node(b) to node(a).
struct GdfGluingData {
  std::string name;
  IndexSet index;
  std::map<GlObject, FunctorPtr> nodes;
  std::map<std::pair<GlObject, GlObject>, Refinement> edges;
};

struct ComposedGluing {
  GluingData data;
  std::shared_ptr<const GluingFunctor> functor;
  std::map<GlObject, GluedSpace> node_glued;
  std::map<std::pair<GlObject, GlObject>, SpaceMap> induced;
  Report report;
};

// Throws HypothesisBFailed when a glued triple is not the pullback of the
// glued pairs, ValidationFailed when an edge is not a refinement.
ComposedGluing compose_gdf(const GdfGluingData& meta);

}  // namespace gluing
