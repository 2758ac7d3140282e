#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gluing/cover.hpp"
#include "gluing/fintop.hpp"
#include "gluing/gdata.hpp"
#include "gluing/glidx.hpp"
#include "gluing/refine.hpp"

namespace gluing {

struct ConeDecl {
  std::string gluing;
  SpacePtr apex;
  std::map<GlObject, SpaceMap> legs;
};

struct RefinementDecl {
  IndexMap gamma;  // coarse index -> fine index
  std::string fine;
  std::string coarse;
  std::map<GlObject, SpaceMap> components;
};

struct MetaDecl {
  IndexSet index;
  std::map<GlObject, std::string> nodes;  // gluing names
  std::map<std::pair<GlObject, GlObject>, std::string> edges;  // refinement names
};

// A parsed spec file. Every name is unique across all sections.
class SpecDocument {
 public:
  std::map<std::string, SpacePtr> spaces;
  std::map<std::string, SpaceMap> maps;
  std::map<std::string, GluingData> gluings;
  std::map<std::string, ConeDecl> cones;
  std::map<std::string, RefinementDecl> refinements;
  std::map<std::string, MetaDecl> metas;
  std::map<std::string, Covering> coverings;

  // Cached so that refinements and meta nodes share functor objects.
  // Throws UnresolvedReference or ValidationFailed.
  FunctorPtr functor(const std::string& gluing) const;
  Refinement refinement(const std::string& name) const;
  Cone cone(const std::string& name) const;
  GdfGluingData meta(const std::string& name) const;

  // Registration helpers used to build documents from in-memory objects.
  // Spaces referenced by the added object are registered too; a different
  // space under an existing name throws DuplicateName.
  void add_space(const SpacePtr& s);
  void add_gluing(const GluingData& gd);
  void add_cone(const std::string& name, const std::string& gluing, const Cone& c);
  void add_meta(const GdfGluingData& meta);
  void add_covering(const Covering& c);

 private:
  mutable std::map<std::string, FunctorPtr> functors_;
};

struct ParseOptions {
  bool derive_triples = false;  // complete absent triple maps everywhere
};

// Throws ParseError, UnresolvedReference, DuplicateName and the topology
// input errors.
SpecDocument parse_spec(const std::string& text, const ParseOptions& opts = {});

// Triple maps that derive_triple_maps would reproduce are written as a
// "derive_triples" flag instead of tables.
std::string serialize(const SpecDocument& doc);

bool same_document(const SpecDocument& a, const SpecDocument& b);

// Object key "1", "1,2" or "1,1,2" as used in spec files.
std::string object_key(const GlObject& a, const IndexSet& idx);

}  // namespace gluing
