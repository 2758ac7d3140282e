#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gluing/fintop.hpp"
#include "gluing/gdata.hpp"
#include "gluing/glidx.hpp"
#include "gluing/report.hpp"

namespace gluing {

// The overlap relation on the disjoint union of the patches.
struct Relation {
  Coproduct coproduct;  // points tagged "x@i" with i the index name
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

Relation build_relation(const GluingData& gd);
Report check_equivalence(const Relation& rel);

struct GluedSpace {
  SpacePtr space;
  std::map<GlObject, SpaceMap> legs;
  Relation relation;                             // empty for external candidates
  std::vector<std::vector<std::string>> classes;  // members of each point of space
  std::optional<SpaceMap> projection;

  const SpaceMap& leg(const GlObject& a) const;
};

GluedSpace glue(const GluingFunctor& f);
GluedSpace glue(const GluingData& gd);

struct Cone {
  SpacePtr apex;
  std::map<GlObject, SpaceMap> legs;  // psi_a : F(a) -> apex
};

// Fills absent pair and triple legs as psi_i composed with the functor image.
// Throws MissingLeg when a patch leg is absent.
Cone complete_cone(const GluingFunctor& f, Cone cone);
Cone cone_of(const GluedSpace& g);

enum class ConeMode { full, figure3, figure4 };

const char* to_string(ConeMode m);
std::optional<ConeMode> parse_cone_mode(const std::string& s);

// Evaluates the commuting conditions of the chosen mode. Every leg named by
// the mode must be present (MissingLeg otherwise); nothing is auto-completed.
bool check_cone(const GluingFunctor& f, const Cone& cone, ConeMode mode,
                std::string* witness = nullptr);

Report check_glued_properties(const GluingFunctor& f, const GluedSpace& candidate);

// The map mu : Q -> apex with mu o iota_a = psi_a. Throws NotCovering,
// IllDefined or NotContinuous.
SpaceMap mediate(const GluingFunctor& f, const GluedSpace& glued, const Cone& cone);

struct UniversalOptions {
  std::vector<SpacePtr> apexes;  // empty means PT, SIERP, DISC2, ARC3
  bool include_self = true;
  SearchBudget budget;
};

Report verify_universal(const GluingFunctor& f, const GluedSpace& glued,
                        const UniversalOptions& opts = {});

Report check_otop(const GluingFunctor& f, const GluedSpace& glued);

}  // namespace gluing
