#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gluing/fintop.hpp"
#include "gluing/gdata.hpp"
#include "gluing/glue.hpp"
#include "gluing/report.hpp"

namespace gluing {

enum class CoverKind { gluing, open };

const char* to_string(CoverKind k);
std::optional<CoverKind> parse_cover_kind(const std::string& s);

// Legs iota_i : U_i -> base; the patch of a leg is its domain.
struct Covering {
  std::string name;
  SpacePtr base;
  std::vector<SpaceMap> legs;
  CoverKind kind = CoverKind::gluing;
};

Report check_covering(const Covering& c);

struct CoveringGluing {
  GluingData data;
  GluedSpace glued;
  std::optional<SpaceMap> comparison;  // mu : Q -> base
  Report report;
};

// Overlaps are the pullbacks U_i x_U U_j with first projections as anchors and
// coordinate swaps as transitions.
CoveringGluing functor_of_covering(const Covering& c);

// Legs of a glued space as a covering; kind is open when every anchor and
// transition is an open map.
Covering covering_of_glued(const GluingFunctor& f, const GluedSpace& glued);

bool site_axiom_iso(const SpaceMap& phi);

// sub[i] must cover the patch of leg i. The flag is check_covering on the
// composite family.
std::pair<Covering, bool> site_axiom_compose(const Covering& c, const std::vector<Covering>& sub);

// Pulls every leg back along phi : V -> base.
std::pair<Covering, bool> site_axiom_basechange(const Covering& c, const SpaceMap& phi);

struct SiteReport {
  Report report;
  std::size_t instances = 0;
  std::size_t open_instances = 0;
  std::size_t kind_preserved = 0;
};

// Randomized coverings of spaces with at most max_points points, both kinds.
SiteReport run_site_batch(std::uint64_t seed, std::size_t count, std::size_t max_points = 8);

}  // namespace gluing
