#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gluing/fintop.hpp"
#include "gluing/glidx.hpp"
#include "gluing/report.hpp"

namespace gluing {

// Concrete gluing data. All maps run in the continuous direction:
//   anchor(i,j):            U_ij -> U_i
//   transition(i,j):        U_ij -> U_ji
//   triple(i,j,k):          T_ijk = U_ij x_{U_i} U_ik with its two projections
//   triple_transition(i,j,k): T_ijk -> T_jik
class GluingData {
 public:
  std::string name;
  IndexSet index;

  std::size_t n() const { return index.size(); }
  const SpacePtr& patch(int i) const { return patch_[static_cast<std::size_t>(i)]; }
  const SpacePtr& overlap(int i, int j) const { return overlap_[at(i, j)]; }
  const SpaceMap& anchor(int i, int j) const { return anchor_[at(i, j)]; }
  const SpaceMap& transition(int i, int j) const { return transition_[at(i, j)]; }
  const Pullback& triple(int i, int j, int k) const { return triple_[at(i, j, k)]; }
  const std::optional<SpaceMap>& triple_transition(int i, int j, int k) const {
    return triple_transition_[at(i, j, k)];
  }
  bool has_triple_maps() const;

  void set_triple_transition(int i, int j, int k, SpaceMap m);
  void clear_triple_transitions();
  // Replace a transition map in place (mutation tests).
  void set_transition(int i, int j, SpaceMap m);

  friend GluingData make_gluing_data(std::string, IndexSet, std::vector<SpacePtr>,
                                     std::map<std::pair<int, int>, SpacePtr>,
                                     std::map<std::pair<int, int>, SpaceMap>,
                                     std::map<std::pair<int, int>, SpaceMap>);

 private:
  std::size_t at(int i, int j) const { return static_cast<std::size_t>(i) * n() + j; }
  std::size_t at(int i, int j, int k) const { return (static_cast<std::size_t>(i) * n() + j) * n() + k; }

  std::vector<SpacePtr> patch_;
  std::vector<SpacePtr> overlap_;
  std::vector<SpaceMap> anchor_;
  std::vector<SpaceMap> transition_;
  std::vector<Pullback> triple_;
  std::vector<std::optional<SpaceMap>> triple_transition_;
};

// Entries for (i,i) may be omitted and default to U_i with identity maps.
// Throws CompositionMismatch when a map's domain or codomain is mistyped and
// InputError when a required (i,j) entry is missing.
GluingData make_gluing_data(std::string name, IndexSet index, std::vector<SpacePtr> patches,
                            std::map<std::pair<int, int>, SpacePtr> overlaps,
                            std::map<std::pair<int, int>, SpaceMap> anchors,
                            std::map<std::pair<int, int>, SpaceMap> transitions);

// Patch, overlap or triple pullback space sitting at an object.
SpacePtr object_space(const GluingData& gd, const GlObject& a);

// Coordinate swap T_ijk -> T_ikj.
SpaceMap triple_swap(const GluingData& gd, int i, int j, int k);

Report validate(const GluingData& gd);

// Fills every triple transition with the unique point whose first coordinate
// is forced by the pair transition. Throws NotDetermined, or ValidationFailed
// when the completed data does not validate and check_result is set.
GluingData derive_triple_maps(GluingData gd, bool check_result = true);

bool same_data(const GluingData& a, const GluingData& b);

class GluingFunctor {
 public:
  // Throws ValidationFailed when the data or the functoriality checks fail.
  explicit GluingFunctor(GluingData gd);

  const GluingData& data() const { return data_; }
  const IndexSet& index() const { return data_.index; }
  const GlCategory& category() const { return cat_; }
  SpacePtr object(const GlObject& a) const;
  // Image of a generator a -> b as a map F(b) -> F(a).
  SpaceMap generator_image(const Generator& g) const;
  // Image of a morphism a -> b as a map F(b) -> F(a). Throws UnknownMorphism.
  SpaceMap eval(const GlMorphism& m) const;
  const Report& functoriality() const { return functoriality_; }

 private:
  SpaceMap formula_image(const Generator& g) const;
  SpaceMap to_ordered(int i, int j, int k) const;
  SpaceMap from_ordered(int i, int j, int k) const;

  GluingData data_;
  GlCategory cat_;
  std::map<std::pair<GlObject, GlObject>, SpaceMap> hom_image_;
  Report functoriality_;
};

GluingFunctor functor_of(const GluingData& gd);
// Reads patch, overlap, anchor, transition and triple maps back off the functor.
GluingData data_of(const GluingFunctor& f);

}  // namespace gluing
