#pragma once

#include <string>

#include "gluing/cover.hpp"
#include "gluing/fintop.hpp"
#include "gluing/gdata.hpp"
#include "gluing/glue.hpp"
#include "gluing/refine.hpp"

// Small named spaces, gluing data and coverings shared by the tests, the
// acceptance binary and the data files.
namespace gluing::fixtures {

SpacePtr pt();
SpacePtr sierp();
SpacePtr disc2();
SpacePtr arc3();
SpacePtr sq9();
// Pseudocircle with points l, r, m1, m2.
SpacePtr c4();
// The endpoints {l, r} of ARC3 as a discrete subspace.
SpacePtr ends();

GluingData trivial(const SpacePtr& u);
// Two arcs glued at both endpoints.
GluingData circ();
// circ() with phi_21 swapped so it no longer inverts phi_12.
GluingData circ_bad_inverse();
// Two DISC2 patches sharing the point a.
GluingData two_disc_point();
// circ() with only the l endpoints identified.
GluingData circ_one_identification();
// glue(circ_one_identification()) offered as a candidate over circ(): only
// the patch legs are kept, pair and triple legs come from the circ functor.
GluedSpace circ_mutant_candidate();
// Three DISC2 patches whose transitions compose to a swap around the loop.
// Triple maps keep point names, so the first-projection clause fails.
GluingData broken_cocycle();

// Gluing of ARC3 x Y with itself along ENDS x Y; glues to C4 x Y.
FunctorPtr cylinder(const SpacePtr& y, const std::string& name);
// Components id x fy on patches, the rest forced.
Refinement cylinder_refinement(const std::string& name, const FunctorPtr& fine,
                               const FunctorPtr& coarse, const SpaceMap& fy);

GdfGluingData torus_meta();
// Same shape, but the degenerate triple node doubles the ends, so the glued
// triple is twice the pullback of the glued pairs.
GdfGluingData torus_counter_meta();
// Second stage of the sequential route: two glued cylinders identified along
// the classes over the y-ends.
GluingData torus_sequential(const GluedSpace& cyl1, const GluedSpace& cyl2);
SpacePtr c4_squared();

Covering c4_two_arcs();
Covering sq9_two_strips();

}  // namespace gluing::fixtures
