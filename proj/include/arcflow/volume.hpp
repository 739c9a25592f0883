#pragma once

#include "arcflow/cone.hpp"
#include "arcflow/numeric.hpp"

namespace arcflow {

/// Exact volume of c intersected with { x : 0 <= beta(x) <= 1 }, in the
/// coordinates supplied (Lebesgue measure of the ambient Z^n grid).
/// Requires: c pointed and full-dimensional, ambient dimension 2 or 3,
/// beta strictly positive on every extreme ray. A nonpositive value of beta
/// on a ray means the pyramid is unbounded and is rejected.
Rat pyramid_volume(const Cone& c, const RatVec& beta);

/// Area of a convex polygon given by its vertices (any order); exact.
Rat polygon_area(const std::vector<RatVec>& vertices);

/// Sorts points lying in a plane (dimension 2 affine hull) into convex
/// position order around their centroid; exact comparisons.
std::vector<RatVec> convex_cycle_order(const std::vector<RatVec>& pts);

}  // namespace arcflow
