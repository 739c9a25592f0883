#pragma once

#include "arcflow/numeric.hpp"

#include <vector>

namespace arcflow {

/// Rational polyhedral cone in Z^n, n <= 4 (the exact path; larger ambient
/// dimensions are rejected). `rays` is the minimal generating set: extreme
/// rays when the cone is pointed, plus +-v pairs spanning the lineality
/// space otherwise. `facets` generates the dual cone, so membership is a
/// sign check.
struct Cone {
  Eigen::Index ambient_dim = 0;
  std::vector<IntVec> generators;
  std::vector<IntVec> rays;
  std::vector<IntVec> facets;
};

Cone make_cone(Eigen::Index ambient_dim, const std::vector<IntVec>& generators);

/// Primitive, pairwise non-proportional, canonically sorted.
std::vector<IntVec> extreme_rays(const Cone& c);

/// { psi : psi(x) >= 0 for all x in c }.
Cone dual_cone(const Cone& c);

bool cone_contains(const Cone& c, const RatVec& x);

/// Strict version: x in the (relative to nothing) topological interior,
/// i.e. all facet pairings positive. For full-dimensional cones this is the
/// usual interior.
bool cone_contains_interior(const Cone& c, const RatVec& x);

bool cone_is_pointed(const Cone& c);
Eigen::Index cone_dim(const Cone& c);

/// Generators of { y : <g, y> >= 0 for all rows g }; building block shared by
/// make_cone and dual_cone.
std::vector<IntVec> dual_generators(Eigen::Index ambient_dim,
                                    const std::vector<IntVec>& gens);

}  // namespace arcflow
