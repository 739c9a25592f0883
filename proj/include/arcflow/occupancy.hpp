#pragma once

#include "arcflow/lattice.hpp"
#include "arcflow/numeric.hpp"

#include <vector>

namespace arcflow {

struct OccupancyParams {
  int grid = 64;          // translations per axis over a fundamental domain
  int scale_bits = 20;    // binary search resolution 2^-scale_bits
};

/// occ(Lambda, K): volume of the largest homothetic copy of K with no lattice
/// point in its interior, divided by the covolume. Exact (and equal to 1) in
/// dimension 1; in dimension >= 2 only a grid-search estimate with the
/// certified lower bound 1. `certified` records which case applies.
struct OccupancyResult {
  Rat value;              // exact value (dim 1) or best estimate found
  Rat raw_estimate;       // best grid value before clamping to the bound
  bool certified = false; // true only in dimension 1
  OccupancyParams params;
};

/// `polytope` rows are vertices, given in the ambient coordinates of
/// `lattice`; the polytope must be full-dimensional inside the lattice span.
OccupancyResult occupancy(const Lattice& lattice, const std::vector<RatVec>& polytope,
                          const OccupancyParams& params = {});

}  // namespace arcflow
