#pragma once

#include "arcflow/cone.hpp"
#include "arcflow/flow_graph.hpp"
#include "arcflow/lattice.hpp"
#include "arcflow/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arcflow {

/// Thrown when a class outside the open fibered cone reaches a per-fibration
/// computation.
struct NotFibrationError : DomainError {
  using DomainError::DomainError;
};

/// The cone over a fibered face, described dually: B is the set of distinct
/// minimal-cycle drifts, the open cone is { phi : phi(b) < 0 for all b }.
struct FiberedConeData {
  std::vector<IntVec> drifts;  // B, deduplicated, sorted
  Cone cone_b;                 // <B>_{R>=0}
  Cone dual;                   // { phi : phi(b) <= 0 } = -cone_b^*
};

FiberedConeData fibered_cone(const FlowGraph& fg, const std::vector<MinimalCycle>& cycles);

bool fibered_interior(const FiberedConeData& fc, const RatVec& phi);
bool fibered_closure(const FiberedConeData& fc, const RatVec& phi);

/// Unique primitive integral point on the ray R_+ phi.
IntVec primitivize(const RatVec& phi);

/// SliceContext: a rational (d+1)-dimensional subspace Sigma with its lattice
/// Lambda, the cones C (fibered cone in slice coordinates) and C* (dual, the
/// image -p(B)), and the Thurston norm as a linear functional in
/// Lambda-basis coordinates.
struct SliceContext {
  int d = 0;                 // slice dimension (Sigma has dimension d+1)
  Eigen::Index ambient = 0;  // n = rank of G
  Lattice lambda;            // rows: lambda_1 .. lambda_{d+1}
  RatVec norm_coeffs;        // in Lambda-basis coordinates
  Cone c;                    // slice coords
  Cone c_star;               // dual coords
  std::vector<IntVec> p_of_b;  // p(b) for b in B
};

/// Builds the context. `basis` rows span Sigma; `norm` is given in the
/// Lambda-basis coordinates of the saturated lattice. `lattice_override`,
/// when provided, replaces the saturation by a finite-index sublattice (used
/// by the shape-transport experiments).
SliceContext make_slice(const RatMat& basis, const RatVec& norm, const FiberedConeData& fibered,
                        const std::optional<IntMat>& lattice_override = std::nullopt);

/// phi (ambient H^1 coordinates) -> slice coordinates; throws DomainError if
/// phi does not lie on Sigma.
RatVec slice_coords(const SliceContext& s, const RatVec& phi);

/// Slice coordinates -> ambient H^1 coordinates.
RatVec ambient_coords(const SliceContext& s, const RatVec& c);

/// beta_phi as a covector on Sigma* in Lambda*-coordinates: equal to the
/// slice coordinates of phi.
RatVec beta(const SliceContext& s, const RatVec& phi_slice_coords);

Rat norm_value(const SliceContext& s, const RatVec& phi_slice_coords);

bool slice_interior(const SliceContext& s, const RatVec& phi_slice_coords);

/// Slice file: `dim d`, `basis` rows (rational n-vectors), `norm` row
/// (rational (d+1)-vector), optional `lattice` rows (integer n-vectors).
struct SliceFile {
  int d = 0;
  RatMat basis;
  RatVec norm;
  std::optional<IntMat> lattice;
};

SliceFile parse_slice_file(const std::string& text);

}  // namespace arcflow
