#pragma once

#include "arcflow/atl.hpp"
#include "arcflow/fibered.hpp"
#include "arcflow/occupancy.hpp"
#include "arcflow/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arcflow {

/// Thrown by g queries on the slice boundary, where g diverges.
struct BoundaryError : DomainError {
  using DomainError::DomainError;
};

struct GValue {
  RatVec phi_slice;
  int d = 1;
  Rat volume;       // vol_{Lambda*}(C* cap beta^-1([0,1])), exact
  Rat radicand;     // (d+1) * volume / minocc
  bool exact = true;
  Rat value;        // g when d == 1
  double approx = 0.0;
  bool uncertified_occupancy = false;
  Rat minocc_estimate = 1;
};

/// g(phi) = ((d+1) vol_{Lambda*}(C* cap beta^-1[0,1]) / minocc)^(1/d).
/// Exact for d = 1; for d = 2 the volume is exact but the occupancy factor
/// is the (uncertified) grid estimate.
GValue g_value(const SliceContext& slice, const RatVec& phi_slice, int d,
               const OccupancyParams& occ = {});

struct SimplexG {
  Rat radicand;   // 1 / (O_d * d! * covolume * prod alpha_i)
  int d = 1;
  bool exact = true;
  Rat value;      // when d == 1
  double approx = 0.0;
  bool uncertified = false;
};

/// Closed form on a simplex slice with vertices omega_1..omega_{d+1}:
/// g*(alpha) = (1 / (O_d d! vol_Lambda(Sigma/<omega>_Z) prod alpha_i))^(1/d),
/// with O_1 = 1 and O_d a caller-supplied (uncertified) constant for d >= 2.
SimplexG simplex_g(const RatVec& alphas, const Rat& covolume, int d,
                   const std::optional<Rat>& o_d = std::nullopt);

/// vol_Lambda(Sigma / <omega_1..omega_{d+1}>_Z) for vertices given as rows in
/// Lambda-basis coordinates.
Rat simplex_covolume(const RatMat& vertices);

struct ShapeTransport {
  Rat theta;
};

/// Verifies iso maps Omega_1 onto Omega_2 (on extreme points) and returns
/// theta = vol(Sigma_2/Lambda_2) / vol(Sigma_2/iso(Lambda_1)); asserts the
/// scaling law g_2(iso phi) = theta^(1/d) g_1(phi) at the sample points
/// (exactly for d = 1, on the exact volume factor for d >= 2).
ShapeTransport shape_transport(const SliceContext& s1, const SliceContext& s2, const RatMat& iso,
                               const std::vector<RatVec>& samples_slice1, int d);

struct ScanRow {
  std::string point;   // rendered coordinate(s) on Omega
  RatVec phi_slice;    // norm-1 slice coordinates
  int d = 1;
  Rat norm;            // of the primitive representative
  Rat ell;
  Rat mu;              // exact when d == 1, else the radicand
  bool mu_exact = true;
  Rat g;               // exact when d == 1, else the radicand
  bool g_exact = true;
  Rat gap;             // g - mu when both exact
};

/// Boundary points of a 1-dimensional slice, normalized to norm 1 and sorted.
std::pair<RatVec, RatVec> interval_endpoints(const SliceContext& slice);

/// Point of Omega for the interval parameter t in (-1,1):
/// ((1+t)/2) omega_1 + ((1-t)/2) omega_2. On the braid-example slice this
/// makes t equal to a/b for phi_{a,b}.
RatVec interval_point(const SliceContext& slice, const Rat& t);

/// All reduced rational points of Omega with coordinate denominators at most
/// `depth` (Farey enumeration), with their mu_d and g values.
std::vector<ScanRow> scan(const FlowArtifacts& art, const SliceContext& slice, int depth, int d,
                          const OccupancyParams& occ = {});

struct ConvergenceRow {
  long k = 0;
  IntVec phi_bar;
  Rat t;        // interval parameter of the normalized point (d == 1)
  Rat norm;
  Rat ell;
  Rat mu;
  Rat g;
  Rat gap;      // g - mu
  Rat ratio;    // gap / g
};

/// Evaluates mu_d along the primitive classes of k*target + dir for
/// k = kmin..kmax and compares with g at the corresponding points of Omega.
/// target and dir must not be proportional (the classes must be pairwise
/// distinct).
std::vector<ConvergenceRow> convergence_scan(const FlowArtifacts& art, const SliceContext& slice,
                                             const RatVec& target, const RatVec& dir, long kmin,
                                             long kmax, int d);

std::string render_scan_csv(const std::vector<ScanRow>& rows, char sep = ';',
                            bool with_float = false);
std::string render_convergence_csv(const std::vector<ConvergenceRow>& rows, char sep = ';',
                                   bool with_float = false);

}  // namespace arcflow
