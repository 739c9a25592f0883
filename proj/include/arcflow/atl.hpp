#pragma once

#include "arcflow/fibered.hpp"
#include "arcflow/flow_graph.hpp"
#include "arcflow/frobenius.hpp"
#include "arcflow/numeric.hpp"

#include <vector>

namespace arcflow {

struct MaxMeanResult {
  Rat mean;                 // exact maximum average cycle weight
  std::vector<int> cycle;   // witness vertices v1 .. vk (edge vk->v1 closes)
};

/// Exact maximum mean cycle (Karp per strongly connected component) with a
/// witness cycle achieving the maximum. Throws DomainError on acyclic input.
MaxMeanResult max_mean_cycle(const WeightedGraph& w);

struct AtlResult {
  Rat ell;                  // asymptotic translation length, 1 / max_mean
  Rat max_mean;
  std::vector<int> witness;
  IntVec phi_bar;
  Rat norm_value;           // 0 unless a slice norm was attached
};

/// Bundles the per-input artifacts the translation-length pipeline consumes.
struct FlowArtifacts {
  FlowGraph graph;
  std::vector<MinimalCycle> cycles;
  std::vector<MinimalGoodPath> paths;
  FiberedConeData fibered;
};

FlowArtifacts make_artifacts(FlowGraph fg);

/// ell_A of the primitive representative of phi; throws NotFibrationError
/// for classes outside the open fibered cone.
AtlResult atl(const FlowArtifacts& art, const RatVec& phi);

struct MuResult {
  IntVec phi_bar;
  Rat norm;
  Rat ell;
  int d = 1;
  bool exact = true;     // d == 1
  Rat mu_exact;          // valid when exact
  Rat radicand;          // norm^(d+1) * ell^d; mu = radicand^(1/d)
  double approx = 0.0;
  std::vector<int> witness;
};

/// mu_d(phi) = norm(phi_bar)^(1 + 1/d) * ell_A(phi_bar); exact rational when
/// d = 1, otherwise (radicand, 1/d) plus a float rendering.
MuResult mu(const FlowArtifacts& art, const SliceContext& slice, const RatVec& phi_ambient,
            int d);

}  // namespace arcflow
