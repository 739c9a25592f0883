#pragma once

#include "arcflow/fibered.hpp"
#include "arcflow/flow_graph.hpp"
#include "arcflow/numeric.hpp"

#include <map>
#include <optional>
#include <vector>

namespace arcflow {

/// One component of an achievable set: offset + the monoid generated by
/// `gens` (sorted, distinct, strictly positive). Values are elements of
/// -phi(I(e,e')) contributed by one connected collection (p, S):
/// offset = -phi(p) + sum_{b in S} -phi(b), gens = { -phi(b) : b in S }.
struct Component {
  Int offset;
  std::vector<Int> gens;
  bool operator<(const Component& o) const {
    if (offset != o.offset) return offset < o.offset;
    return gens < o.gens;
  }
  bool operator==(const Component& o) const { return offset == o.offset && gens == o.gens; }
};

/// Membership structure for -phi(I(e,e')), with coin-problem tables built
/// once per window and memoized.
class AchievableSet {
 public:
  AchievableSet() = default;
  explicit AchievableSet(std::vector<Component> comps);

  bool empty() const { return comps_.empty(); }
  const std::vector<Component>& components() const { return comps_; }
  const Int& min_offset() const { return lo_; }

  /// Ensures membership tables cover values up to `hi` inclusive.
  void build(const Int& hi);

  /// k in -phi(I(e,e')); extends the memoized window when necessary.
  bool member(const Int& k);

 private:
  std::vector<Component> comps_;
  Int lo_ = 0, hi_ = 0;
  bool built_ = false;
  std::vector<std::vector<char>> tables_;
};

struct FrobeniusResult {
  Int value;                   // largest integer not achievable
  Int certified_upper_bound;   // F_low from the inner monoid estimate
  Int scan_top;                // scan started here (== certified bound)
};

/// Weighted graph W(phi). Weights are Frobenius numbers and depend on the
/// drift lift (gauge); only cycle averages are gauge-invariant.
struct WeightedEdge {
  int from = 0, to = 0;
  Int gauge_dependent_weight;
};

struct WeightedGraph {
  std::vector<std::string> vertices;
  std::vector<WeightedEdge> edges;
  bool has_cycle() const;
};

/// Frobenius number of the numerical semigroup generated by `gens`
/// (positive, gcd 1): the largest integer with no nonnegative representation.
Int frobenius_classic(const std::vector<Int>& gens);

/// Some integer in [-f_rev, f_fwd] lies in neither fwd nor { -k : k in rev }.
/// This is the W(phi) edge criterion once f_fwd/f_rev are the two Frobenius
/// numbers: escaping integers are confined to that window.
bool escape_exists(AchievableSet& fwd, AchievableSet& rev, const Int& f_fwd, const Int& f_rev);

/// Exact membership / Frobenius / edge machinery for one primitive integral
/// interior class phi. Results per ordered pair are memoized.
class FrobeniusEngine {
 public:
  FrobeniusEngine(const FlowGraph& fg, const std::vector<MinimalCycle>& cycles,
                  const std::vector<MinimalGoodPath>& paths, const FiberedConeData& fibered,
                  const IntVec& phi);

  /// Components of -phi(I(e,e')); empty when no good path runs e -> e'.
  AchievableSet& achievable(int e, int e2);

  /// Frobenius of phi restricted to -I(e,e'); nullopt when the set is empty.
  std::optional<FrobeniusResult> frobenius(int e, int e2);

  /// W(phi) edge criterion: some integer escapes
  /// -phi(I(e,e')) union phi(I(e',e)).
  bool edge_exists(int e, int e2);

  WeightedGraph weighted_graph();

  const IntVec& phi() const { return phi_; }

 private:
  const FlowGraph& fg_;
  const std::vector<MinimalCycle>& cycles_;
  const std::vector<MinimalGoodPath>& paths_;
  IntVec phi_;
  std::vector<Int> all_gens_;       // { -phi(b) : b in B }, sorted distinct
  Int gen_shift_;                   // sum over B of -phi(b)
  std::map<std::pair<int, int>, AchievableSet> achievable_;
  std::map<std::pair<int, int>, std::optional<FrobeniusResult>> frob_;

  Int value_of(const IntVec& drift) const;  // -phi(drift)
};

}  // namespace arcflow
