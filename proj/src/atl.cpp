#include "arcflow/atl.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

namespace arcflow {

namespace {

std::vector<int> scc_ids(int n, const std::vector<WeightedEdge>& edges) {
  // Tarjan
  std::vector<std::vector<int>> adj(n);
  for (const WeightedEdge& e : edges) adj[e.from].push_back(e.to);
  std::vector<int> idx(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on(n, 0);
  int counter = 0, ncomp = 0;
  std::function<void(int)> strong = [&](int v) {
    idx[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = 1;
    for (int w : adj[v]) {
      if (idx[w] < 0) {
        strong(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], idx[w]);
      }
    }
    if (low[v] == idx[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on[w] = 0;
        comp[w] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  };
  for (int v = 0; v < n; ++v)
    if (idx[v] < 0) strong(v);
  return comp;
}

// Karp's theorem on one strongly connected component.
std::optional<Rat> karp_component(const std::vector<int>& verts,
                                  const std::vector<WeightedEdge>& edges) {
  const int m = static_cast<int>(verts.size());
  std::vector<int> local(verts.size());
  std::vector<int> index_of;  // global -> local
  int maxv = 0;
  for (int v : verts) maxv = std::max(maxv, v);
  index_of.assign(maxv + 1, -1);
  for (int i = 0; i < m; ++i) index_of[verts[i]] = i;

  std::vector<WeightedEdge> internal;
  for (const WeightedEdge& e : edges) {
    if (e.from <= maxv && e.to <= maxv && index_of[e.from] >= 0 && index_of[e.to] >= 0)
      internal.push_back(e);
  }
  if (internal.empty()) return std::nullopt;

  // D[k][v]: max weight of a k-edge walk from the source to v
  std::vector<std::vector<std::optional<Int>>> d(
      m + 1, std::vector<std::optional<Int>>(m, std::nullopt));
  d[0][0] = 0;
  for (int k = 1; k <= m; ++k) {
    for (const WeightedEdge& e : internal) {
      int u = index_of[e.from], v = index_of[e.to];
      if (!d[k - 1][u]) continue;
      Int cand = *d[k - 1][u] + e.gauge_dependent_weight;
      if (!d[k][v] || cand > *d[k][v]) d[k][v] = cand;
    }
  }

  std::optional<Rat> best;
  for (int v = 0; v < m; ++v) {
    if (!d[m][v]) continue;
    std::optional<Rat> inner;
    for (int k = 0; k < m; ++k) {
      if (!d[k][v]) continue;
      Rat val(*d[m][v] - *d[k][v], Int(m - k));
      val.canonicalize();
      if (!inner || val < *inner) inner = val;
    }
    if (inner && (!best || *inner > *best)) best = inner;
  }
  return best;
}

}  // namespace

MaxMeanResult max_mean_cycle(const WeightedGraph& w) {
  const int n = static_cast<int>(w.vertices.size());
  if (n == 0 || w.edges.empty()) throw DomainError("max_mean_cycle: graph has no cycle");
  std::vector<int> comp = scc_ids(n, w.edges);
  int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> members(ncomp);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);

  std::optional<Rat> best;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<WeightedEdge> internal;
    for (const WeightedEdge& e : w.edges)
      if (comp[e.from] == c && comp[e.to] == c) internal.push_back(e);
    if (internal.empty()) continue;
    auto cand = karp_component(members[c], internal);
    if (cand && (!best || *cand > *best)) best = cand;
  }
  if (!best) throw DomainError("max_mean_cycle: graph has no cycle");

  // witness: zero-mean cycle for the reduced weights q*w - p
  const Int p = best->get_num(), q = best->get_den();
  std::vector<Int> pot(n, 0);
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (const WeightedEdge& e : w.edges) {
      if (comp[e.from] != comp[e.to]) continue;  // cycles stay inside SCCs
      Int red = q * e.gauge_dependent_weight - p;
      if (pot[e.from] + red > pot[e.to]) {
        pot[e.to] = pot[e.from] + red;
        changed = true;
      }
    }
    if (!changed) break;
    if (round == n) throw DomainError("internal: positive cycle in reduced weights");
  }
  // tight subgraph contains every maximum-mean cycle
  std::vector<std::vector<int>> tight(n);
  for (const WeightedEdge& e : w.edges) {
    if (comp[e.from] != comp[e.to]) continue;
    Int red = q * e.gauge_dependent_weight - p;
    if (pot[e.from] + red == pot[e.to]) tight[e.from].push_back(e.to);
  }
  for (auto& lst : tight) std::sort(lst.begin(), lst.end());

  std::vector<int> state(n, 0), parent(n, -1);
  std::vector<int> cyc;
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w2 : tight[v]) {
      if (state[w2] == 1) {
        // unwind v -> ... -> w2
        cyc.clear();
        int x = v;
        cyc.push_back(w2);
        while (x != w2) {
          cyc.push_back(x);
          x = parent[x];
        }
        std::reverse(cyc.begin() + 1, cyc.end());
        return true;
      }
      if (state[w2] == 0) {
        parent[w2] = v;
        if (dfs(w2)) return true;
      }
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n && cyc.empty(); ++v)
    if (state[v] == 0 && dfs(v)) break;
  if (cyc.empty()) throw DomainError("internal: no tight cycle found");
  return MaxMeanResult{*best, cyc};
}

FlowArtifacts make_artifacts(FlowGraph fg) {
  FlowArtifacts art;
  art.graph = std::move(fg);
  art.cycles = minimal_cycles(art.graph);
  art.paths = minimal_good_paths(art.graph);
  art.fibered = fibered_cone(art.graph, art.cycles);
  return art;
}

AtlResult atl(const FlowArtifacts& art, const RatVec& phi) {
  if (phi.size() != art.graph.rank)
    throw DomainError("class has " + std::to_string(phi.size()) + " coordinates but the rank is " +
                      std::to_string(art.graph.rank));
  IntVec bar = primitivize(phi);
  if (!fibered_interior(art.fibered, to_rat(bar)))
    throw NotFibrationError("not a fibration class (outside the open fibered cone)");
  FrobeniusEngine engine(art.graph, art.cycles, art.paths, art.fibered, bar);
  WeightedGraph w = engine.weighted_graph();
  MaxMeanResult mm = max_mean_cycle(w);
  if (mm.mean <= 0) throw DomainError("internal: nonpositive maximal cycle mean");
  AtlResult out;
  out.max_mean = mm.mean;
  out.ell = Rat(1) / mm.mean;
  out.witness = mm.cycle;
  out.phi_bar = bar;
  out.norm_value = 0;
  return out;
}

MuResult mu(const FlowArtifacts& art, const SliceContext& slice, const RatVec& phi_ambient,
            int d) {
  if (d < 1) throw DomainError("mu: d must be at least 1");
  AtlResult a = atl(art, phi_ambient);
  RatVec coords = slice_coords(slice, to_rat(a.phi_bar));
  Rat nv = norm_value(slice, coords);
  if (nv <= 0) throw DomainError("mu: norm not positive on this class");

  MuResult out;
  out.phi_bar = a.phi_bar;
  out.norm = nv;
  out.ell = a.ell;
  out.d = d;
  out.witness = a.witness;
  Rat radicand = 1;
  for (int i = 0; i < d + 1; ++i) radicand *= nv;
  for (int i = 0; i < d; ++i) radicand *= a.ell;
  out.radicand = radicand;
  if (d == 1) {
    out.exact = true;
    out.mu_exact = radicand;  // norm^2 * ell
    out.approx = out.mu_exact.get_d();
  } else {
    out.exact = false;
    out.mu_exact = 0;
    out.approx = std::pow(radicand.get_d(), 1.0 / d);
  }
  return out;
}

}  // namespace arcflow
