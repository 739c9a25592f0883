#include "arcflow/frobenius.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace arcflow {

AchievableSet::AchievableSet(std::vector<Component> comps) : comps_(std::move(comps)) {
  std::sort(comps_.begin(), comps_.end());
  comps_.erase(std::unique(comps_.begin(), comps_.end()), comps_.end());
  if (!comps_.empty()) lo_ = comps_.front().offset;
}

void AchievableSet::build(const Int& hi) {
  if (built_ && hi <= hi_) return;
  hi_ = hi;
  built_ = true;
  tables_.assign(comps_.size(), {});
  for (size_t ci = 0; ci < comps_.size(); ++ci) {
    const Component& c = comps_[ci];
    if (c.offset > hi_) continue;  // cannot contribute inside the window
    Int width = hi_ - c.offset;
    size_t w = width.get_ui() + 1;
    std::vector<char> table(w, 0);
    table[0] = 1;
    for (const Int& g : c.gens) {
      if (g > width) continue;
      size_t step = g.get_ui();
      for (size_t k = step; k < w; ++k)
        if (table[k - step]) table[k] = 1;
    }
    tables_[ci] = std::move(table);
  }
}

bool AchievableSet::member(const Int& k) {
  if (comps_.empty()) return false;
  if (!built_ || k > hi_) build(k);
  for (size_t ci = 0; ci < comps_.size(); ++ci) {
    const Component& c = comps_[ci];
    if (tables_[ci].empty()) continue;
    if (k < c.offset) continue;
    Int idx = k - c.offset;
    if (tables_[ci][idx.get_ui()]) return true;
  }
  return false;
}

bool WeightedGraph::has_cycle() const {
  // DFS color marking over the edge list
  const size_t n = vertices.size();
  std::vector<std::vector<int>> adj(n);
  for (const WeightedEdge& e : edges) adj[e.from].push_back(e.to);
  std::vector<int> color(n, 0);
  std::function<bool(int)> dfs = [&](int v) {
    color[v] = 1;
    for (int w : adj[v]) {
      if (color[w] == 1) return true;
      if (color[w] == 0 && dfs(w)) return true;
    }
    color[v] = 2;
    return false;
  };
  for (size_t v = 0; v < n; ++v)
    if (color[v] == 0 && dfs(static_cast<int>(v))) return true;
  return false;
}

Int frobenius_classic(const std::vector<Int>& gens) {
  if (gens.empty()) throw DomainError("frobenius_classic: no generators");
  Int g = 0;
  for (const Int& x : gens) {
    if (x <= 0) throw DomainError("frobenius_classic: nonpositive generator");
    g = gcd(g, x);
  }
  if (g != 1) throw DomainError("frobenius_classic: gcd of generators is not 1");
  Int m = *std::min_element(gens.begin(), gens.end());
  if (m == 1) return -1;
  size_t mod = m.get_ui();
  // shortest representable value per residue class mod m (round-robin)
  std::vector<Int> dist(mod);
  std::vector<char> known(mod, 0);
  dist[0] = 0;
  known[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t r = 0; r < mod; ++r) {
      if (!known[r]) continue;
      for (const Int& x : gens) {
        Int nv = dist[r] + x;
        size_t nr = mpz_fdiv_ui(nv.get_mpz_t(), mod);
        if (!known[nr] || nv < dist[nr]) {
          known[nr] = 1;
          dist[nr] = nv;
          changed = true;
        }
      }
    }
  }
  Int best = 0;
  for (size_t r = 0; r < mod; ++r) {
    if (!known[r]) throw DomainError("frobenius_classic: residue class unreachable");
    best = std::max(best, dist[r]);
  }
  return best - m;
}

FrobeniusEngine::FrobeniusEngine(const FlowGraph& fg, const std::vector<MinimalCycle>& cycles,
                                 const std::vector<MinimalGoodPath>& paths,
                                 const FiberedConeData& fibered, const IntVec& phi)
    : fg_(fg), cycles_(cycles), paths_(paths), phi_(phi) {
  if (vec_gcd(phi_) != 1) throw DomainError("frobenius engine requires a primitive class");
  if (!fibered_interior(fibered, to_rat(phi_)))
    throw NotFibrationError("not a fibration class (outside the open fibered cone)");
  std::set<Int> gens;
  gen_shift_ = 0;
  for (const IntVec& b : fibered.drifts) {
    Int v = -dot(phi_, b);
    if (v <= 0) throw DomainError("internal: interior class with nonnegative cycle value");
    gens.insert(v);
    gen_shift_ += v;
  }
  all_gens_.assign(gens.begin(), gens.end());
}

Int FrobeniusEngine::value_of(const IntVec& drift) const { return -dot(phi_, drift); }

AchievableSet& FrobeniusEngine::achievable(int e, int e2) {
  auto key = std::make_pair(e, e2);
  auto it = achievable_.find(key);
  if (it != achievable_.end()) return it->second;

  std::vector<Component> comps;
  for (const MinimalGoodPath& p : paths_) {
    if (p.source() != e || p.target() != e2) continue;
    Int base = value_of(p.drift);
    for (std::uint64_t mask : connected_subsets(fg_, p, cycles_)) {
      Component c;
      c.offset = base;
      std::set<Int> gens;
      for (size_t ci = 0; ci < cycles_.size(); ++ci) {
        if (!(mask & (1ull << ci))) continue;
        Int v = value_of(cycles_[ci].drift);
        c.offset += v;
        gens.insert(v);
      }
      c.gens.assign(gens.begin(), gens.end());
      comps.push_back(std::move(c));
    }
  }
  return achievable_.emplace(key, AchievableSet(std::move(comps))).first->second;
}

std::optional<FrobeniusResult> FrobeniusEngine::frobenius(int e, int e2) {
  auto key = std::make_pair(e, e2);
  auto it = frob_.find(key);
  if (it != frob_.end()) return it->second;

  AchievableSet& ach = achievable(e, e2);
  if (ach.empty()) {
    frob_[key] = std::nullopt;
    return std::nullopt;
  }

  // certified cover: offsets -phi(p * prod B) with the full generator set
  Int g = 0;
  for (const Int& x : all_gens_) g = gcd(g, x);
  std::map<Int, Int> min_offset_by_residue;
  for (const MinimalGoodPath& p : paths_) {
    if (p.source() != e || p.target() != e2) continue;
    Int o = value_of(p.drift) + gen_shift_;
    Int r = o % g;
    if (r < 0) r += g;
    auto mit = min_offset_by_residue.find(r);
    if (mit == min_offset_by_residue.end() || o < mit->second) min_offset_by_residue[r] = o;
  }
  if (static_cast<Int>(static_cast<long>(min_offset_by_residue.size())) != g)
    throw DomainError("Frobenius infinite - invalid input (residue classes uncovered)");

  std::vector<Int> reduced;
  for (const Int& x : all_gens_) reduced.push_back(x / g);
  Int fstar = frobenius_classic(reduced);

  // every value >= L is achievable
  Int l_bound = 0;
  bool first = true;
  for (const auto& [r, o] : min_offset_by_residue) {
    Int t = o + g * (fstar + 1);
    if (first || t > l_bound) l_bound = t;
    first = false;
  }

  ach.build(l_bound);
  Int k = l_bound - 1;
  Int floor = ach.min_offset() - 2;
  while (ach.member(k)) {
    --k;
    if (k < floor) throw DomainError("internal: Frobenius scan underflow");
  }
  FrobeniusResult res{k, l_bound - 1, l_bound - 1};
  frob_[key] = res;
  return res;
}

bool escape_exists(AchievableSet& fwd, AchievableSet& rev, const Int& f_fwd, const Int& f_rev) {
  for (Int k = -f_rev; k <= f_fwd; ++k) {
    if (!fwd.member(k) && !rev.member(Int(-k))) return true;
  }
  return false;
}

bool FrobeniusEngine::edge_exists(int e, int e2) {
  auto fa = frobenius(e, e2);
  if (!fa) return false;  // no good path e -> e', so no weight to assign
  auto fb = frobenius(e2, e);
  // with I(e',e) empty, the Frobenius value itself escapes the union
  if (!fb) return true;
  return escape_exists(achievable(e, e2), achievable(e2, e), fa->value, fb->value);
}

WeightedGraph FrobeniusEngine::weighted_graph() {
  WeightedGraph w;
  w.vertices = fg_.vertices;
  const int n = static_cast<int>(fg_.vertices.size());
  for (int e = 0; e < n; ++e) {
    for (int e2 = 0; e2 < n; ++e2) {
      if (!edge_exists(e, e2)) continue;
      w.edges.push_back(WeightedEdge{e, e2, frobenius(e, e2)->value});
    }
  }
  if (!w.has_cycle())
    throw DomainError("internal: weighted graph W(phi) is acyclic");
  return w;
}

}  // namespace arcflow
