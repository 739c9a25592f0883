#include "arcflow/flow_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace arcflow {

int FlowGraph::vertex_index(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  throw DomainError("unknown vertex '" + name + "'");
}

namespace {

std::vector<std::vector<std::pair<int, int>>> triangle_adjacency(const FlowGraph& fg) {
  std::vector<std::vector<std::pair<int, int>>> adj(fg.vertices.size());
  for (const DriftEdge& e : fg.triangle_edges) adj[e.from].push_back({e.to, e.id});
  for (auto& lst : adj) std::sort(lst.begin(), lst.end());
  return adj;
}

}  // namespace

bool triangle_subgraph_strongly_connected(const FlowGraph& fg) {
  const size_t n = fg.vertices.size();
  if (n == 0) return false;
  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const DriftEdge& e : fg.triangle_edges) {
        int a = forward ? e.from : e.to;
        int b = forward ? e.to : e.from;
        if (a == v && !seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };
  return reach(true) && reach(false);
}

void validate_veering(const FlowGraph& fg) {
  const size_t n = fg.vertices.size();
  if (n == 0) throw ValidationError("flow graph has no vertices");
  std::vector<int> indeg(n, 0), outdeg(n, 0), tet_in(n, 0);
  for (const DriftEdge& e : fg.triangle_edges) {
    outdeg[e.from]++;
    indeg[e.to]++;
  }
  for (size_t v = 0; v < n; ++v) {
    if (indeg[v] != 2 || outdeg[v] != 2)
      throw ValidationError("vertex '" + fg.vertices[v] +
                            "' does not have triangle in/out degree 2");
  }
  for (const DriftEdge& e : fg.tetrahedron_edges) tet_in[e.to]++;
  for (size_t v = 0; v < n; ++v) {
    if (tet_in[v] != 1)
      throw ValidationError("vertex '" + fg.vertices[v] +
                            "' is not the bottom edge of exactly one tetrahedron");
  }
  if (!triangle_subgraph_strongly_connected(fg))
    throw ValidationError("triangle-edge subgraph is not strongly connected");
}

std::vector<MinimalCycle> minimal_cycles(const FlowGraph& fg, const EnumerationLimits& limits) {
  const int n = static_cast<int>(fg.vertices.size());
  if (n > limits.max_vertices)
    throw DomainError("minimal_cycles: vertex count exceeds enumeration limit");
  auto adj = triangle_adjacency(fg);
  std::vector<MinimalCycle> out;

  std::vector<int> path_edges, path_verts;
  std::vector<char> on_path(n, 0);

  // elementary circuits with smallest vertex first; deterministic
  std::function<void(int, int)> dfs = [&](int start, int v) {
    for (auto [w, eid] : adj[v]) {
      if (w == start) {
        MinimalCycle c;
        c.edge_ids = path_edges;
        c.edge_ids.push_back(eid);
        c.vertices = path_verts;
        c.drift = IntVec::Zero(fg.rank);
        for (int id : c.edge_ids) c.drift += fg.triangle_edges[id].drift;
        out.push_back(std::move(c));
        if (static_cast<long>(out.size()) > limits.max_cycles)
          throw DomainError("minimal_cycles: cycle count exceeds enumeration limit");
      } else if (w > start && !on_path[w]) {
        on_path[w] = 1;
        path_edges.push_back(eid);
        path_verts.push_back(w);
        dfs(start, w);
        path_verts.pop_back();
        path_edges.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path_edges.clear();
    path_verts.assign(1, s);
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[s] = 1;
    dfs(s, s);
  }
  for (size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
  return out;
}

std::vector<MinimalGoodPath> minimal_good_paths(const FlowGraph& fg) {
  auto adj = triangle_adjacency(fg);
  std::vector<MinimalGoodPath> out;
  for (const DriftEdge& te : fg.tetrahedron_edges) {
    // endpoints of successive edges must be pairwise distinct
    std::vector<int> tail, verts{te.from, te.to};
    std::set<int> ends{te.to};
    std::function<void(int)> dfs = [&](int v) {
      MinimalGoodPath p;
      p.tet_edge_id = te.id;
      p.tail_edge_ids = tail;
      p.vertices = verts;
      p.drift = te.drift;
      for (int id : tail) p.drift += fg.triangle_edges[id].drift;
      out.push_back(std::move(p));
      for (auto [w, eid] : adj[v]) {
        if (ends.count(w)) continue;
        ends.insert(w);
        tail.push_back(eid);
        verts.push_back(w);
        dfs(w);
        verts.pop_back();
        tail.pop_back();
        ends.erase(w);
      }
    };
    dfs(te.to);
  }
  for (size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
  return out;
}

std::vector<std::uint64_t> connected_subsets(const FlowGraph& fg, const MinimalGoodPath& path,
                                             const std::vector<MinimalCycle>& cycles) {
  (void)fg;
  if (cycles.size() > 64) throw DomainError("connected_subsets: more than 64 minimal cycles");
  const size_t nc = cycles.size();

  std::vector<std::uint64_t> cycle_verts(nc, 0);
  for (size_t i = 0; i < nc; ++i) {
    std::uint64_t m = 0;
    for (int v : cycles[i].vertices) m |= (1ull << v);
    cycle_verts[i] = m;
  }

  std::uint64_t base = 0;
  if (path.length() >= 2) {
    for (size_t i = 1; i < path.vertices.size(); ++i) base |= (1ull << path.vertices[i]);
  } else {
    // length 1: growth starts at the endpoint; a nonempty subset must
    // contain a cycle traversing it
    base = (1ull << path.target());
  }

  std::set<std::uint64_t> seen;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> stack{{0, base}};
  seen.insert(0);
  while (!stack.empty()) {
    auto [s, verts] = stack.back();
    stack.pop_back();
    for (size_t i = 0; i < nc; ++i) {
      if (s & (1ull << i)) continue;
      if (!(cycle_verts[i] & verts)) continue;
      std::uint64_t s2 = s | (1ull << i);
      if (seen.insert(s2).second) stack.push_back({s2, verts | cycle_verts[i]});
    }
  }
  return std::vector<std::uint64_t>(seen.begin(), seen.end());
}

FlowGraph apply_coboundary(const FlowGraph& fg, const std::vector<IntVec>& c) {
  if (c.size() != fg.vertices.size())
    throw DomainError("apply_coboundary: one vector per vertex required");
  FlowGraph out = fg;
  for (DriftEdge& e : out.triangle_edges) e.drift += c[e.to] - c[e.from];
  for (DriftEdge& e : out.tetrahedron_edges) e.drift += c[e.to] - c[e.from];
  return out;
}

FlowGraph parse_drift_graph(const std::string& text) {
  FlowGraph fg;
  fg.rank = -1;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::map<std::string, int> index;
  auto fail = [&](const std::string& msg) {
    throw ParseError("drift graph line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "rank") {
      if (!(ls >> fg.rank) || fg.rank < 1) fail("bad rank");
    } else if (kw == "vertex") {
      std::string name;
      if (!(ls >> name)) fail("vertex needs a name");
      if (index.count(name)) fail("duplicate vertex '" + name + "'");
      index[name] = static_cast<int>(fg.vertices.size());
      fg.vertices.push_back(name);
    } else if (kw == "tri" || kw == "tet") {
      if (fg.rank < 0) fail("rank must precede edges");
      std::string a, b;
      if (!(ls >> a >> b)) fail("edge needs two vertex names");
      if (!index.count(a)) fail("unknown vertex '" + a + "'");
      if (!index.count(b)) fail("unknown vertex '" + b + "'");
      DriftEdge e;
      e.from = index[a];
      e.to = index[b];
      e.drift = IntVec::Zero(fg.rank);
      for (int i = 0; i < fg.rank; ++i) {
        std::string tok;
        if (!(ls >> tok)) fail("drift needs " + std::to_string(fg.rank) + " integers");
        try {
          e.drift[i] = Int(tok);
        } catch (const std::invalid_argument&) {
          fail("bad integer '" + tok + "'");
        }
      }
      std::string extra;
      if (ls >> extra) fail("trailing tokens");
      if (kw == "tri") {
        e.id = static_cast<int>(fg.triangle_edges.size());
        fg.triangle_edges.push_back(std::move(e));
      } else {
        e.id = static_cast<int>(fg.tetrahedron_edges.size());
        fg.tetrahedron_edges.push_back(std::move(e));
      }
    } else {
      fail("unknown directive '" + kw + "'");
    }
  }
  if (fg.rank < 0) throw ParseError("drift graph: missing rank");
  if (fg.vertices.empty()) throw ParseError("drift graph: no vertices");
  return fg;
}

std::string write_drift_graph(const FlowGraph& fg) {
  std::ostringstream out;
  out << "rank " << fg.rank << "\n";
  for (const std::string& v : fg.vertices) out << "vertex " << v << "\n";
  auto emit = [&](const char* kw, const std::vector<DriftEdge>& edges) {
    for (const DriftEdge& e : edges) {
      out << kw << " " << fg.vertices[e.from] << " " << fg.vertices[e.to];
      for (Eigen::Index i = 0; i < e.drift.size(); ++i) out << " " << e.drift[i];
      out << "\n";
    }
  };
  emit("tri", fg.triangle_edges);
  emit("tet", fg.tetrahedron_edges);
  return out.str();
}

}  // namespace arcflow
