#pragma once

#include "arcflow/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace arcflow {

/// One drift-labeled edge of the digraph. Vertices are indices into
/// FlowGraph::vertices.
struct DriftEdge {
  int from = 0;
  int to = 0;
  IntVec drift;
  int id = 0;
};

/// The graph Delta* modelling a layered veering triangulation: vertices are
/// the triangulation edges (equivalently tetrahedra, via bottom edges),
/// triangle-edges cross faces downward, tetrahedron-edges jump from the top
/// edge of a tetrahedron to its bottom edge.
struct FlowGraph {
  int rank = 0;  // rank of G = H_1/torsion
  std::vector<std::string> vertices;
  std::vector<DriftEdge> triangle_edges;
  std::vector<DriftEdge> tetrahedron_edges;

  int vertex_index(const std::string& name) const;
};

/// Structural checks for veering-derived graphs: every vertex has triangle
/// in/out degree exactly 2, the triangle subgraph is strongly connected, and
/// every vertex has exactly one incoming tetrahedron-edge.
void validate_veering(const FlowGraph& fg);

bool triangle_subgraph_strongly_connected(const FlowGraph& fg);

/// Simple directed cycle of triangle-edges (every vertex visited at most
/// once), stored canonically starting at its smallest vertex.
struct MinimalCycle {
  std::vector<int> edge_ids;   // triangle-edge ids in traversal order
  std::vector<int> vertices;   // visited vertices, same length
  IntVec drift;
  int id = 0;
};

/// Tetrahedron-edge followed by triangle-edges whose endpoints are pairwise
/// distinct (the start may be revisited).
struct MinimalGoodPath {
  int tet_edge_id = 0;
  std::vector<int> tail_edge_ids;  // triangle-edge ids
  std::vector<int> vertices;       // start, then endpoint after each edge
  IntVec drift;
  int id = 0;
  int source() const { return vertices.front(); }
  int target() const { return vertices.back(); }
  size_t length() const { return 1 + tail_edge_ids.size(); }
};

struct EnumerationLimits {
  int max_vertices = 64;
  long max_cycles = 1000000;
};

/// All minimal cycles, deterministic order (by start vertex, then the DFS
/// order of edge ids).
std::vector<MinimalCycle> minimal_cycles(const FlowGraph& fg,
                                         const EnumerationLimits& limits = {});

/// All minimal good paths, including the bare tetrahedron-edges.
std::vector<MinimalGoodPath> minimal_good_paths(const FlowGraph& fg);

/// Cycle-id subsets S such that (path, S) is a connected collection: the
/// triangle-edges of the path tail and of the cycles in S form a connected
/// subgraph (orientations ignored), and for a length-1 path a nonempty S
/// must contain a cycle through the path's endpoint. The empty set is always
/// included: a minimal good path decomposes as itself plus no cycles.
std::vector<std::uint64_t> connected_subsets(const FlowGraph& fg, const MinimalGoodPath& path,
                                             const std::vector<MinimalCycle>& cycles);

/// Relabels every edge drift by drift + c(head) - c(tail). All cycle drifts
/// and all downstream outputs are unchanged.
FlowGraph apply_coboundary(const FlowGraph& fg, const std::vector<IntVec>& c);

/// Drift-graph file: `rank n`, `vertex NAME`, `tri FROM TO d1 .. dn`,
/// `tet FROM TO d1 .. dn`; `#` comments.
FlowGraph parse_drift_graph(const std::string& text);

std::string write_drift_graph(const FlowGraph& fg);

}  // namespace arcflow
