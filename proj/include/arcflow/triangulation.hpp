#pragma once

#include "arcflow/flow_graph.hpp"
#include "arcflow/numeric.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace arcflow {

/// Gluing target of one tetrahedron face: face `face` of tetrahedron `tet`,
/// with `perm` mapping vertex labels of the source tetrahedron to the target.
struct FaceGluing {
  int tet = -1;
  int face = -1;
  std::array<int, 4> perm{0, 1, 2, 3};
};

/// Layered taut ideal triangulation. Faces are indexed 0..3 by the opposite
/// vertex; the gluing map is a fixed-point-free involution on (tet, face)
/// pairs. Per tetrahedron, `bottom` and `top` are opposite vertex pairs.
struct TautTriangulation {
  int tetrahedra = 0;
  std::vector<std::array<FaceGluing, 4>> gluings;       // [tet][face]
  std::vector<std::array<int, 2>> bottom;               // vertex pair
  std::vector<std::array<int, 2>> top;

  // optional reporting metadata
  std::vector<std::string> names;                        // per tetrahedron
  std::optional<IntMat> report_basis;                    // unimodular, n x n
  std::vector<std::pair<std::string, IntVec>> gauge;     // per-vertex shifts
};

/// One edge class of the triangulation with its cyclic fan. Each fan entry
/// records a face crossing while walking once around the edge link;
/// `downward` is true when the crossing agrees with the triangle-edge
/// orientation (upper tetrahedron to lower).
struct FanCrossing {
  int face_id = -1;
  bool downward = false;
};

struct EdgeClass {
  int id = -1;
  std::vector<std::pair<int, std::array<int, 2>>> incidences;  // (tet, pair)
  std::vector<FanCrossing> fan;
  int bottom_of = -1;  // tetrahedron whose bottom edge this is
  int top_of = -1;     // tetrahedron whose top edge this is
};

TautTriangulation parse_triangulation(const std::string& text);

std::vector<EdgeClass> edge_classes(const TautTriangulation& t);

/// Face table: face_id -> the two (tet, face) slots, ordered so that the
/// first slot is the side whose tetrahedron lies above the face.
struct FaceTable {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> sides;
};

FaceTable face_table(const TautTriangulation& t);

/// Drift data computed from the triangulation: homology rank, per-face and
/// per-tetrahedron drifts, already mapped to the reporting basis and gauge
/// when the input pins them.
struct DriftAssignment {
  int rank = 0;
  std::vector<IntVec> triangle_drift;     // per face id
  std::vector<IntVec> tetrahedron_drift;  // per tetrahedron
};

DriftAssignment compute_drifts(const TautTriangulation& t);

/// Full ingestion: validate, identify edges, compute homology and drifts,
/// and emit the drift-labeled flow graph.
FlowGraph build_flow_graph(const TautTriangulation& t);

}  // namespace arcflow
