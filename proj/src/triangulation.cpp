#include "arcflow/triangulation.hpp"

#include "arcflow/smith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace arcflow {

namespace {

const std::array<std::array<int, 2>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::array<int, 2> sorted_pair(int a, int b) {
  return a < b ? std::array<int, 2>{a, b} : std::array<int, 2>{b, a};
}

bool pair_contains(const std::array<int, 2>& p, int v) { return p[0] == v || p[1] == v; }

// face f of tet i contains the bottom edge (and is a bottom face) iff its
// index lies in the top pair; bottom and top pairs partition {0,1,2,3}
bool is_bottom_face(const TautTriangulation& t, int tet, int face) {
  return pair_contains(t.top[tet], face);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

int pair_slot(int tet, const std::array<int, 2>& p) {
  for (size_t k = 0; k < kPairs.size(); ++k)
    if (kPairs[k] == p) return tet * 6 + static_cast<int>(k);
  throw DomainError("internal: bad vertex pair");
}

}  // namespace

TautTriangulation parse_triangulation(const std::string& text) {
  TautTriangulation t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_count = false;
  auto fail = [&](const std::string& msg) {
    throw ParseError("triangulation line " + std::to_string(lineno) + ": " + msg);
  };

  std::vector<IntVec> basis_acc;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "tetrahedra") {
      if (have_count) fail("duplicate tetrahedra line");
      if (!(ls >> t.tetrahedra) || t.tetrahedra < 1) fail("bad tetrahedron count");
      have_count = true;
      t.gluings.assign(t.tetrahedra, {});
      t.bottom.assign(t.tetrahedra, {-1, -1});
      t.top.assign(t.tetrahedra, {-1, -1});
      t.names.assign(t.tetrahedra, "");
    } else if (kw == "glue") {
      if (!have_count) fail("glue before tetrahedra");
      int i, f, j, g;
      std::string perm;
      if (!(ls >> i >> f >> j >> g >> perm)) fail("glue needs: i f j g PERM");
      if (i < 0 || i >= t.tetrahedra || j < 0 || j >= t.tetrahedra) fail("tetrahedron out of range");
      if (f < 0 || f > 3 || g < 0 || g > 3) fail("face out of range");
      if (perm.size() != 4) fail("PERM must be 4 characters over 0123");
      std::array<int, 4> p{};
      std::array<bool, 4> seen{};
      for (int k = 0; k < 4; ++k) {
        if (perm[k] < '0' || perm[k] > '3') fail("PERM must be 4 characters over 0123");
        p[k] = perm[k] - '0';
        if (seen[p[k]]) fail("PERM is not a permutation");
        seen[p[k]] = true;
      }
      if (p[f] != g) fail("PERM does not map face " + std::to_string(f) + " to face " + std::to_string(g));
      if (i == j && f == g) fail("fixed point in gluing involution");
      if (t.gluings[i][f].tet >= 0) fail("face glued twice");
      std::array<int, 4> pinv{};
      for (int k = 0; k < 4; ++k) pinv[p[k]] = k;
      if (i == j && t.gluings[j][g].tet >= 0) fail("face glued twice");
      t.gluings[i][f] = FaceGluing{j, g, p};
      if (t.gluings[j][g].tet >= 0) fail("face glued twice");
      t.gluings[j][g] = FaceGluing{i, f, pinv};
    } else if (kw == "taut") {
      if (!have_count) fail("taut before tetrahedra");
      int i, a, b, c, d;
      std::string kb, kt;
      if (!(ls >> i >> kb >> a >> b >> kt >> c >> d) || kb != "bottom" || kt != "top")
        fail("taut needs: i bottom a b top c d");
      if (i < 0 || i >= t.tetrahedra) fail("tetrahedron out of range");
      if (t.bottom[i][0] >= 0) fail("duplicate taut line");
      std::set<int> all{a, b, c, d};
      if (all != std::set<int>{0, 1, 2, 3}) fail("bottom/top pairs must be opposite");
      t.bottom[i] = sorted_pair(a, b);
      t.top[i] = sorted_pair(c, d);
    } else if (kw == "name") {
      if (!have_count) fail("name before tetrahedra");
      int i;
      std::string nm;
      if (!(ls >> i >> nm)) fail("name needs: i NAME");
      if (i < 0 || i >= t.tetrahedra) fail("tetrahedron out of range");
      t.names[i] = nm;
    } else if (kw == "basis") {
      std::vector<Int> row;
      std::string tok;
      while (ls >> tok) {
        try {
          row.emplace_back(tok);
        } catch (const std::invalid_argument&) {
          fail("bad integer '" + tok + "'");
        }
      }
      if (row.empty()) fail("empty basis row");
      IntVec v(static_cast<Eigen::Index>(row.size()));
      for (size_t k = 0; k < row.size(); ++k) v[static_cast<Eigen::Index>(k)] = row[k];
      basis_acc.push_back(std::move(v));
    } else if (kw == "gauge") {
      std::string nm;
      if (!(ls >> nm)) fail("gauge needs: NAME c1 .. cn");
      std::vector<Int> row;
      std::string tok;
      while (ls >> tok) {
        try {
          row.emplace_back(tok);
        } catch (const std::invalid_argument&) {
          fail("bad integer '" + tok + "'");
        }
      }
      IntVec v(static_cast<Eigen::Index>(row.size()));
      for (size_t k = 0; k < row.size(); ++k) v[static_cast<Eigen::Index>(k)] = row[k];
      t.gauge.push_back({nm, std::move(v)});
    } else {
      fail("unknown directive '" + kw + "'");
    }
  }
  if (!have_count) throw ParseError("triangulation: no tetrahedra");

  for (int i = 0; i < t.tetrahedra; ++i) {
    for (int f = 0; f < 4; ++f)
      if (t.gluings[i][f].tet < 0)
        throw ValidationError("face " + std::to_string(f) + " of tetrahedron " +
                              std::to_string(i) + " is not glued");
    if (t.bottom[i][0] < 0)
      throw ValidationError("tetrahedron " + std::to_string(i) + " has no taut data");
    if (t.names[i].empty()) t.names[i] = "T" + std::to_string(i);
  }
  if (!basis_acc.empty()) {
    const Eigen::Index n = basis_acc[0].size();
    if (static_cast<Eigen::Index>(basis_acc.size()) != n)
      throw ValidationError("basis must be a square matrix");
    IntMat b(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (basis_acc[i].size() != n) throw ValidationError("ragged basis row");
      b.row(i) = basis_acc[i].transpose();
    }
    Int det = bareiss_det(b);
    if (det != 1 && det != -1) throw ValidationError("basis matrix must be unimodular");
    t.report_basis = b;
  }
  return t;
}

FaceTable face_table(const TautTriangulation& t) {
  FaceTable ft;
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < t.tetrahedra; ++i) {
    for (int f = 0; f < 4; ++f) {
      if (seen.count({i, f})) continue;
      const FaceGluing& gl = t.gluings[i][f];
      seen.insert({i, f});
      seen.insert({gl.tet, gl.face});
      bool above_i = is_bottom_face(t, i, f);
      bool above_j = is_bottom_face(t, gl.tet, gl.face);
      if (above_i == above_j)
        throw ValidationError("face between tetrahedra " + std::to_string(i) + " and " +
                              std::to_string(gl.tet) +
                              " is not a bottom triangle of exactly one side (not layered)");
      if (above_i)
        ft.sides.push_back({{i, f}, {gl.tet, gl.face}});
      else
        ft.sides.push_back({{gl.tet, gl.face}, {i, f}});
    }
  }
  return ft;
}

std::vector<EdgeClass> edge_classes(const TautTriangulation& t) {
  UnionFind uf(static_cast<size_t>(t.tetrahedra) * 6);
  for (int i = 0; i < t.tetrahedra; ++i) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& gl = t.gluings[i][f];
      for (const auto& p : kPairs) {
        if (pair_contains(p, f)) continue;  // edge not on this face
        std::array<int, 2> img = sorted_pair(gl.perm[p[0]], gl.perm[p[1]]);
        uf.merge(pair_slot(i, p), pair_slot(gl.tet, img));
      }
    }
  }

  std::map<int, int> root_to_id;
  std::vector<EdgeClass> classes;
  for (int i = 0; i < t.tetrahedra; ++i) {
    for (size_t k = 0; k < kPairs.size(); ++k) {
      int root = uf.find(i * 6 + static_cast<int>(k));
      auto it = root_to_id.find(root);
      if (it == root_to_id.end()) {
        it = root_to_id.insert({root, static_cast<int>(classes.size())}).first;
        classes.push_back(EdgeClass{});
        classes.back().id = it->second;
      }
      classes[it->second].incidences.push_back({i, kPairs[k]});
    }
  }

  FaceTable ft = face_table(t);
  std::map<std::pair<int, int>, int> face_id;
  for (size_t fid = 0; fid < ft.sides.size(); ++fid) {
    face_id[ft.sides[fid].first] = static_cast<int>(fid);
    face_id[ft.sides[fid].second] = static_cast<int>(fid);
  }

  // bottom/top bookkeeping and the layeredness bijection
  for (int i = 0; i < t.tetrahedra; ++i) {
    int cb = classes[root_to_id[uf.find(pair_slot(i, t.bottom[i]))]].id;
    int ct = classes[root_to_id[uf.find(pair_slot(i, t.top[i]))]].id;
    if (classes[cb].bottom_of >= 0)
      throw ValidationError("edge class " + std::to_string(cb) +
                            " is the bottom edge of two tetrahedra (not layered)");
    classes[cb].bottom_of = i;
    if (classes[ct].top_of < 0) classes[ct].top_of = i;
  }
  for (const EdgeClass& c : classes)
    if (c.bottom_of < 0)
      throw ValidationError("edge class " + std::to_string(c.id) +
                            " is not the bottom edge of any tetrahedron (not layered)");

  // walk the link of each class once around
  for (EdgeClass& c : classes) {
    int tet0 = c.bottom_of;
    std::array<int, 2> pair0 = t.bottom[tet0];
    int exit0 = -1;
    for (int f = 0; f < 4; ++f)
      if (!pair_contains(pair0, f)) {
        exit0 = f;
        break;
      }
    int tet = tet0;
    std::array<int, 2> pr = pair0;
    int exitf = exit0;
    size_t steps = 0;
    do {
      const FaceGluing& gl = t.gluings[tet][exitf];
      c.fan.push_back(FanCrossing{face_id[{tet, exitf}], is_bottom_face(t, tet, exitf)});
      std::array<int, 2> img = sorted_pair(gl.perm[pr[0]], gl.perm[pr[1]]);
      int entry = gl.face;
      int nxt = -1;
      for (int f = 0; f < 4; ++f)
        if (!pair_contains(img, f) && f != entry) {
          nxt = f;
          break;
        }
      if (nxt < 0) throw ValidationError("edge link walk failed (degenerate gluing)");
      tet = gl.tet;
      pr = img;
      exitf = nxt;
      if (++steps > c.incidences.size())
        throw ValidationError("edge link of class " + std::to_string(c.id) +
                              " is not a circle");
    } while (!(tet == tet0 && pr == pair0 && exitf == exit0));
    if (c.fan.size() != c.incidences.size())
      throw ValidationError("edge link of class " + std::to_string(c.id) + " is not a circle");
  }
  return classes;
}

namespace {

// two descending fan sides, each from the tetrahedron above the edge to the
// tetrahedron below it
std::pair<std::vector<int>, std::vector<int>> fan_sides(const EdgeClass& c) {
  const size_t m = c.fan.size();
  size_t start = m;
  for (size_t i = 0; i < m; ++i) {
    if (c.fan[i].downward && !c.fan[(i + m - 1) % m].downward) {
      start = i;
      break;
    }
  }
  if (start == m) throw ValidationError("edge fan has no descending side");
  std::vector<FanCrossing> rot;
  for (size_t i = 0; i < m; ++i) rot.push_back(c.fan[(start + i) % m]);
  size_t i = 0;
  std::vector<int> side1, side2;
  while (i < m && rot[i].downward) side1.push_back(rot[i++].face_id);
  size_t j = m;
  while (j > i && !rot[j - 1].downward) side2.push_back(rot[--j].face_id);
  if (j != i) throw ValidationError("edge fan does not split into two descending sides");
  return {side1, side2};
}

}  // namespace

namespace {

int class_of(const std::vector<EdgeClass>& classes, int tet, const std::array<int, 2>& p) {
  for (const EdgeClass& c : classes)
    for (const auto& inc : c.incidences)
      if (inc.first == tet && inc.second == p) return c.id;
  throw DomainError("internal: incidence not classified");
}

}  // namespace

DriftAssignment compute_drifts(const TautTriangulation& t) {
  std::vector<EdgeClass> classes = edge_classes(t);
  FaceTable ft = face_table(t);
  const Eigen::Index nf = static_cast<Eigen::Index>(ft.sides.size());
  const Eigen::Index nt = t.tetrahedra;

  // boundary of the dual spine: faces are dual edges oriented downward
  IntMat d1 = IntMat::Zero(nt, nf);
  for (Eigen::Index fid = 0; fid < nf; ++fid) {
    int above = ft.sides[fid].first.first;
    int below = ft.sides[fid].second.first;
    d1(below, fid) += 1;
    d1(above, fid) -= 1;
  }

  SmithResult s1 = smith_normal_form(d1);
  const Eigen::Index r1 = s1.rank;
  const Eigen::Index nk = nf - r1;

  // coordinates along the kernel summand of Z^faces = ker(d1) + complement;
  // the complement part (first r1 coordinates) is dropped by the projection
  auto kernel_part = [&](const IntVec& x) {
    IntVec y = s1.vinv * x;
    IntVec out(nk);
    for (Eigen::Index i = 0; i < nk; ++i) out[i] = y[r1 + i];
    return out;
  };

  // one relation per edge class: the signed fan sum bounds the dual 2-cell
  // and must be an honest cycle of the dual graph
  IntMat rel(nk, static_cast<Eigen::Index>(classes.size()));
  for (size_t ci = 0; ci < classes.size(); ++ci) {
    IntVec col = IntVec::Zero(nf);
    for (const FanCrossing& fc : classes[ci].fan) col[fc.face_id] += fc.downward ? 1 : -1;
    IntVec y = s1.vinv * col;
    for (Eigen::Index i = 0; i < r1; ++i)
      if (y[i] != 0) throw ValidationError("fan relation is not a cycle in the dual graph");
    rel.col(static_cast<Eigen::Index>(ci)) = kernel_part(col);
  }

  SmithResult s2 = smith_normal_form(rel);
  const Eigen::Index r2 = s2.rank;
  const Eigen::Index n = nk - r2;
  if (n < 1) throw ValidationError("homology rank is zero; no fibered cone exists");

  // projection Z^faces -> G (free part), fixing one splitting; different
  // splittings differ by a coboundary
  auto project = [&](const IntVec& face_vec) {
    IntVec kc = kernel_part(face_vec);
    IntVec z = s2.u * kc;
    IntVec out(n);
    for (Eigen::Index i = 0; i < n; ++i) out[i] = z[r2 + i];
    return out;
  };

  DriftAssignment da;
  da.rank = static_cast<int>(n);
  da.triangle_drift.resize(nf);
  for (Eigen::Index fid = 0; fid < nf; ++fid) {
    IntVec e = IntVec::Zero(nf);
    e[fid] = 1;
    da.triangle_drift[fid] = project(e);
  }

  da.tetrahedron_drift.resize(nt);
  for (int T = 0; T < nt; ++T) {
    int top_cls = class_of(classes, T, t.top[T]);
    auto [side1, side2] = fan_sides(classes[top_cls]);
    auto side_drift = [&](const std::vector<int>& side) {
      IntVec x = IntVec::Zero(nf);
      for (int fid : side) x[fid] += 1;
      return project(x);
    };
    IntVec a = side_drift(side1), b = side_drift(side2);
    if (!lex_eq(a, b))
      throw ValidationError("edge-link fan sides disagree on a tetrahedron drift");
    da.tetrahedron_drift[T] = a;
  }

  // reporting basis and gauge
  if (t.report_basis) {
    if (t.report_basis->rows() != n)
      throw ValidationError("pinned basis has size " + std::to_string(t.report_basis->rows()) +
                            " but the homology rank is " + std::to_string(n));
    for (IntVec& v : da.triangle_drift) v = (*t.report_basis) * v;
    for (IntVec& v : da.tetrahedron_drift) v = (*t.report_basis) * v;
  }
  if (!t.gauge.empty()) {
    std::vector<IntVec> shift(nt, IntVec::Zero(n));
    for (const auto& [nm, vec] : t.gauge) {
      if (vec.size() != n) throw ValidationError("gauge vector has wrong dimension");
      auto it = std::find(t.names.begin(), t.names.end(), nm);
      if (it == t.names.end()) throw ValidationError("gauge names unknown vertex '" + nm + "'");
      shift[it - t.names.begin()] = vec;
    }
    for (Eigen::Index fid = 0; fid < nf; ++fid) {
      int above = ft.sides[fid].first.first;
      int below = ft.sides[fid].second.first;
      da.triangle_drift[fid] += shift[below] - shift[above];
    }
    for (int T = 0; T < nt; ++T) {
      int top_cls = class_of(classes, T, t.top[T]);
      int from = classes[top_cls].bottom_of;  // vertex of the top edge class
      da.tetrahedron_drift[T] += shift[T] - shift[from];
    }
  }
  return da;
}

FlowGraph build_flow_graph(const TautTriangulation& t) {
  std::vector<EdgeClass> classes = edge_classes(t);
  FaceTable ft = face_table(t);
  DriftAssignment da = compute_drifts(t);

  FlowGraph fg;
  fg.rank = da.rank;
  fg.vertices = t.names;
  for (size_t fid = 0; fid < ft.sides.size(); ++fid) {
    DriftEdge e;
    e.from = ft.sides[fid].first.first;
    e.to = ft.sides[fid].second.first;
    e.drift = da.triangle_drift[fid];
    e.id = static_cast<int>(fid);
    fg.triangle_edges.push_back(std::move(e));
  }
  for (int T = 0; T < t.tetrahedra; ++T) {
    DriftEdge e;
    int top_cls = class_of(classes, T, t.top[T]);
    e.from = classes[top_cls].bottom_of;
    e.to = T;
    e.drift = da.tetrahedron_drift[T];
    e.id = T;
    fg.tetrahedron_edges.push_back(std::move(e));
  }
  validate_veering(fg);
  return fg;
}

}  // namespace arcflow
