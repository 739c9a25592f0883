#include "arcflow/volume.hpp"

#include <algorithm>

namespace arcflow {

namespace {

Rat det2(const RatVec& a, const RatVec& b) { return a[0] * b[1] - a[1] * b[0]; }

Rat det3(const RatVec& a, const RatVec& b, const RatVec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace

std::vector<RatVec> convex_cycle_order(const std::vector<RatVec>& pts) {
  if (pts.size() < 3) return pts;
  const Eigen::Index n = pts[0].size();
  RatVec centroid = RatVec::Zero(n);
  for (const RatVec& p : pts) centroid += p;
  centroid /= Rat(static_cast<long>(pts.size()));

  // choose a planar coordinate pair (i,j) with injective projection
  Eigen::Index ci = 0, cj = 1;
  if (n == 3) {
    RatVec u = pts[1] - pts[0];
    RatVec v;
    bool found = false;
    for (size_t k = 2; k < pts.size() && !found; ++k) {
      v = pts[k] - pts[0];
      RatVec nrm(3);
      nrm[0] = u[1] * v[2] - u[2] * v[1];
      nrm[1] = u[2] * v[0] - u[0] * v[2];
      nrm[2] = u[0] * v[1] - u[1] * v[0];
      if (nrm[0] != 0 || nrm[1] != 0 || nrm[2] != 0) {
        if (nrm[2] != 0) {
          ci = 0;
          cj = 1;
        } else if (nrm[1] != 0) {
          ci = 0;
          cj = 2;
        } else {
          ci = 1;
          cj = 2;
        }
        found = true;
      }
    }
    if (!found) throw DomainError("convex_cycle_order: points are collinear");
  }

  struct Planar {
    Rat x, y;
    RatVec p;
  };
  std::vector<Planar> q;
  q.reserve(pts.size());
  for (const RatVec& p : pts) q.push_back({p[ci] - centroid[ci], p[cj] - centroid[cj], p});

  auto half = [](const Planar& a) {
    // upper half first: y > 0, or y == 0 and x > 0
    return (a.y > 0 || (a.y == 0 && a.x > 0)) ? 0 : 1;
  };
  std::sort(q.begin(), q.end(), [&](const Planar& a, const Planar& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rat cr = a.x * b.y - a.y * b.x;
    if (cr != 0) return cr > 0;
    return a.x * a.x + a.y * a.y < b.x * b.x + b.y * b.y;
  });

  std::vector<RatVec> out;
  out.reserve(q.size());
  for (const Planar& p : q) out.push_back(p.p);
  return out;
}

Rat polygon_area(const std::vector<RatVec>& vertices) {
  if (vertices.size() < 3) throw DomainError("polygon_area: need at least 3 vertices");
  std::vector<RatVec> v = convex_cycle_order(vertices);
  Rat s = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    const RatVec& a = v[i];
    const RatVec& b = v[(i + 1) % v.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return abs_rat(s) / 2;
}

Rat pyramid_volume(const Cone& c, const RatVec& beta) {
  const Eigen::Index n = c.ambient_dim;
  if (n != 2 && n != 3)
    throw DomainError("pyramid_volume: exact path limited to ambient dimension 2 or 3");
  if (beta.size() != n) throw DomainError("pyramid_volume: beta dimension mismatch");
  if (!cone_is_pointed(c) || cone_dim(c) != n)
    throw DomainError("pyramid_volume: cone must be pointed and full-dimensional");

  std::vector<RatVec> pts;
  for (const IntVec& r : c.rays) {
    Rat b = dot(beta, r);
    if (b <= 0)
      throw DomainError("pyramid_volume: beta nonpositive on an extreme ray (unbounded pyramid)");
    RatVec p = to_rat(r);
    p /= b;
    pts.push_back(p);
  }

  if (n == 2) {
    if (pts.size() != 2)
      throw DomainError("pyramid_volume: planar pointed cone must have two rays");
    return abs_rat(det2(pts[0], pts[1])) / 2;
  }

  std::vector<RatVec> ordered = convex_cycle_order(pts);
  Rat vol = 0;
  for (size_t i = 1; i + 1 < ordered.size(); ++i)
    vol += abs_rat(det3(ordered[0], ordered[i], ordered[i + 1]));
  return vol / 6;
}

}  // namespace arcflow
