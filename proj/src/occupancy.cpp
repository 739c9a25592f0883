#include "arcflow/occupancy.hpp"

#include "arcflow/smith.hpp"
#include "arcflow/volume.hpp"

#include <algorithm>

namespace arcflow {

namespace {

struct Edge {
  RatVec normal;  // inward
  Rat offset;     // n.x > offset strictly inside
};

Rat floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rat(q);
}

Rat ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rat(q);
}

// true iff some Z^2 point lies strictly inside the polygon with the given
// vertex list (convex order) and edge inequalities
bool interior_occupied(const std::vector<RatVec>& verts, const std::vector<Edge>& edges) {
  Rat xmin = verts[0][0], xmax = verts[0][0], ymin = verts[0][1], ymax = verts[0][1];
  for (const RatVec& v : verts) {
    xmin = std::min(xmin, v[0]);
    xmax = std::max(xmax, v[0]);
    ymin = std::min(ymin, v[1]);
    ymax = std::max(ymax, v[1]);
  }
  Int x0 = ceil_rat(xmin).get_num(), x1 = floor_rat(xmax).get_num();
  Int y0 = ceil_rat(ymin).get_num(), y1 = floor_rat(ymax).get_num();
  for (Int x = x0; x <= x1; ++x) {
    for (Int y = y0; y <= y1; ++y) {
      bool inside = true;
      for (const Edge& e : edges) {
        Rat val = e.normal[0] * Rat(x) + e.normal[1] * Rat(y);
        if (val <= e.offset) {
          inside = false;
          break;
        }
      }
      if (inside) return true;
    }
  }
  return false;
}

}  // namespace

OccupancyResult occupancy(const Lattice& lattice, const std::vector<RatVec>& polytope,
                          const OccupancyParams& params) {
  if (polytope.size() < 2) throw DomainError("occupancy: degenerate polytope");
  const Eigen::Index dim = lattice.rank();

  // vertices in lattice-basis coordinates (lattice becomes Z^dim, covolume 1)
  RatMat basis = to_rat(lattice.basis);
  std::vector<RatVec> verts;
  for (const RatVec& v : polytope) verts.push_back(solve_left(basis, v));

  if (dim == 1) {
    Rat lo = verts[0][0], hi = verts[0][0];
    for (const RatVec& v : verts) {
      lo = std::min(lo, v[0]);
      hi = std::max(hi, v[0]);
    }
    if (lo == hi) throw DomainError("occupancy: degenerate polytope");
    OccupancyResult r;
    r.value = 1;
    r.raw_estimate = 1;
    r.certified = true;
    r.params = params;
    return r;
  }
  if (dim != 2)
    throw DomainError("occupancy: estimator implemented for lattice rank <= 2");

  std::vector<RatVec> hull = convex_cycle_order(verts);
  Rat area = polygon_area(hull);
  if (area == 0) throw DomainError("occupancy: degenerate polytope");

  RatVec centroid = RatVec::Zero(2);
  for (const RatVec& v : hull) centroid += v;
  centroid /= Rat(static_cast<long>(hull.size()));

  // template copy centered at the origin; scaling about 0 nests the family
  std::vector<RatVec> base;
  for (const RatVec& v : hull) base.push_back(RatVec(v - centroid));

  auto occupied_at = [&](const Rat& tx, const Rat& ty, const Rat& scale) {
    std::vector<RatVec> vs;
    vs.reserve(base.size());
    for (const RatVec& v : base) {
      RatVec w(2);
      w[0] = tx + scale * v[0];
      w[1] = ty + scale * v[1];
      vs.push_back(w);
    }
    std::vector<Edge> edges;
    for (size_t i = 0; i < vs.size(); ++i) {
      const RatVec& a = vs[i];
      const RatVec& b = vs[(i + 1) % vs.size()];
      Edge e;
      e.normal = RatVec(2);
      e.normal[0] = a[1] - b[1];
      e.normal[1] = b[0] - a[0];
      e.offset = e.normal[0] * a[0] + e.normal[1] * a[1];
      Rat ctr = e.normal[0] * tx + e.normal[1] * ty;
      if (ctr < e.offset) {  // flip to make the centroid side the inside
        e.normal = RatVec(-e.normal);
        e.offset = -e.offset;
      }
      edges.push_back(e);
    }
    return interior_occupied(vs, edges);
  };

  Rat best = 0;
  const int n = params.grid;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rat tx(i, n), ty(j, n);
      tx.canonicalize();
      ty.canonicalize();
      // bracket [lo, hi] with lo free, hi occupied
      Rat lo = 0, hi = 1;
      int guard = 0;
      while (!occupied_at(tx, ty, hi)) {
        lo = hi;
        hi *= 2;
        if (++guard > 16) throw DomainError("occupancy: scale search failed to bracket");
      }
      for (int step = 0; step < params.scale_bits; ++step) {
        Rat mid = (lo + hi) / 2;
        if (occupied_at(tx, ty, mid))
          hi = mid;
        else
          lo = mid;
      }
      Rat vol = lo * lo * area;
      best = std::max(best, vol);
    }
  }

  OccupancyResult r;
  r.raw_estimate = best;
  r.value = std::max(best, Rat(1));  // occ >= 1 always
  r.certified = false;
  r.params = params;
  return r;
}

}  // namespace arcflow
