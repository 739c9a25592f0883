#include "arcflow/cone.hpp"

#include "arcflow/smith.hpp"

#include <algorithm>

namespace arcflow {

namespace {

IntMat rows_from(const std::vector<IntVec>& vs, Eigen::Index n) {
  IntMat m(static_cast<Eigen::Index>(vs.size()), n);
  for (size_t i = 0; i < vs.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
  return m;
}

void sort_dedupe(std::vector<IntVec>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end(), lex_eq), vs.end());
}

// Extreme rays of the pointed cone { z in R^r : m z >= 0 }, where m has full
// column rank. Every extreme ray is cut out by r-1 independent active rows,
// so enumerating row subsets finds all of them.
std::vector<IntVec> pointed_rays(const IntMat& m) {
  const Eigen::Index rows = m.rows(), r = m.cols();
  std::vector<IntVec> out;
  auto feasible = [&](const IntVec& z) {
    for (Eigen::Index i = 0; i < rows; ++i)
      if (dot(IntVec(m.row(i).transpose()), z) < 0) return false;
    return true;
  };
  if (r == 0) return out;
  if (r == 1) {
    IntVec z(1);
    z[0] = 1;
    if (feasible(z)) out.push_back(z);
    z[0] = -1;
    if (feasible(z)) out.push_back(z);
    return out;
  }
  std::vector<Eigen::Index> idx(r - 1);
  // enumerate (r-1)-subsets of rows
  std::vector<int> comb(rows, 0);
  std::fill(comb.begin(), comb.begin() + (r - 1), 1);
  std::sort(comb.begin(), comb.end());
  do {
    Eigen::Index k = 0;
    IntMat sub(r - 1, r);
    for (Eigen::Index i = 0; i < rows; ++i)
      if (comb[i]) sub.row(k++) = m.row(i);
    IntMat ker = kernel_basis(sub);
    if (ker.cols() != 1) continue;
    IntVec z = primitive(ker.col(0));
    if (feasible(z))
      out.push_back(z);
    else {
      IntVec nz = -z;
      if (feasible(nz)) out.push_back(nz);
    }
  } while (std::next_permutation(comb.begin(), comb.end()));
  sort_dedupe(out);
  return out;
}

}  // namespace

std::vector<IntVec> dual_generators(Eigen::Index n, const std::vector<IntVec>& gens) {
  IntMat g = rows_from(gens, n);
  std::vector<IntVec> out;

  // lineality of the dual = right kernel of the generator matrix
  IntMat lin = kernel_basis(g);
  for (Eigen::Index j = 0; j < lin.cols(); ++j) {
    IntVec v = primitive(lin.col(j));
    out.push_back(v);
    out.push_back(IntVec(-v));
  }

  // pointed part lives in the saturated row space of g
  SmithResult s = smith_normal_form(g);
  const Eigen::Index r = s.rank;
  if (r > 0) {
    IntMat srows(r, n);
    for (Eigen::Index i = 0; i < r; ++i) srows.row(i) = s.vinv.row(i);
    IntMat m = g * srows.transpose();  // constraints in subspace coords
    for (const IntVec& z : pointed_rays(m)) {
      IntVec y = srows.transpose() * z;
      out.push_back(primitive(y));
    }
  }
  sort_dedupe(out);
  return out;
}

Cone make_cone(Eigen::Index n, const std::vector<IntVec>& generators) {
  if (n > 4) throw DomainError("cone: exact path limited to ambient dimension <= 4");
  if (generators.empty()) throw DomainError("cone: empty generator set");
  std::vector<IntVec> gens;
  for (const IntVec& g : generators) {
    if (g.size() != n) throw DomainError("cone: generator dimension mismatch");
    if (vec_gcd(g) == 0) continue;  // drop zero vectors
    gens.push_back(primitive(g));
  }
  if (gens.empty()) throw DomainError("cone: all generators zero");
  sort_dedupe(gens);

  Cone c;
  c.ambient_dim = n;
  c.generators = gens;
  c.facets = dual_generators(n, gens);
  if (c.facets.empty()) {
    // dual is {0}: the cone is all of R^n
    c.rays.clear();
    for (Eigen::Index i = 0; i < n; ++i) {
      IntVec e = IntVec::Zero(n);
      e[i] = 1;
      c.rays.push_back(e);
      c.rays.push_back(IntVec(-e));
    }
    sort_dedupe(c.rays);
  } else {
    c.rays = dual_generators(n, c.facets);
  }
  for (const IntVec& g : gens) {
    if (!cone_contains(c, to_rat(g)))
      throw DomainError("cone: internal error, generator escapes ray description");
  }
  return c;
}

std::vector<IntVec> extreme_rays(const Cone& c) { return c.rays; }

Cone dual_cone(const Cone& c) {
  Cone d;
  d.ambient_dim = c.ambient_dim;
  d.generators = c.facets;
  d.rays = c.facets;
  d.facets = c.rays;
  return d;
}

bool cone_contains(const Cone& c, const RatVec& x) {
  for (const IntVec& f : c.facets)
    if (dot(x, f) < 0) return false;
  return true;
}

bool cone_contains_interior(const Cone& c, const RatVec& x) {
  if (c.facets.empty()) return true;  // whole space
  for (const IntVec& f : c.facets)
    if (dot(x, f) <= 0) return false;
  return true;
}

bool cone_is_pointed(const Cone& c) {
  for (const IntVec& r : c.rays) {
    RatVec neg = to_rat(r);
    for (Eigen::Index i = 0; i < neg.size(); ++i) neg[i] = -neg[i];
    if (cone_contains(c, neg)) return false;
  }
  return true;
}

Eigen::Index cone_dim(const Cone& c) {
  if (c.rays.empty()) return 0;
  return rank_of(rows_from(c.rays, c.ambient_dim));
}

}  // namespace arcflow
