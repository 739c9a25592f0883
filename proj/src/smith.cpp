#include "arcflow/smith.hpp"

#include <algorithm>

namespace arcflow {

namespace {

using IntRowVec = Eigen::Matrix<Int, 1, Eigen::Dynamic>;

struct GcdX {
  Int g, p, q;  // p*a + q*b = g
};

GcdX gcdext(const Int& a, const Int& b) {
  GcdX r;
  mpz_gcdext(r.g.get_mpz_t(), r.p.get_mpz_t(), r.q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

struct SmithWork {
  IntMat a, u, v, vinv;
  Eigen::Index m, n;

  explicit SmithWork(const IntMat& in)
      : a(in),
        u(IntMat::Identity(in.rows(), in.rows())),
        v(IntMat::Identity(in.cols(), in.cols())),
        vinv(IntMat::Identity(in.cols(), in.cols())),
        m(in.rows()),
        n(in.cols()) {}

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    u.row(i).swap(u.row(j));
  }
  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    v.col(i).swap(v.col(j));
    vinv.row(i).swap(vinv.row(j));
  }
  // row dst += c * row src
  void add_row(Eigen::Index dst, Eigen::Index src, const Int& c) {
    a.row(dst) += c * a.row(src);
    u.row(dst) += c * u.row(src);
  }
  // col dst += c * col src; inverse op on vinv is row src -= c * row dst
  void add_col(Eigen::Index dst, Eigen::Index src, const Int& c) {
    a.col(dst) += c * a.col(src);
    v.col(dst) += c * v.col(src);
    vinv.row(src) -= c * vinv.row(dst);
  }
  void negate_row(Eigen::Index i) {
    a.row(i) = -a.row(i);
    u.row(i) = -u.row(i);
  }

  // unimodular 2x2 row transform sending (a(t,*), a(i,*)) to
  // (p*row_t + q*row_i, u1*row_i - u2*row_t); afterwards a(t,t) = gcd,
  // a(i,t) = 0. One step, no remainder cascades, so entries stay small.
  void gcd_rows(Eigen::Index t, Eigen::Index i) {
    GcdX e = gcdext(a(t, t), a(i, t));
    Int u1 = a(t, t) / e.g, u2 = a(i, t) / e.g;
    IntRowVec rt = a.row(t), ri = a.row(i);
    a.row(t) = e.p * rt + e.q * ri;
    a.row(i) = u1 * ri - u2 * rt;
    IntRowVec ut = u.row(t), ui = u.row(i);
    u.row(t) = e.p * ut + e.q * ui;
    u.row(i) = u1 * ui - u2 * ut;
  }

  void gcd_cols(Eigen::Index t, Eigen::Index j) {
    GcdX e = gcdext(a(t, t), a(t, j));
    Int u1 = a(t, t) / e.g, u2 = a(t, j) / e.g;
    IntVec ct = a.col(t), cj = a.col(j);
    a.col(t) = e.p * ct + e.q * cj;
    a.col(j) = u1 * cj - u2 * ct;
    IntVec vt = v.col(t), vj = v.col(j);
    v.col(t) = e.p * vt + e.q * vj;
    v.col(j) = u1 * vj - u2 * vt;
    // inverse of [[p, -u2], [q, u1]] (det 1) is [[u1, u2], [-q, p]]
    IntRowVec wt = vinv.row(t), wj = vinv.row(j);
    vinv.row(t) = u1 * wt + u2 * wj;
    vinv.row(j) = e.p * wj - e.q * wt;
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& in) {
  SmithWork w(in);
  const Eigen::Index m = w.m, n = w.n;
  Eigen::Index t = 0;
  while (t < std::min(m, n)) {
    // pivot: smallest nonzero |a(i,j)| in the trailing block, row-major ties
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j) {
        if (w.a(i, j) == 0) continue;
        if (pi < 0 || abs(w.a(i, j)) < abs(w.a(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    // clear column t and row t; a column pass never dirties the cleared row
    // when it only divides exactly, so alternate until both sides are clean
    while (true) {
      bool used_gcd = false;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (w.a(i, t) == 0) continue;
        if (w.a(i, t) % w.a(t, t) == 0) {
          w.add_row(i, t, -Int(w.a(i, t) / w.a(t, t)));
        } else {
          w.gcd_rows(t, i);
          used_gcd = true;
        }
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (w.a(t, j) == 0) continue;
        if (w.a(t, j) % w.a(t, t) == 0) {
          w.add_col(j, t, -Int(w.a(t, j) / w.a(t, t)));
        } else {
          w.gcd_cols(t, j);
          used_gcd = true;
        }
      }
      bool col_clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i)
        if (w.a(i, t) != 0) col_clean = false;
      if (!used_gcd && col_clean) break;
    }

    // pivot must divide the trailing block; fold a bad row in and redo
    Eigen::Index bad = -1;
    for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
      for (Eigen::Index j = t + 1; j < n; ++j)
        if (w.a(i, j) % w.a(t, t) != 0) {
          bad = i;
          break;
        }
    if (bad >= 0) {
      w.add_row(t, bad, 1);
      continue;
    }
    if (w.a(t, t) < 0) w.negate_row(t);
    ++t;
  }
  SmithResult out;
  out.u = std::move(w.u);
  out.d = std::move(w.a);
  out.v = std::move(w.v);
  out.vinv = std::move(w.vinv);
  out.rank = t;
  return out;
}

IntMat kernel_basis(const IntMat& m) {
  SmithResult s = smith_normal_form(m);
  const Eigen::Index n = m.cols();
  IntMat k(n, n - s.rank);
  for (Eigen::Index j = s.rank; j < n; ++j) k.col(j - s.rank) = s.v.col(j);
  return k;
}

IntMat hermite_row_basis(const IntMat& in) {
  IntMat a = in;
  const Eigen::Index m = a.rows(), n = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    // gcd the column below r into row r
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < m; ++i)
      if (a(i, c) != 0 && (piv < 0 || abs(a(i, c)) < abs(a(piv, c)))) piv = i;
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < m; ++i) {
      if (a(i, c) == 0) continue;
      if (a(i, c) % a(r, c) == 0) {
        a.row(i) -= Int(a(i, c) / a(r, c)) * a.row(r);
      } else {
        GcdX e = gcdext(a(r, c), a(i, c));
        Int u1 = a(r, c) / e.g, u2 = a(i, c) / e.g;
        IntRowVec rr = a.row(r), ri = a.row(i);
        a.row(r) = e.p * rr + e.q * ri;
        a.row(i) = u1 * ri - u2 * rr;
      }
    }
    if (a(r, c) < 0) a.row(r) = -a.row(r);
    // reduce entries above the pivot into [0, pivot)
    for (Eigen::Index i = 0; i < r; ++i) {
      Int q = fdiv(a(i, c), a(r, c));
      if (q != 0) a.row(i) -= q * a.row(r);
    }
    ++r;
  }
  return a.topRows(r);
}

Int bareiss_det(const IntMat& in) {
  if (in.rows() != in.cols()) throw DomainError("bareiss_det: not square");
  const Eigen::Index n = in.rows();
  if (n == 0) return 1;
  IntMat a = in;
  Int sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Eigen::Index rank_of(const IntMat& m) { return smith_normal_form(m).rank; }

RatMat rat_inverse(const RatMat& in) {
  if (in.rows() != in.cols()) throw DomainError("rat_inverse: not square");
  const Eigen::Index n = in.rows();
  RatMat a = in;
  RatMat inv = RatMat::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw DomainError("rat_inverse: singular matrix");
    a.row(c).swap(a.row(piv));
    inv.row(c).swap(inv.row(piv));
    Rat p = a(c, c);
    a.row(c) /= p;
    inv.row(c) /= p;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rat f = a(i, c);
      a.row(i) -= f * a.row(c);
      inv.row(i) -= f * inv.row(c);
    }
  }
  return inv;
}

RatVec solve_left(const RatMat& m, const RatVec& rhs) {
  // x * m = rhs  <=>  m^T x^T = rhs^T; Gaussian elimination with consistency check
  RatMat a = m.transpose();
  RatVec b = rhs;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.row(r).swap(a.row(piv));
    std::swap(b[r], b[piv]);
    Rat p = a(r, c);
    a.row(r) /= p;
    b[r] /= p;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      a.row(i) -= f * a.row(r);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (Eigen::Index i = r; i < rows; ++i)
    if (b[i] != 0) throw DomainError("solve_left: inconsistent system");
  if (static_cast<Eigen::Index>(pivot_col.size()) < cols)
    throw DomainError("solve_left: underdetermined system");
  RatVec x(cols);
  for (Eigen::Index i = 0; i < cols; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace arcflow
