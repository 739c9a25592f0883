#include "arcflow/lattice.hpp"

#include "arcflow/smith.hpp"

namespace arcflow {

Lattice Lattice::standard(Eigen::Index n) {
  return Lattice{n, IntMat::Identity(n, n)};
}

namespace {

// Saturation of the row lattice of an integer matrix inside Z^n: with
// u*a*v = d of rank r, the row space over Q is spanned by the first r rows
// of vinv, and those rows already generate span \cap Z^n.
IntMat saturate_rows(const IntMat& a) {
  SmithResult s = smith_normal_form(a);
  IntMat rows(s.rank, a.cols());
  for (Eigen::Index i = 0; i < s.rank; ++i) rows.row(i) = s.vinv.row(i);
  return hermite_row_basis(rows);
}

}  // namespace

Lattice saturate(const RatMat& vectors, const Lattice& ambient) {
  if (ambient.rank() != ambient.ambient_dim)
    throw DomainError("saturate: ambient lattice must be full-rank");
  if (vectors.cols() != ambient.ambient_dim)
    throw DomainError("saturate: dimension mismatch");

  // coordinates of the input vectors w.r.t. the ambient basis
  RatMat amb = to_rat(ambient.basis);
  RatMat amb_inv = rat_inverse(amb);
  RatMat coords = vectors * amb_inv;

  // clear denominators row by row; scaling rows keeps the span
  IntMat zrows(coords.rows(), coords.cols());
  for (Eigen::Index i = 0; i < coords.rows(); ++i) {
    Int den = 1;
    for (Eigen::Index j = 0; j < coords.cols(); ++j)
      den = lcm(den, coords(i, j).get_den());
    for (Eigen::Index j = 0; j < coords.cols(); ++j) {
      Rat scaled = coords(i, j) * Rat(den);
      zrows(i, j) = scaled.get_num();
    }
  }

  IntMat sat = saturate_rows(zrows);
  if (sat.rows() == 0) throw DomainError("saturate: rank-0 span");
  IntMat back = sat * ambient.basis;
  return Lattice{ambient.ambient_dim, hermite_row_basis(back)};
}

}  // namespace arcflow
