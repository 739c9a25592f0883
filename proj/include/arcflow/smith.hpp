#pragma once

#include "arcflow/numeric.hpp"

namespace arcflow {

/// Smith decomposition u*m*v = d with u, v unimodular and d diagonal,
/// d(0,0) | d(1,1) | ... ; diagonal entries nonnegative.
/// vinv is maintained alongside v so callers can change coordinates without
/// a separate integer inversion.
struct SmithResult {
  IntMat u, d, v, vinv;
  Eigen::Index rank = 0;
};

SmithResult smith_normal_form(const IntMat& m);

/// Columns form an integral basis of the right kernel { x : m x = 0 }.
/// The basis is a direct summand of the ambient Z^cols.
IntMat kernel_basis(const IntMat& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of m:
/// zero rows dropped, pivots positive, entries above a pivot reduced into
/// [0, pivot). Equal row lattices yield equal matrices.
IntMat hermite_row_basis(const IntMat& m);

/// Exact determinant (fraction-free Bareiss).
Int bareiss_det(const IntMat& m);

Eigen::Index rank_of(const IntMat& m);

/// Gaussian elimination over Q; throws DomainError if m is singular.
RatMat rat_inverse(const RatMat& m);

/// Solves x * m = rhs (row vector form); throws DomainError when
/// inconsistent or underdetermined entries are needed.
RatVec solve_left(const RatMat& m, const RatVec& rhs);

}  // namespace arcflow
