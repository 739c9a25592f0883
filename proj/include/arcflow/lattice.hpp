#pragma once

#include "arcflow/numeric.hpp"

namespace arcflow {

/// Full-rank-or-less lattice given by independent basis rows in a fixed
/// ambient Z^n. Bases are stored Hermite-reduced so equal lattices compare
/// equal structurally.
struct Lattice {
  Eigen::Index ambient_dim = 0;
  IntMat basis;  // rows

  static Lattice standard(Eigen::Index n);
  Eigen::Index rank() const { return basis.rows(); }
  bool operator==(const Lattice& o) const {
    return ambient_dim == o.ambient_dim && basis.rows() == o.basis.rows() &&
           basis.cols() == o.basis.cols() && basis == o.basis;
  }
};

/// Basis of span(vectors) intersected with the ambient lattice. The result is
/// saturated: the quotient of the ambient lattice by it is torsion-free.
/// Rejects rank-0 spans and non-full-rank ambient lattices.
Lattice saturate(const RatMat& vectors, const Lattice& ambient);

}  // namespace arcflow
