#include "arcflow/smith.hpp"

#include "test_util.hpp"

#include <random>

using namespace arcflow;

namespace {

void check_decomposition(const IntMat& m) {
  SmithResult s = smith_normal_form(m);
  REQUIRE(IntMat(s.u * m * s.v) == s.d);
  Int du = bareiss_det(s.u);
  Int dv = bareiss_det(s.v);
  REQUIRE(du == 1 || du == -1);
  REQUIRE(dv == 1 || dv == -1);
  REQUIRE(IntMat(s.v * s.vinv) == IntMat(IntMat::Identity(m.cols(), m.cols())));
  // diagonal, nonnegative, divisibility chain
  for (Eigen::Index i = 0; i < s.d.rows(); ++i)
    for (Eigen::Index j = 0; j < s.d.cols(); ++j)
      if (i != j) REQUIRE(s.d(i, j) == 0);
  Eigen::Index k = std::min(s.d.rows(), s.d.cols());
  for (Eigen::Index i = 0; i < k; ++i) REQUIRE(s.d(i, i) >= 0);
  for (Eigen::Index i = 0; i + 1 < k; ++i) {
    if (s.d(i + 1, i + 1) != 0) {
      REQUIRE(s.d(i, i) != 0);
      REQUIRE(s.d(i + 1, i + 1) % s.d(i, i) == 0);
    }
  }
}

}  // namespace

int main() {
  {
    IntMat m(2, 2);
    m << 2, 0, 0, 3;
    SmithResult s = smith_normal_form(m);
    REQUIRE(s.d(0, 0) == 1 && s.d(1, 1) == 6);
    check_decomposition(m);
  }
  {
    IntMat m = IntMat::Identity(4, 4);
    SmithResult s = smith_normal_form(m);
    REQUIRE(s.d == m);
    check_decomposition(m);
  }
  {
    IntMat m(1, 1);
    m << 0;
    SmithResult s = smith_normal_form(m);
    REQUIRE(s.d(0, 0) == 0);
    REQUIRE(s.rank == 0);
  }

  std::mt19937_64 rng(20240812);
  std::uniform_int_distribution<int> dim(1, 8), entry(-50, 50);
  for (int iter = 0; iter < 200; ++iter) {
    IntMat m(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    check_decomposition(m);

    IntMat ker = kernel_basis(m);
    REQUIRE(ker.cols() == m.cols() - smith_normal_form(m).rank);
    if (ker.cols() > 0) {
      IntMat prod = m * ker;
      for (Eigen::Index i = 0; i < prod.rows(); ++i)
        for (Eigen::Index j = 0; j < prod.cols(); ++j) REQUIRE(prod(i, j) == 0);
    }
  }

  // Hermite form is canonical: row-permuted / row-summed bases agree
  {
    IntMat a(2, 3);
    a << 2, 4, 6, 1, 2, 3;
    IntMat h1 = hermite_row_basis(a);
    IntMat b(2, 3);
    b << 1, 2, 3, 3, 6, 9;
    IntMat h2 = hermite_row_basis(b);
    REQUIRE(h1 == h2);
    REQUIRE(h1.rows() == 1);
    REQUIRE(h1(0, 0) == 1 && h1(0, 1) == 2 && h1(0, 2) == 3);
  }

  {
    RatMat m(2, 2);
    m << Rat(1, 2), Rat(1), Rat(0), Rat(2);
    RatMat inv = rat_inverse(m);
    RatMat prod = m * inv;
    REQUIRE(prod(0, 0) == 1 && prod(1, 1) == 1 && prod(0, 1) == 0 && prod(1, 0) == 0);
    RatVec rhs(2);
    rhs << Rat(3), Rat(4);
    RatVec x = solve_left(m, rhs);
    RatVec back(2);
    back << x[0] * m(0, 0) + x[1] * m(1, 0), x[0] * m(0, 1) + x[1] * m(1, 1);
    REQUIRE(back[0] == 3 && back[1] == 4);
  }

  return test_done("test_smith");
}
