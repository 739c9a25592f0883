#include "arcflow/lattice.hpp"

#include "arcflow/smith.hpp"
#include "test_util.hpp"

#include <random>

using namespace arcflow;

namespace {

RatMat rows(std::initializer_list<std::initializer_list<Rat>> init) {
  RatMat m(static_cast<Eigen::Index>(init.size()),
           static_cast<Eigen::Index>(init.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : init) {
    Eigen::Index j = 0;
    for (const Rat& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool lattice_member(const Lattice& l, const RatVec& v) {
  try {
    RatVec c = solve_left(to_rat(l.basis), v);
    for (Eigen::Index i = 0; i < c.size(); ++i)
      if (c[i].get_den() != 1) return false;
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

int main() {
  Lattice z2 = Lattice::standard(2);

  {
    Lattice l = saturate(rows({{Rat(2), Rat(0)}}), z2);
    REQUIRE(l.rank() == 1);
    REQUIRE(l.basis(0, 0) == 1 && l.basis(0, 1) == 0);
  }
  {
    Lattice l = saturate(rows({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}}), z2);
    REQUIRE(l.rank() == 2);
    REQUIRE(l.basis == IntMat::Identity(2, 2));
  }
  {
    Lattice z3 = Lattice::standard(3);
    Lattice l = saturate(rows({{Rat(1), Rat(2), Rat(3)}}), z3);
    REQUIRE(l.rank() == 1);
    REQUIRE(l.basis(0, 0) == 1 && l.basis(0, 1) == 2 && l.basis(0, 2) == 3);
  }
  REQUIRE_THROWS_AS(saturate(rows({{Rat(0), Rat(0)}}), z2), DomainError);

  // idempotence and containment of the integral row span, on random inputs
  std::mt19937_64 rng(20240813);
  std::uniform_int_distribution<int> dimd(1, 4), entry(-9, 9), rowsd(1, 4);
  for (int iter = 0; iter < 200; ++iter) {
    int n = dimd(rng), k = rowsd(rng);
    RatMat m(k, n);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) {
        int den = 1 + (std::abs(entry(rng)) % 3);
        m(i, j) = Rat(entry(rng), den);
        m(i, j).canonicalize();
      }
    Lattice amb = Lattice::standard(n);
    Lattice sat;
    try {
      sat = saturate(m, amb);
    } catch (const DomainError&) {
      continue;  // rank-0 span
    }
    Lattice sat2 = saturate(to_rat(sat.basis), amb);
    REQUIRE(sat == sat2);
    for (int i = 0; i < k; ++i) {
      Int den = 1;
      for (int j = 0; j < n; ++j) den = lcm(den, m(i, j).get_den());
      RatVec scaled(n);
      for (int j = 0; j < n; ++j) scaled[j] = m(i, j) * Rat(den);
      bool zero = true;
      for (int j = 0; j < n; ++j)
        if (scaled[j] != 0) zero = false;
      if (!zero) REQUIRE(lattice_member(sat, scaled));
    }
  }

  return test_done("test_lattice");
}
