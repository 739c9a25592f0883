#include "arcflow/numeric.hpp"

#include "test_util.hpp"

#include <random>

using namespace arcflow;

int main() {
  // canonical form: reduced, positive denominator
  Rat r = parse_rat("-6/4");
  REQUIRE(r.get_num() == -3);
  REQUIRE(r.get_den() == 2);
  REQUIRE(to_string(r) == "-3/2");
  REQUIRE(to_string(parse_rat("8/2")) == "4");
  REQUIRE_THROWS_AS(parse_rat("1/0"), ParseError);
  REQUIRE_THROWS_AS(parse_rat("x"), ParseError);

  // arithmetic round-trips exactly on random big rationals
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<long> num(-1000000000L, 1000000000L);
  std::uniform_int_distribution<long> den(1, 1000000000L);
  for (int i = 0; i < 500; ++i) {
    Rat a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    REQUIRE((a + b) - b == a);
    REQUIRE(b == 0 || (a * b) / b == a);
  }

  // primitive vectors
  IntVec v(3);
  v << 4, -6, 10;
  IntVec p = primitive(v);
  REQUIRE(p[0] == 2 && p[1] == -3 && p[2] == 5);
  REQUIRE_THROWS_AS(primitive(IntVec(IntVec::Zero(2))), DomainError);

  RatVec pv = parse_rat_vector("1/2,-3/2");
  REQUIRE(pv.size() == 2 && pv[0] == Rat(1, 2) && pv[1] == Rat(-3, 2));

  return test_done("test_numeric");
}
