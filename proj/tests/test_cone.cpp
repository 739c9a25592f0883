#include "arcflow/cone.hpp"

#include "test_util.hpp"

#include <random>

using namespace arcflow;

namespace {

IntVec iv(std::initializer_list<long> vals) {
  IntVec v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (long x : vals) v[i++] = x;
  return v;
}

bool has_ray(const std::vector<IntVec>& rays, const IntVec& r) {
  for (const IntVec& x : rays)
    if (lex_eq(x, r)) return true;
  return false;
}

}  // namespace

int main() {
  // the braid example's B: extreme rays are (-1,1) and (1,1)
  {
    Cone c = make_cone(2, {iv({-1, 1}), iv({0, 1}), iv({1, 1}), iv({-2, 2}), iv({2, 2})});
    auto rays = extreme_rays(c);
    REQUIRE(rays.size() == 2);
    REQUIRE(has_ray(rays, iv({-1, 1})));
    REQUIRE(has_ray(rays, iv({1, 1})));
  }
  // primitivization of a single ray
  {
    Cone c = make_cone(2, {iv({3, 6})});
    auto rays = extreme_rays(c);
    REQUIRE(rays.size() == 1);
    REQUIRE(has_ray(rays, iv({1, 2})));
  }
  // interior generator discarded
  {
    Cone c = make_cone(2, {iv({1, 0}), iv({0, 1}), iv({1, 1})});
    auto rays = extreme_rays(c);
    REQUIRE(rays.size() == 2);
    REQUIRE(has_ray(rays, iv({1, 0})));
    REQUIRE(has_ray(rays, iv({0, 1})));
  }
  REQUIRE_THROWS_AS(make_cone(2, {}), DomainError);
  REQUIRE_THROWS_AS(make_cone(5, {iv({1, 0, 0, 0, 0})}), DomainError);

  // dual of cone{(-1,1),(1,1)} is cone{(-1,1),(1,1)} under the standard pairing
  {
    Cone c = make_cone(2, {iv({-1, 1}), iv({1, 1})});
    Cone d = dual_cone(c);
    REQUIRE(d.rays.size() == 2);
    REQUIRE(has_ray(d.rays, iv({-1, 1})));
    REQUIRE(has_ray(d.rays, iv({1, 1})));
  }
  // orthant is self-dual
  {
    Cone c = make_cone(2, {iv({1, 0}), iv({0, 1})});
    Cone d = dual_cone(c);
    REQUIRE(d.rays.size() == 2);
    REQUIRE(has_ray(d.rays, iv({1, 0})));
    REQUIRE(has_ray(d.rays, iv({0, 1})));
  }
  // dual of a half-plane is a single ray
  {
    Cone c = make_cone(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})});
    Cone d = dual_cone(c);
    REQUIRE(d.rays.size() == 1);
    REQUIRE(has_ray(d.rays, iv({0, 1})));
    REQUIRE(!cone_is_pointed(c));
    REQUIRE(cone_is_pointed(d));
  }

  // membership
  {
    Cone c = make_cone(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
    RatVec x(3);
    x << Rat(1), Rat(2), Rat(3);
    REQUIRE(cone_contains(c, x));
    REQUIRE(cone_contains_interior(c, x));
    x << Rat(1), Rat(0), Rat(3);
    REQUIRE(cone_contains(c, x));
    REQUIRE(!cone_contains_interior(c, x));
    x << Rat(-1), Rat(0), Rat(3);
    REQUIRE(!cone_contains(c, x));
  }

  // double dual has the same extreme rays, pointed full-dimensional cones
  std::mt19937_64 rng(20240814);
  std::uniform_int_distribution<int> dim(2, 3), entry(-5, 5), count(2, 6);
  int tested = 0;
  while (tested < 100) {
    int n = dim(rng), m = count(rng);
    std::vector<IntVec> gens;
    for (int i = 0; i < m; ++i) {
      IntVec g(n);
      bool zero = true;
      for (int j = 0; j < n; ++j) {
        g[j] = entry(rng);
        if (g[j] != 0) zero = false;
      }
      if (!zero) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Cone c = make_cone(n, gens);
    if (!cone_is_pointed(c) || cone_dim(c) != n) continue;
    ++tested;
    Cone dd = dual_cone(dual_cone(c));
    REQUIRE(dd.rays.size() == c.rays.size());
    for (const IntVec& r : c.rays) REQUIRE(has_ray(dd.rays, r));
    // every generator is a nonnegative combination of the rays
    for (const IntVec& g : gens) REQUIRE(cone_contains(c, to_rat(g)));
    // rays sorted canonically
    for (size_t i = 0; i + 1 < c.rays.size(); ++i)
      REQUIRE(lex_less(c.rays[i], c.rays[i + 1]));
  }

  return test_done("test_cone");
}
