#include <doctest.h>

#include "lgm/curve.hpp"

using namespace lgm;

namespace {

// |G/G_0| = 2 inside G^fin of x^2+y^3+z^6
DiagonalGroup index_two(const Polynomial& f) { return parse_group_spec(f, "index:2"); }

}  // namespace

TEST_SUITE("curve_side") {

TEST_CASE("Dolgachev numbers of the maximal group") {
  CHECK(dolgachev_gfin(parse_polynomial("x^2+y^3+z^6")) == Triple{2, 3, 6});
  CHECK(dolgachev_gfin(parse_polynomial("x^2+x*y^3+y*z^5")) == Triple{5, 5, 5});
  CHECK(dolgachev_gfin(parse_polynomial("x^3*y+y^3*z+z^3*x")) == Triple{7, 7, 7});
}

TEST_CASE("Dolgachev numbers") {
  const Polynomial f = parse_polynomial("x^6*y+y^3+z^2");
  CHECK(dolgachev(f, g0_group(f.E)).multiset == std::vector<Int>{2, 2, 2, 3});
  for (const char* text : {"x^2+y^3+z^6", "x^2+x*y^3+y*z^5", "x^2*y+y^3*z+z^4*x"}) {
    const Polynomial g = parse_polynomial(text);
    std::vector<Int> a;
    for (Int x : dolgachev_gfin(g))
      if (x != 1) a.push_back(x);
    std::sort(a.begin(), a.end());
    CHECK(dolgachev(g, gfin(g)).multiset == a);
  }
  const Polynomial e8 = parse_polynomial("x^2+y^3+z^6");
  CHECK(dolgachev(e8, index_two(e8)).multiset == std::vector<Int>{2, 2, 2, 2});
}

TEST_CASE("orbit invariants") {
  CHECK(orbit_invariants({{2, 6, 9}, 18, 1}) == std::vector<Int>{2, 2, 2, 3});
  CHECK(orbit_invariants({{3, 1, 1}, 6, 1}).empty());
  CHECK(orbit_invariants({{6, 4, 3}, 12, 1}) == std::vector<Int>{2, 3, 3});
  CHECK_THROWS(orbit_invariants({{2, 2, 2}, 4, 1}));
}

TEST_CASE("count_m") {
  CHECK(count_m(2, 6, 18) == 4);
  CHECK(count_m(4, 6, 24) == 3);
  for (Int h = 0; h <= 10; ++h) CHECK(count_m(1, 1, h) == h + 1);
}

TEST_CASE("genus") {
  const Polynomial seidel = parse_polynomial("x^2+x*y^3+y*z^5");
  CHECK(genus(seidel, g0_group(seidel.E)) == 2);
  const Polynomial e8 = parse_polynomial("x^2+y^3+z^6");
  CHECK(genus(e8, g0_group(e8.E)) == 1);
  CHECK(genus(e8, gfin(e8)) == 0);
  CHECK(genus(seidel, gfin(seidel)) == 0);
}

TEST_CASE("genus oracle on Fermat sums") {
  const Polynomial cubic = parse_polynomial("x^3+y^3+z^3");
  CHECK(genus_bp_oracle(cubic, g0_group(cubic.E)) == 1);
  const Polynomial e8 = parse_polynomial("x^2+y^3+z^6");
  CHECK(genus_bp_oracle(e8, g0_group(e8.E)) == 1);
  const Polynomial e8a = parse_polynomial("x^2+y^3+z^5");
  CHECK(genus_bp_oracle(e8a, g0_group(e8a.E)) == 0);
  CHECK_THROWS(genus_bp_oracle(parse_polynomial("x^2+x*y^3+y*z^5"), g0_group(parse_polynomial("x^2+x*y^3+y*z^5").E)));
}

TEST_CASE("stringy Euler number") {
  const Polynomial e8 = parse_polynomial("x^2+y^3+z^6");
  CHECK(stringy_euler(e8, index_two(e8)) == 6);
  const Polynomial seidel = parse_polynomial("x^2+x*y^3+y*z^5");
  CHECK(stringy_euler(seidel, g0_group(seidel.E)) == -2);
  const Polynomial e6 = parse_polynomial("x^2+y^3+z^4");
  CHECK(stringy_euler(e6, g0_group(e6.E)) == 7);
  CHECK(orbifold_euler(0, {2, 3, 3}) == 7);
}

TEST_CASE("curve invariants bundle") {
  const Polynomial e6 = parse_polynomial("x^2+y^3+z^4");
  const CurveInvariants c = curve_invariants(e6, g0_group(e6.E));
  CHECK(c.genus == 0);
  CHECK(c.dolgachev == std::vector<Int>{2, 3, 3});
  CHECK(c.e_st == 7);
}

}  // TEST_SUITE
