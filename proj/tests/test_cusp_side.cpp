#include <doctest.h>

#include "lgm/cusp.hpp"
#include "lgm/error.hpp"

using namespace lgm;

TEST_SUITE("cusp_side") {

TEST_CASE("gamma prime") {
  CHECK(gabrielov_prime(parse_polynomial("x^2+y^3+z^4")).gamma_prime == Triple{2, 3, 4});
  for (Int l = 2; l <= 4; ++l)
    for (Int k = 2; k <= 4; ++k) {
      // x^l + x y + y z^k
      const Triple t = gabrielov_prime(make_polynomial({{l, 0, 0}, {1, 1, 0}, {0, 1, k}})).gamma_prime;
      CHECK(t == Triple{l, (k - 1) * l, 1});
    }
  for (Int k = 2; k <= 4; ++k) {
    // x^2 + y^2 + y z^k
    const Triple t = gabrielov_prime(make_polynomial({{2, 0, 0}, {0, 2, 0}, {0, 1, k}})).gamma_prime;
    CHECK(t == Triple{2, 2, 2 * (k - 1)});
  }
}

TEST_CASE("delta") {
  CHECK(delta({2, 3, 4}) == -2);
  CHECK(delta({2, 3, 6}) == 0);
  CHECK(delta({5, 5, 5}) == 50);
}

TEST_CASE("Gabrielov numbers") {
  const Polynomial e6 = parse_polynomial("x^2+y^3+z^4");
  const DiagonalGroup h = group_from_generators(e6, {parse_phase("(1/2,0,1/2)")});
  CHECK(gabrielov(Triple{2, 3, 4}, h).multiset == std::vector<Int>{2, 3, 3});
  for (Int k = 2; k <= 4; ++k) {
    const Polynomial f = make_polynomial({{2, 0, 0}, {0, 2, 0}, {0, 0, 2 * k}});
    const DiagonalGroup g =
        group_from_generators(f, {parse_phase("(1/2,1/2,0)"), PhaseVector({Rational(1, 2), 0, Rational(1, 2)})});
    const GabrielovData d = gabrielov(Triple{2, 2, 2 * k}, g);
    CHECK(d.multiset == std::vector<Int>{k, k});
  }
  const Polynomial e8 = parse_polynomial("x^2+y^3+z^6");
  const DiagonalGroup g3 = group_from_generators(e8, {parse_phase("(0,1/3,2/3)")});
  CHECK(gabrielov(Triple{2, 3, 6}, g3).multiset == std::vector<Int>{2, 2, 2, 2});
}

TEST_CASE("symmetry requirements") {
  const Polynomial e8 = parse_polynomial("x^2+y^3+z^6");
  // in SL, but y^2 is not invariant
  const DiagonalGroup bad = group_from_generators(e8, {parse_phase("(0,1/3,2/3)")});
  CHECK_THROWS_AS(gabrielov(Triple{2, 2, 4}, bad), Error);
  const DiagonalGroup not_sl = group_from_generators(e8, {parse_phase("(1/2,0,0)")});
  CHECK_THROWS_AS(gabrielov(Triple{2, 3, 6}, not_sl), Error);
}

TEST_CASE("characteristic polynomial and Milnor number") {
  for (const Triple& p : {Triple{2, 3, 4}, Triple{2, 3, 7}, Triple{3, 3, 4}}) {
    const DiagonalGroup one = trivial_group(make_polynomial({{p[0], 0, 0}, {0, p[1], 0}, {0, 0, p[2]}}).E);
    // (t-1)^2 prod (t^p - 1)/(t - 1)
    std::map<Int, Int> want{{1, -1}};
    for (Int x : p) ++want[x];
    std::erase_if(want, [](const auto& kv) { return kv.second == 0; });
    CHECK(cusp_char_poly(p, one) == CycloVector(want));
    CHECK(cusp_milnor(p, one) == p[0] + p[1] + p[2] - 1);
  }
  const Polynomial e8 = parse_polynomial("x^2+y^3+z^6");
  const DiagonalGroup g3 = group_from_generators(e8, {parse_phase("(0,1/3,2/3)")});
  CHECK(cusp_char_poly({2, 3, 6}, g3) == CycloVector(std::map<Int, Int>{{2, 4}, {1, -2}}));
  CHECK(cusp_milnor({2, 3, 6}, g3) == 6);
  const Polynomial p5 = parse_polynomial("x^5+y^5+z^5");
  const DiagonalGroup g5 = group_from_generators(p5, {parse_phase("1/5(1,3,1)")});
  CHECK(cusp_char_poly({5, 5, 5}, g5) == CycloVector(std::map<Int, Int>{{1, -2}}));
  CHECK(cusp_milnor({5, 5, 5}, g5) == -2);
  CHECK(gabrielov(Triple{5, 5, 5}, g5).j == 2);
}

}  // TEST_SUITE
