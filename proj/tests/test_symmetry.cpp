#include <doctest.h>

#include "lgm/symmetry.hpp"

using namespace lgm;

namespace {

PhaseVector pv(std::vector<Rational> p) { return PhaseVector(std::move(p)); }
Rational r(Int a, Int b) { return Rational(a, b); }

}  // namespace

TEST_SUITE("symmetry") {

TEST_CASE("phase vectors") {
  CHECK(parse_phase("1/5(1,3,1)") == pv({r(1, 5), r(3, 5), r(1, 5)}));
  CHECK(parse_phase("(1/2,1/2,0)") == pv({r(1, 2), r(1, 2), 0}));
  CHECK(format_phase_compact(pv({r(1, 7), r(2, 7), r(4, 7)})) == "1/7(1,2,4)");
  CHECK(pv({r(6, 5), r(-2, 5), 1}) == pv({r(1, 5), r(3, 5), 0}));
  CHECK(pv({r(1, 6), r(1, 3), 0}).order() == 6);
}

TEST_CASE("maximal group") {
  CHECK(gfin(parse_polynomial("x^2+y^3+z^4")).order() == 24);
  const DiagonalGroup loop = gfin(parse_polynomial("x^3*y+y^3*z+z^3*x"));
  CHECK(loop.order() == 28);
  CHECK(loop.structure() == std::vector<Int>{28});
  for (const auto& g : loop.elements()) CHECK(is_symmetry(loop.context(), g));
}

TEST_CASE("exponential grading") {
  CHECK(g0(parse_polynomial("x^2+y^3+z^6")) == pv({r(1, 2), r(1, 3), r(1, 6)}));
  CHECK(g0(parse_polynomial("x^2+x*y^3+y*z^5")) == pv({r(1, 2), r(1, 6), r(1, 6)}));
}

TEST_CASE("generated groups") {
  const Polynomial ft = parse_polynomial("x^2*y+y^3*z+z^5");
  CHECK(group_from_generators(ft, {}).order() == 1);
  CHECK(group_from_generators(ft, {parse_phase("1/5(1,3,1)")}).order() == 5);
  for (Int k = 1; k <= 4; ++k) {
    const Polynomial f = make_polynomial({{2, 0, 0}, {0, 2, 0}, {0, 0, 2 * k}});
    const DiagonalGroup G = group_from_generators(f, {pv({r(1, 2), r(1, 2), 0}), pv({r(1, 2), 0, r(k, 2 * k)})});
    CHECK(G.order() == 4);
    CHECK(G.structure() == std::vector<Int>{2, 2});
  }
  CHECK_THROWS(group_from_generators(ft, {parse_phase("(1/3,0,0)")}));
}

TEST_CASE("dual groups") {
  const Polynomial seidel = parse_polynomial("x^2+x*y^3+y*z^5");
  const DiagonalGroup d = dual_group(seidel, g0_group(seidel.E));
  CHECK(d == group_from_generators(transpose(seidel), {parse_phase("1/5(1,3,1)")}));
  CHECK(dual_group(seidel, gfin(seidel)).order() == 1);
  const Polynomial loop = parse_polynomial("x^3*y+y^3*z+z^3*x");
  CHECK(dual_group(loop, g0_group(loop.E)) == group_from_generators(transpose(loop), {parse_phase("1/7(1,2,4)")}));
  // (G^T)^T = G and |G| |G^T| = |det E| on every intermediate group
  for (const char* text : {"x^2+y^3+z^6", "x^2+x*y^3+y*z^5", "x^2*y+y^2*z+z^4*x", "x^4+y^4+z^2"}) {
    const Polynomial f = parse_polynomial(text);
    for (const auto& G : intermediate_subgroups(f)) {
      const DiagonalGroup GT = dual_group(f, G);
      CHECK(G.order() * GT.order() == std::abs(determinant(f.E)));
      CHECK(dual_group(transpose(f), GT) == G);
    }
  }
}

TEST_CASE("age") {
  CHECK(age_and_fix(parse_phase("1/5(1,3,1)")) == AgeReport{1, 0, {}});
  CHECK(age_and_fix(PhaseVector::identity(3)) == AgeReport{0, 3, {0, 1, 2}});
  CHECK(age_and_fix(parse_phase("1/5(3,4,3)")) == AgeReport{2, 0, {}});
  CHECK(age_and_fix(parse_phase("(1/2,0,1/2)")) == AgeReport{1, 1, {1}});
}

TEST_CASE("junior elements") {
  const Polynomial ft = parse_polynomial("x^2*y+y^3*z+z^5");
  CHECK(junior_count(group_from_generators(ft, {parse_phase("1/5(1,3,1)")})) == 2);
  CHECK(junior_count(trivial_group(ft.E)) == 0);
  const Polynomial lt = transpose(parse_polynomial("x^3*y+y^3*z+z^3*x"));
  CHECK(junior_count(group_from_generators(lt, {parse_phase("1/7(1,2,4)")})) == 3);
}

TEST_CASE("coordinate stabilizers") {
  const Polynomial f = parse_polynomial("x^2+y^3+z^4");
  const DiagonalGroup G = group_from_generators(f, {parse_phase("(1/2,0,1/2)")});
  // indices are zero based: coordinate 1 is y
  CHECK(subgroup_fixing_coordinate(G, 1) == G);
  CHECK(subgroup_fixing_coordinate(G, 0).order() == 1);
  CHECK(subgroup_fixing_coordinate(G, 2).order() == 1);
  CHECK(subgroup_fixing_coordinate(trivial_group(f.E), 2).order() == 1);
}

TEST_CASE("special linear") {
  CHECK(in_sl(parse_phase("(1/2,0,1/2)")));
  CHECK_FALSE(in_sl(g0(parse_polynomial("x^2+y^3+z^5"))));
}

TEST_CASE("intermediate subgroups") {
  const Polynomial f = parse_polynomial("x^2+y^3+z^6");
  const auto groups = intermediate_subgroups(f);
  // G^fin / G_0 is cyclic of order c_f = 6
  REQUIRE(groups.size() == 4);
  std::vector<Int> orders;
  for (const auto& G : groups) orders.push_back(G.order());
  CHECK(orders == std::vector<Int>{6, 12, 18, 36});
  CHECK(groups.front() == g0_group(f.E));
  CHECK(groups.back() == gfin(f));
}

TEST_CASE("group specs") {
  const Polynomial f = parse_polynomial("x^2+y^3+z^6");
  CHECK(parse_group_spec(f, "G0") == g0_group(f.E));
  CHECK(parse_group_spec(f, "Gfin") == gfin(f));
  CHECK(parse_group_spec(f, "trivial").order() == 1);
  // index:k is the intermediate group with |G/G_0| = k
  CHECK(parse_group_spec(f, "index:3").order() == 18);
  CHECK(parse_group_spec(f, "G0+(0,0,1/2)").order() == 12);
  // (1/2,0,1/2) = 3 g0 adds nothing
  CHECK(parse_group_spec(f, "G0+(1/2,0,1/2)").order() == 6);
  CHECK(parse_group_spec(f, "1/6(3,2,1);(0,1/3,0)").order() == 18);
  CHECK_THROWS(parse_group_spec(f, "1/5(1,1,1)"));
  CHECK_THROWS(parse_group_spec(f, "G1"));
}

}  // TEST_SUITE
