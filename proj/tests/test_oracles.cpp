// Compares against values frozen by tools/oracle.py, which computes them by
// unrelated routes (Cramer's rule, the Milnor-Orlik divisor product, monomial
// counts for the genus and root counts on coordinate planes for the orbits).
#include <doctest.h>

#include "lgm/mirror.hpp"

#include <fstream>

using namespace lgm;

TEST_SUITE("oracles") {

TEST_CASE("frozen oracle values") {
  std::ifstream in(LGM_TEST_DATA "/oracle_values.json");
  REQUIRE(in.good());
  const nlohmann::json rows = nlohmann::json::parse(in);
  REQUIRE(rows.size() > 2000);
  for (const auto& row : rows) {
    const std::string text = row.at("polynomial").get<std::string>();
    CAPTURE(text);
    const Polynomial f = parse_polynomial(text);
    const WeightSystem w = canonical_weights(f), r = reduced_weights(f);
    std::vector<Int> ww = w.w, rr = r.w;
    ww.push_back(w.d);
    rr.push_back(r.d);
    CHECK(ww == row.at("weights").get<std::vector<Int>>());
    CHECK(rr == row.at("reduced").get<std::vector<Int>>());
    CHECK(cf(f) == row.at("cf").get<Int>());
    CHECK(char_poly_qh(f).cyclo == cyclo_from_json(row.at("char_poly")));
    CHECK(milnor_number_qh(f) == row.at("milnor").get<Int>());
    const DiagonalGroup G0 = g0_group(f.E);
    CHECK(genus(f, G0) == row.at("genus").get<Int>());
    const auto orbits = row.at("orbits").get<std::vector<Int>>();
    CHECK(orbit_invariants(r) == orbits);
    CHECK(dolgachev(f, G0).multiset == orbits);
    CHECK(stringy_euler(f, G0) == row.at("e_st").get<Int>());
  }
}

}  // TEST_SUITE
