#include <doctest.h>

#include "lgm/error.hpp"
#include "lgm/polynomial.hpp"

using namespace lgm;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("ip_core") {

TEST_CASE("parse exponent matrices") {
  CHECK(parse_polynomial("x^2+x*y^3+y*z^5").E == Matrix{{2, 0, 0}, {1, 3, 0}, {0, 1, 5}});
  CHECK(parse_polynomial("x^2+y^3+z^4").E == Matrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 4}});
  CHECK(parse_polynomial("x^2 + x y^3 + y z^5") == parse_polynomial("x^2+x*y^3+y*z^5"));
  // rows follow the owning variable, not the order of the terms
  CHECK(parse_polynomial("z^4+y^3+x^2").E == Matrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 4}});
  CHECK(parse_polynomial("x1^2+x2^3+x3^5+x4^7").n == 4);
}

TEST_CASE("parse rejections") {
  CHECK(code_of([] { parse_polynomial("x^2+y^2", 3); }) == ErrorCode::NotSquare);
  CHECK(code_of([] { parse_polynomial("x^2+y^"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_polynomial("x^2+w^3"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("coefficients are kept but do not enter E") {
  const Polynomial f = parse_polynomial("2x^2+y^3-3z^5");
  CHECK(f.coeffs == std::vector<Int>{2, 1, -3});
  CHECK_FALSE(f.unit_coefficients());
  CHECK(f.E == parse_polynomial("x^2+y^3+z^5").E);
}

TEST_CASE("transpose") {
  // Type II: x^p1 + y^p2 + y z^(p3/p2)  ->  x^p1 + y^p2 z + z^(p3/p2)
  const Polynomial f = parse_polynomial("x^2+y^3+y*z^4");
  CHECK(transpose(f).E == Matrix{{2, 0, 0}, {0, 3, 1}, {0, 0, 4}});
  const Polynomial fermat = parse_polynomial("x^2+y^3+z^7");
  CHECK(transpose(fermat) == fermat);
  // Type V: x^q1 y + y^q2 z + z^q3 x  ->  z x^q1 + x y^q2 + y z^q3
  const Polynomial loop = parse_polynomial("x^2*y+y^3*z+z^4*x");
  CHECK(transpose(loop).E == Matrix{{2, 0, 1}, {1, 3, 0}, {0, 1, 4}});
  CHECK(transpose(transpose(loop)) == loop);
}

TEST_CASE("atomic decomposition") {
  using K = AtomKind;
  CHECK(decompose_atoms(parse_polynomial("x^2+y^3+z^6")) ==
        std::vector<AtomicPart>{{K::Fermat, {0}, {2}}, {K::Fermat, {1}, {3}}, {K::Fermat, {2}, {6}}});
  CHECK(decompose_atoms(parse_polynomial("x^2+x*y^3+y*z^5")) ==
        std::vector<AtomicPart>{{K::Chain, {0, 1, 2}, {2, 3, 5}}});
  CHECK(decompose_atoms(parse_polynomial("x^3*y+y^3*z+z^3*x")) ==
        std::vector<AtomicPart>{{K::Loop, {0, 1, 2}, {3, 3, 3}}});
}

TEST_CASE("classification") {
  CHECK(classify3(parse_polynomial("x^2+y^3+z^6")).tag == Type3::I);
  CHECK(classify3(parse_polynomial("x^2+y^3+z^6")).params == std::array<Int, 3>{2, 3, 6});
  for (Int k = 1; k <= 4; ++k) {
    // x^2 + z y^2 + y z^(k+1)
    const TypeTag3 t = classify3(make_polynomial({{2, 0, 0}, {0, 2, 1}, {0, 1, k + 1}}));
    CHECK(t.tag == Type3::III);
    CHECK(t.params == std::array<Int, 3>{2, 1, k});
  }
  for (Int l = 2; l <= 4; ++l)
    for (Int k = 2; k <= 4; ++k) {
      // x^l + x y + y z^k
      const TypeTag3 t = classify3(make_polynomial({{l, 0, 0}, {1, 1, 0}, {0, 1, k}}));
      CHECK(t.tag == Type3::IV);
      CHECK(t.params == std::array<Int, 3>{l, l, l * k});
    }
  CHECK(classify3(parse_polynomial("x^3*y+y^3*z+z^3*x")).tag == Type3::V);
  CHECK(classify3(parse_polynomial("x^2+y^3+y*z^4")).tag == Type3::II);
}

TEST_CASE("weights") {
  CHECK(canonical_weights(parse_polynomial("x^2+x*y^3+y*z^5")) == WeightSystem{{15, 5, 5}, 30, 5});
  const WeightSystem red = reduced_weights(parse_polynomial("x^2+x*y^3+y*z^5"));
  CHECK(red.w == std::vector<Int>{3, 1, 1});
  CHECK(red.d == 6);
  for (Int p = 2; p <= 6; ++p)
    CHECK(canonical_weights(make_polynomial({{p, 0, 0}, {0, p, 0}, {0, 0, p}})).w ==
          std::vector<Int>{p * p, p * p, p * p});
  CHECK(canonical_weights(parse_polynomial("x^3*y+y^3*z+z^3*x")) == WeightSystem{{7, 7, 7}, 28, 7});
  CHECK(cf(parse_polynomial("x^2+y^3+z^4")) == 2);
  CHECK(cf(parse_polynomial("x^2+y^3+z^5")) == 1);
  // transpose of the chain above
  CHECK(canonical_weights(transpose(parse_polynomial("x^2+x*y^3+y*z^5"))).w == std::vector<Int>{11, 8, 6});
}

TEST_CASE("validation") {
  CHECK(validate_invertible(parse_polynomial("x^2+y^3+z^6")).ok);
  CHECK_FALSE(validate_invertible(Matrix{{2, 0, 0}, {0, 2, 0}, {1, 1, 1}}).ok);
  // a two-cycle loop x^2 y + y^2 x is admissible
  CHECK(validate_invertible(Matrix{{2, 1, 0}, {1, 2, 0}, {0, 0, 2}}).ok);
  CHECK(code_of([] { make_polynomial({{1, 1, 1}, {2, 0, 0}, {0, 2, 0}}); }) == ErrorCode::NotInvertible);
}

TEST_CASE("exact linear algebra") {
  const Matrix E{{2, 0, 0}, {1, 3, 0}, {0, 1, 5}};
  CHECK(determinant(E) == 30);
  const auto inv = inverse(E);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational s = 0;
      for (int k = 0; k < 3; ++k) s += inv[i][k] * E[k][j];
      CHECK(s == Rational(i == j ? 1 : 0));
    }
}

}  // TEST_SUITE
