#include <random>

#include "doctest.h"
#include "twistlink/poly.hpp"

using twistlink::LaurentBipoly;
using twistlink::poly_div_exact;
using twistlink::poly_eval_M;

namespace {

LaurentBipoly mono(int c, int a, int m = 0) { return LaurentBipoly::monomial(c, a, m); }
const LaurentBipoly delta = mono(-1, -2) + mono(-1, 2);

LaurentBipoly random_poly(std::mt19937& rng, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms), a(-6, 6), m(0, 2), c(-3, 3);
  LaurentBipoly p;
  for (int i = nterms(rng); i > 0; --i) p.add_term(a(rng), m(rng), c(rng));
  return p;
}

}  // namespace

TEST_CASE("multiplication") {
  CHECK(delta * mono(1, 0, 1) == mono(-1, -2, 1) + mono(-1, 2, 1));
  CHECK(delta * LaurentBipoly::constant(1) == delta);
  auto q = mono(1, -4) + mono(1, -6) + mono(-1, -10);
  CHECK(delta * q == mono(-1, -2) + mono(-1, -4) + mono(-1, -6) + mono(1, -12));
  CHECK(LaurentBipoly::loop_value() == delta);
}

TEST_CASE("exact division") {
  auto p = mono(-1, -2) + mono(-1, -4) + mono(-1, -6) + mono(1, -12);
  auto r = poly_div_exact(p, delta);
  REQUIRE(r);
  CHECK(*r == mono(1, -4) + mono(1, -6) + mono(-1, -10));
  CHECK(poly_div_exact(delta, delta) == LaurentBipoly::constant(1));
  CHECK_FALSE(poly_div_exact(mono(1, 0, 1), delta));
  CHECK_FALSE(poly_div_exact(mono(1, 0), mono(2, 0)));
  CHECK_THROWS_AS(poly_div_exact(delta, LaurentBipoly{}), std::domain_error);
}

TEST_CASE("substitution for M") {
  CHECK(poly_eval_M(mono(1, 0, 1), delta) == delta);
  auto onefoil = mono(1, -6) + mono(1, -2) + mono(-1, -2, 2);
  CHECK(poly_eval_M(onefoil, delta) == delta);
  CHECK(poly_eval_M(delta, delta) == delta);
}

TEST_CASE("display") {
  CHECK((mono(-1, -2, 1) + mono(1, 2)).to_string() == "-A^-2*M + A^2");
  CHECK(LaurentBipoly{}.to_string() == "0");
  CHECK(mono(3, 0).to_string() == "3");
  CHECK(mono(-2, 1, 1).to_string() == "-2*A*M");
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto p = random_poly(rng, 5), q = random_poly(rng, 5), r = random_poly(rng, 5);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    if (!q.is_zero()) CHECK(poly_div_exact(q * r, q) == r);
    CHECK(poly_eval_M(p * q, delta) == poly_eval_M(p, delta) * poly_eval_M(q, delta));
  }
}
