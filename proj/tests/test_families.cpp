#include <catch2/catch_amalgamated.hpp>
#include <array>
#include <vector>

#include "qtcatalan/families.hpp"

using namespace qtcatalan;

namespace {

bivariate_polynomial build(std::vector<std::array<int, 3>> triples) {
  bivariate_polynomial p;
  for (const auto& [qe, te, c] : triples) p.add_term(qe, te, c);
  return p;
}

}  // namespace

TEST_CASE("small polynomial tables", "[families]") {
  const bivariate_polynomial one = bivariate_polynomial::constant(1);
  CHECK(family_polynomial(poly_family::c_dinv, 1) == one);
  CHECK(family_polynomial(poly_family::f, 1) == one);
  CHECK(family_polynomial(poly_family::g, 1) == one);

  const bivariate_polynomial qt = build({{1, 0, 1}, {0, 1, 1}});
  CHECK(family_polynomial(poly_family::c_dinv, 2) == qt);
  CHECK(family_polynomial(poly_family::f, 2) == qt);
  CHECK(family_polynomial(poly_family::g, 2) == qt);

  const bivariate_polynomial c3 = build({{3, 0, 1}, {2, 1, 1}, {1, 2, 1}, {0, 3, 1}, {1, 1, 1}});
  CHECK(family_polynomial(poly_family::c_dinv, 3) == c3);
  CHECK(family_polynomial(poly_family::f, 3) == c3);
  CHECK(family_polynomial(poly_family::g, 3) ==
        build({{2, 2, 1}, {3, 0, 1}, {0, 3, 1}, {1, 1, 2}}));

  CHECK(family_polynomial(poly_family::c_dinv, 4) ==
        build({{6, 0, 1}, {5, 1, 1}, {4, 2, 1}, {3, 3, 1}, {2, 4, 1}, {1, 5, 1}, {0, 6, 1},
               {4, 1, 1}, {3, 2, 1}, {2, 3, 1}, {1, 4, 1}, {3, 1, 1}, {2, 2, 1}, {1, 3, 1}}));
  CHECK(family_polynomial(poly_family::f, 4) ==
        build({{6, 0, 1}, {5, 1, 1}, {4, 2, 1}, {3, 3, 2}, {2, 4, 1}, {1, 5, 1}, {0, 6, 1},
               {4, 1, 1}, {1, 4, 1}, {3, 1, 1}, {2, 2, 2}, {1, 3, 1}}));
  CHECK(family_polynomial(poly_family::g, 4) ==
        build({{5, 2, 1}, {4, 3, 1}, {3, 4, 1}, {2, 5, 1}, {6, 0, 1}, {4, 2, 1}, {2, 4, 1},
               {0, 6, 1}, {3, 1, 2}, {1, 3, 2}, {2, 1, 1}, {1, 2, 1}}));
}

TEST_CASE("family edge cases and caps", "[families]") {
  CHECK(family_polynomial(poly_family::c_dinv, 0) == bivariate_polynomial::constant(1));
  CHECK(family_polynomial(poly_family::f, 0) == bivariate_polynomial::constant(1));
  CHECK_THROWS_AS(family_polynomial(poly_family::tutte, 0), error);
  CHECK_THROWS_MATCHES(family_polynomial(poly_family::f, 15), error,
                       Catch::Matchers::Predicate<error>(
                           [](const error& e) { return e.code() == errc::unsupported_size; }));

  CHECK(family_polynomial(poly_family::tutte, 2) == build({{2, 1, 1}, {1, 2, 1}}));
  CHECK(parse_family("C_depth_ddinv") == poly_family::c_depth_ddinv);
  CHECK_FALSE(parse_family("nope").has_value());
}

TEST_CASE("bounce and depth gradings agree with dinv", "[families]") {
  for (int n = 1; n <= 8; ++n) {
    const auto c = family_polynomial(poly_family::c_dinv, n);
    CHECK(family_polynomial(poly_family::c_bounce, n) == c);
    CHECK(family_polynomial(poly_family::c_depth_ddinv, n) == c);
  }
}

TEST_CASE("recursion matches enumeration", "[families]") {
  CHECK(f_recursive(0) == bivariate_polynomial::constant(1));
  CHECK(f_recursive(1) == bivariate_polynomial::constant(1));
  CHECK(f_recursive(2) == build({{1, 0, 1}, {0, 1, 1}}));
  for (int n = 0; n <= 8; ++n) {
    CHECK(f_recursive(n) == family_polynomial(poly_family::f, n));
  }
}

TEST_CASE("evaluation at (1,1) gives Catalan numbers", "[families]") {
  CHECK(family_polynomial(poly_family::f, 4).evaluate(1, 1) == 14);
  for (int n = 1; n <= 8; ++n) {
    const bigint cn = catalan_number(n);
    CHECK(family_polynomial(poly_family::c_dinv, n).evaluate(1, 1) == cn);
    CHECK(family_polynomial(poly_family::f, n).evaluate(1, 1) == cn);
    CHECK(family_polynomial(poly_family::g, n).evaluate(1, 1) == cn);
  }
}

TEST_CASE("difference quotient values", "[families]") {
  CHECK(m_polynomial(3).is_zero());
  // the difference first deviates at n = 4, where it is -q^2*t^2 (1-q)(1-t)
  CHECK(m_polynomial(4) == build({{2, 2, -1}}));
  const std::vector<long long> expected{0, 0, 0, -1, -14, -124};
  for (int n = 1; n <= 6; ++n) {
    CHECK(m_polynomial(n).evaluate(1, 1) == expected[static_cast<std::size_t>(n) - 1]);
  }
  CHECK(family_polynomial(poly_family::m, 4).evaluate(1, 1) == -1);
  CHECK_THROWS_AS(m_polynomial(0), error);
}

TEST_CASE("symmetry reporting", "[families]") {
  CHECK(symmetry_report(build({{1, 0, 1}, {0, 1, 1}})).symmetric);
  const auto rep = symmetry_report(bivariate_polynomial::term(2, 1));
  REQUIRE_FALSE(rep.symmetric);
  CHECK(rep.witness->q_exp == 2);
  CHECK(rep.witness->t_exp == 1);

  for (int n = 1; n <= 8; ++n) {
    CHECK(symmetry_report(family_polynomial(poly_family::f, n)).symmetric);
    CHECK(symmetry_report(family_polynomial(poly_family::g, n)).symmetric);
    CHECK(symmetry_report(family_polynomial(poly_family::tutte, n)).symmetric);
  }
}

TEST_CASE("rise-return coefficients depend only on the exponent sum", "[families]") {
  for (int n = 1; n <= 7; ++n) CHECK(stump_check(n));
}

TEST_CASE("worker count does not change the result", "[families]") {
  for (poly_family fam : {poly_family::f, poly_family::g}) {
    const auto serial = family_polynomial(fam, 8, 1);
    CHECK(family_polynomial(fam, 8, 2) == serial);
    CHECK(family_polynomial(fam, 8, 5) == serial);
  }
}
