#include <catch2/catch_amalgamated.hpp>

#include "qtcatalan/polynomial.hpp"

using namespace qtcatalan;

namespace {

bivariate_polynomial q_plus_t() {
  bivariate_polynomial p;
  p.add_term(1, 0, 1);
  p.add_term(0, 1, 1);
  return p;
}

}  // namespace

TEST_CASE("ring operations", "[polynomial]") {
  const bivariate_polynomial p = q_plus_t();
  CHECK(p.swap_qt() == p);

  const bivariate_polynomial sq = p * p;
  CHECK(sq.coefficient(2, 0) == 1);
  CHECK(sq.coefficient(1, 1) == 2);
  CHECK(sq.coefficient(0, 2) == 1);
  CHECK(sq.term_count() == 3);

  CHECK((p - p).is_zero());
  CHECK(p.evaluate(3, 5) == 8);
  CHECK(sq.evaluate(3, 5) == 64);

  bivariate_polynomial asym;
  asym.add_term(2, 1, 1);
  CHECK(asym.swap_qt().coefficient(1, 2) == 1);
  CHECK(asym.swap_qt() != asym);
}

TEST_CASE("cancellation removes stored terms", "[polynomial]") {
  bivariate_polynomial p;
  p.add_term(4, 2, 7);
  p.add_term(4, 2, -7);
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
  p.add_term(1, 1, 0);
  CHECK(p.is_zero());
}

TEST_CASE("rendering uses graded order with descending q", "[polynomial]") {
  CHECK(bivariate_polynomial{}.to_string() == "0");
  CHECK(q_plus_t().to_string() == "q + t");
  CHECK((q_plus_t() * q_plus_t()).to_string() == "q^2 + 2*q*t + t^2");

  bivariate_polynomial c3;
  for (auto [qe, te] : {std::pair{3, 0}, {2, 1}, {1, 2}, {0, 3}, {1, 1}}) c3.add_term(qe, te, 1);
  CHECK(c3.to_string() == "q^3 + q^2*t + q*t^2 + t^3 + q*t");

  bivariate_polynomial neg;
  neg.add_term(0, 0, -2);
  neg.add_term(1, 0, 1);
  CHECK(neg.to_string() == "q - 2");
}

TEST_CASE("exact division by 1-q and 1-t", "[polynomial]") {
  bivariate_polynomial one_minus_q;
  one_minus_q.add_term(0, 0, 1);
  one_minus_q.add_term(1, 0, -1);
  bivariate_polynomial one_minus_t;
  one_minus_t.add_term(0, 0, 1);
  one_minus_t.add_term(0, 1, -1);

  const bivariate_polynomial p = q_plus_t() * q_plus_t() + bivariate_polynomial::term(3, 4, 5);
  const bivariate_polynomial product = p * one_minus_q * one_minus_t;

  auto step1 = divide_exact_by_one_minus(product, poly_variable::q);
  REQUIRE(step1.has_value());
  auto step2 = divide_exact_by_one_minus(*step1, poly_variable::t);
  REQUIRE(step2.has_value());
  CHECK(*step2 == p);

  CHECK_FALSE(divide_exact_by_one_minus(bivariate_polynomial::term(1, 0), poly_variable::q)
                  .has_value());
  CHECK(divide_exact_by_one_minus(bivariate_polynomial{}, poly_variable::q)->is_zero());
}
