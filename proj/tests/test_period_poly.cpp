#include <doctest.h>

#include "dgmzv/double_shuffle.hpp"
#include "dgmzv/period_poly.hpp"

using namespace dgmzv;

namespace {

Poly X() { return Poly::variable(2, 0); }
Poly Y() { return Poly::variable(2, 1); }

// [x1^a, x2^b] written out term by term
Poly commutator(unsigned a, unsigned b) {
  Poly p(2);
  p.add_term({a, b}, 1);
  p.add_term({b, a}, -1);
  return p;
}

// coefficient of s^k in s^12 / ((1 - s^4)(1 - s^6)): solutions of 4a + 6b = k - 12
std::size_t cusp_count(unsigned k) {
  if (k < 12) return 0;
  std::size_t n = 0;
  for (unsigned b = 0; 6 * b <= k - 12; ++b)
    if ((k - 12 - 6 * b) % 4 == 0) ++n;
  return n;
}

bool in_span(const Poly& p, const std::vector<PeriodPolynomial>& basis) {
  const auto cols = monomials_of_degree(2, basis.at(0).two_n - 2);
  RMatrix m;
  for (const auto& b : basis) m.push_row(coordinates(b.P, cols));
  const std::size_t r = rank(m);
  m.push_row(coordinates(p, cols));
  return rank(m) == r;
}

}  // namespace

TEST_CASE("dimensions of W and S at small weights") {
  CHECK(basis_W(4).size() == 1);
  CHECK(basis_S(4).empty());
  CHECK(basis_W(12).size() == 2);
  const std::pair<unsigned, std::size_t> expected[] = {{12, 1}, {16, 1}, {18, 1}, {20, 1}, {22, 1}, {24, 2}};
  for (auto [k, d] : expected) CHECK(basis_S(k).size() == d);
  CHECK(basis_S(14).empty());
  CHECK_THROWS_AS(basis_W(7), std::invalid_argument);
}

TEST_CASE("S follows the cusp form series, W = S + 1, through weight 30") {
  for (unsigned k = 4; k <= 30; k += 2) {
    INFO("weight " << k);
    const auto s = basis_S(k);
    CHECK(s.size() == cusp_count(k));
    CHECK(basis_W(k).size() == s.size() + 1);
    for (const auto& w : basis_W(k)) CHECK(satisfies_period_relations(w));
  }
}

TEST_CASE("weight 12: s12, f0 and f1") {
  const Poly s12 = X().pow(2) * Y().pow(2) * (X() - Y()).pow(3) * (X() + Y()).pow(3);
  const auto s = basis_S(12);
  REQUIRE(s.size() == 1);
  CHECK(in_span(s12, s));
  const PeriodPolynomial f = make_period_polynomial(12, s12);
  CHECK(f.f0 == X() * Y() * (X() - Y()).pow(2) * (X() + Y()).pow(3));
  CHECK(f.f1 == X() * Y() * (X() - Y()).pow(3) * (X() + Y()).pow(3));
  // f0(X,Y) + f0(Y-X,-X) + f0(-Y,X-Y) = 0
  const Poly a[] = {Y() - X(), -X()}, b[] = {-Y(), X() - Y()};
  CHECK((f.f0 + f.f0.substitute(a) + f.f0.substitute(b)).is_zero());
}

TEST_CASE("p_even is an (Eisenstein) period polynomial") {
  for (unsigned k = 4; k <= 20; k += 2) {
    CHECK(satisfies_period_relations(p_even(k)));
    CHECK_THROWS_AS(make_period_polynomial(k, p_even(k)), std::domain_error);
  }
}

TEST_CASE("integral generators have the expected expansions and lie in S") {
  const auto& g = integral_generators();
  REQUIRE(g.size() == 4);
  CHECK(g.at(12) == commutator(8, 2) - 3 * commutator(6, 4));
  CHECK(g.at(16) == 2 * commutator(12, 2) - 7 * commutator(10, 4) + 11 * commutator(8, 6));
  CHECK(g.at(18) == 8 * commutator(14, 2) - 25 * commutator(12, 4) + 26 * commutator(10, 6));
  CHECK(g.at(20) == 3 * commutator(16, 2) - 10 * commutator(14, 4) + 14 * commutator(12, 6) - 13 * commutator(10, 8));
  for (const auto& [k, p] : g) {
    INFO("weight " << k);
    CHECK(satisfies_period_relations(p));
    CHECK(in_span(p, basis_S(k)));
    CHECK(primitive_integral(p) == p);
  }
  CHECK(antisym_monomial(8, 2) == commutator(8, 2));
}

TEST_CASE("relations among depth-1 brackets are the cusp period polynomials") {
  // kernel of lambda -> sum lambda_ij {x^{2i}, x^{2j}}, i < j, read as
  // sum lambda_ij (X^{2i} Y^{2j} - X^{2j} Y^{2i})
  for (unsigned k = 12; k <= 20; k += 2) {
    INFO("weight " << k);
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned i = 1; i < k / 2 - 1 - i; ++i) pairs.emplace_back(i, k / 2 - 1 - i);
    const auto cols = constraint_columns(k, 2);
    RMatrix m(cols.size(), pairs.size());
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const RVector v = coordinates(
          bracket(DepthPoly::generator(pairs[j].first), DepthPoly::generator(pairs[j].second)).body(), cols);
      for (std::size_t i = 0; i < cols.size(); ++i) m.at(i, j) = v[i];
    }
    const auto kernel = nullspace(m);
    const auto s = basis_S(k);
    CHECK(kernel.size() == s.size());
    for (const auto& lambda : kernel) {
      Poly p(2);
      for (std::size_t j = 0; j < pairs.size(); ++j)
        p += lambda[j] * antisym_monomial(2 * pairs[j].first, 2 * pairs[j].second);
      CHECK(in_span(p, s));
    }
  }
}

TEST_CASE("invalid period polynomials are rejected") {
  CHECK_THROWS_AS(make_period_polynomial(12, commutator(8, 2)), std::domain_error);
  CHECK_THROWS_AS(make_period_polynomial(12, Poly(2)), std::domain_error);
  CHECK_THROWS_AS(make_period_polynomial(14, integral_generators().at(12)), std::domain_error);
  CHECK_THROWS_AS(make_period_polynomial(12, Poly::monomial({10})), std::domain_error);
  CHECK_THROWS_AS(make_period_polynomial(13, integral_generators().at(12)), std::domain_error);
  // canonical forms are primitive with positive leading coefficient
  for (const auto& p : basis_S(24)) {
    const Poly q = primitive_integral(p.P);
    CHECK(sgn(q.terms().begin()->second) > 0);
    for (const auto& [e, c] : q.terms()) CHECK(c.get_den() == 1);
  }
}
