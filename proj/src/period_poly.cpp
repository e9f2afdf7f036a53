#include "dgmzv/period_poly.hpp"

#include <stdexcept>
#include <string>

#include "dgmzv/matrix.hpp"

namespace dgmzv {

namespace {

Poly lin(long a, long b) {
  const std::pair<long, std::size_t> parts[] = {{a, 0}, {b, 1}};
  return Poly::linear(2, parts);
}

Poly sub2(const Poly& p, const Poly& x, const Poly& y) {
  const Poly images[] = {x, y};
  return p.substitute(images);
}

Poly swap_xy(const Poly& p) { return sub2(p, lin(0, 1), lin(1, 0)); }

Poly three_term(const Poly& p) {
  // P(X,Y) + P(X-Y,X) + P(-Y,X-Y)
  return p + sub2(p, lin(1, -1), lin(1, 0)) + sub2(p, lin(0, -1), lin(1, -1));
}

std::vector<Exponent> columns_of(unsigned degree) { return monomials_of_degree(2, degree); }

void check(bool ok, unsigned two_n, const char* what) {
  if (!ok)
    throw std::domain_error("period polynomial of weight " + std::to_string(two_n) + ": " + what);
}

std::vector<Poly> period_space(unsigned two_n, bool cusp) {
  if (two_n < 4 || two_n % 2) throw std::invalid_argument("period polynomial weight must be even and >= 4");
  const unsigned deg = two_n - 2;
  const auto cols = columns_of(deg);
  std::vector<Poly> images_swap, images_sign, images_three;
  for (const auto& e : cols) {
    const Poly m = Poly::monomial(e);
    images_swap.push_back(m + swap_xy(m));
    images_sign.push_back(sub2(m, lin(-1, 0), lin(0, 1)) - m);
    images_three.push_back(three_term(m));
  }
  // one row per (condition, output monomial)
  std::vector<RVector> rows;
  for (const auto* images : {&images_swap, &images_sign, &images_three})
    for (const auto& out : cols) {
      RVector row(cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j) row[j] = (*images)[j].coefficient(out);
      rows.push_back(std::move(row));
    }
  if (cusp) {
    RVector row(cols.size());
    row[0] = 1;  // the coefficient of X^{2n-2} is P(1, 0)
    rows.push_back(std::move(row));
  }
  RMatrix m;
  for (const auto& row : rows) m.push_row(row);
  std::vector<Poly> out;
  for (const auto& v : nullspace(m)) {
    Poly p(2);
    for (std::size_t j = 0; j < cols.size(); ++j) p.add_term(cols[j], v[j]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

bool satisfies_period_relations(const Poly& P) {
  if (P.arity() != 2) return false;
  return (P + swap_xy(P)).is_zero() && (sub2(P, lin(-1, 0), lin(0, 1)) == P) && three_term(P).is_zero();
}

PeriodPolynomial make_period_polynomial(unsigned two_n, const Poly& P) {
  check(two_n >= 4 && two_n % 2 == 0, two_n, "weight must be even and >= 4");
  check(P.arity() == 2, two_n, "need two variables");
  check(!P.is_zero(), two_n, "zero polynomial");
  for (const auto& [e, c] : P.terms()) check(total_degree(e) == two_n - 2, two_n, "wrong degree");
  check(satisfies_period_relations(P), two_n, "period relations fail");
  check(sgn(P.coefficient(Exponent{two_n - 2, 0})) == 0, two_n, "does not vanish at (1,0)");
  for (const auto& [e, c] : P.terms()) check(e[1] > 0, two_n, "not divisible by Y");

  PeriodPolynomial out;
  out.two_n = two_n;
  out.P = P;
  const Poly xy_xmy = Poly::monomial(Exponent{1, 1}) * lin(1, -1);
  out.f0 = divide_exact(P, xy_xmy);  // throws std::domain_error if not divisible
  out.f1 = lin(1, -1) * out.f0;
  check(swap_xy(out.f0) == out.f0, two_n, "f0 not symmetric");
  const Poly f0_three = out.f0 + sub2(out.f0, lin(-1, 1), lin(-1, 0)) + sub2(out.f0, lin(0, -1), lin(1, -1));
  check(f0_three.is_zero(), two_n, "f0 three-term relation fails");
  check(sub2(out.f1, lin(-1, 0), lin(0, 1)) == -out.f1, two_n, "f1 not odd in x");
  return out;
}

std::vector<Poly> basis_W(unsigned two_n) { return period_space(two_n, false); }

std::vector<PeriodPolynomial> basis_S(unsigned two_n) {
  std::vector<PeriodPolynomial> out;
  for (const auto& p : period_space(two_n, true)) out.push_back(make_period_polynomial(two_n, p));
  return out;
}

Poly p_even(unsigned two_n) {
  if (two_n < 4 || two_n % 2) throw std::invalid_argument("p_even: weight must be even and >= 4");
  return Poly::monomial(Exponent{two_n - 2, 0}) - Poly::monomial(Exponent{0, two_n - 2});
}

Poly antisym_monomial(unsigned a, unsigned b) {
  return Poly::monomial(Exponent{a, b}) - Poly::monomial(Exponent{b, a});
}

const std::map<unsigned, Poly>& integral_generators() {
  static const std::map<unsigned, Poly> gens = [] {
    std::map<unsigned, Poly> g;
    g.emplace(12u, antisym_monomial(8, 2) - 3 * antisym_monomial(6, 4));
    g.emplace(16u, 2 * antisym_monomial(12, 2) - 7 * antisym_monomial(10, 4) + 11 * antisym_monomial(8, 6));
    g.emplace(18u, 8 * antisym_monomial(14, 2) - 25 * antisym_monomial(12, 4) + 26 * antisym_monomial(10, 6));
    g.emplace(20u, 3 * antisym_monomial(16, 2) - 10 * antisym_monomial(14, 4) + 14 * antisym_monomial(12, 6) -
                       13 * antisym_monomial(10, 8));
    return g;
  }();
  return gens;
}

Poly primitive_integral(const Poly& p) {
  if (p.is_zero()) return p;
  Integer den = 1, content = 0;
  for (const auto& [e, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [e, c] : p.terms()) {
    Rational s = c * den;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), s.get_num_mpz_t());
  }
  Rational scale(den, content);
  scale.canonicalize();
  if (sgn(p.terms().begin()->second) < 0) scale = -scale;
  return p * scale;
}

}  // namespace dgmzv
