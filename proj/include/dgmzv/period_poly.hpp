#pragma once

#include <map>
#include <vector>

#include "dgmzv/poly.hpp"

namespace dgmzv {

/// Even period polynomial of weight 2n vanishing at (1, 0), with
/// P = X Y (X - Y) f0 and f1 = (X - Y) f0. Polynomials are in two variables
/// (X, Y) = (x1, x2).
struct PeriodPolynomial {
  unsigned two_n = 0;
  Poly P{2}, f0{2}, f1{2};
};

/// Validates every invariant and fills in f0 and f1. Throws
/// std::domain_error if P is not a cusp period polynomial of weight two_n.
PeriodPolynomial make_period_polynomial(unsigned two_n, const Poly& P);

/// Homogeneous P of degree 2n-2 with P(X,Y) + P(Y,X) = 0, P(-X,Y) = P and
/// P(X,Y) + P(X-Y,X) + P(-Y,X-Y) = 0; reduced echelon basis.
std::vector<Poly> basis_W(unsigned two_n);

/// The subspace of W vanishing at (1, 0), each element with f0 and f1.
std::vector<PeriodPolynomial> basis_S(unsigned two_n);

/// X^{2n-2} - Y^{2n-2}
Poly p_even(unsigned two_n);

bool satisfies_period_relations(const Poly& P);

/// Fixed integral generators of S at weights 12, 16, 18, 20.
const std::map<unsigned, Poly>& integral_generators();

/// x1^a x2^b - x1^b x2^a
Poly antisym_monomial(unsigned a, unsigned b);

/// Clears denominators, divides by the content, makes the leading
/// (graded-lex first) coefficient positive.
Poly primitive_integral(const Poly& p);

}  // namespace dgmzv
