#pragma once

#include <cstddef>
#include <vector>

#include "dgmzv/ihara.hpp"
#include "dgmzv/matrix.hpp"

namespace dgmzv {

/// Basis of the weight-N depth-r solutions, reduced row echelon over the
/// graded-lex monomial columns with pivot coefficient 1.
struct SolutionSpace {
  std::size_t weight = 0;
  std::size_t depth = 0;
  std::vector<DepthPoly> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Monomials of degree N - r in r variables, graded-lex; the column order
/// of every constraint matrix.
std::vector<Exponent> constraint_columns(std::size_t N, std::size_t r);

/// Coefficient vector of p on the given columns; throws if p has a term
/// outside them.
RVector coordinates(const Poly& p, const std::vector<Exponent>& columns);
Poly from_coordinates(const RVector& v, const std::vector<Exponent>& columns);

/// Linearized double shuffle constraints on reduced depth-r polynomials of
/// degree N - r. For every split k = 1..r-1 and every output monomial:
///   sum over shuffles w of (1..k) and (k+1..r) of f(x_{w1}, ..., x_{wr}),
/// the same sums for f#(x1..xr) = f(x1, x1+x2, ..., x1+...+xr), and for
/// r = 1 the row killing x1^{N-1} when N is even or N = 1. Duplicate rows
/// are dropped. Throws std::invalid_argument unless N >= r >= 1.
IntMatrix assemble_constraints(std::size_t N, std::size_t r);

SolutionSpace solve(std::size_t N, std::size_t r);

/// Evaluates the constraint sums on f directly (by relabelling and
/// substitution, not via the matrix).
bool membership_test(const DepthPoly& f);

/// Independent construction from the word-level relations: unknowns are the
/// coefficients of all words of weight N and depth r; rows are the shuffles
/// of pairs of nonempty words, the Y-word shuffles on the image under alpha,
/// and the depth-1 condition. The solutions are projected onto words
/// beginning in e1, i.e. onto the reduced polynomial.
SolutionSpace solve_from_words(std::size_t N, std::size_t r);

/// Span of right-nested brackets {g1, {g2, ... {g_{r-1}, g_r}}} of depth-1
/// generators x1^{2a}, 2a+1 >= 3, of total weight N.
SolutionSpace iterated_bracket_span(std::size_t N, std::size_t r);

/// Row echelon basis of the span of the given elements (all of one bidegree).
SolutionSpace span_of(std::size_t N, std::size_t r, const std::vector<DepthPoly>& elements);

}  // namespace dgmzv
