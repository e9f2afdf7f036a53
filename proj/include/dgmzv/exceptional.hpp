#pragma once

#include <string>
#include <vector>

#include "dgmzv/double_shuffle.hpp"
#include "dgmzv/ihara.hpp"
#include "dgmzv/period_poly.hpp"

namespace dgmzv {

struct ExceptionalElement {
  PeriodPolynomial source;
  std::string source_name;
  Poly full{5};      ///< in y0..y4
  DepthPoly reduced; ///< depth 4, weight two_n
};

/// Five-fold cyclic sum over y_i -> y_{i+1 mod 5} of
///   f1(y4 - y3, y2 - y1) + (y0 - y1) f0(y2 - y3, y4 - y3),
/// then y0 = 0. A zero source gives the zero element.
ExceptionalElement build_exceptional(const PeriodPolynomial& f, std::string name = {});

enum class GeneratorChoice { paper, canonical };

/// Period polynomials feeding the exceptional elements at weight two_n:
/// the fixed integral generator where one exists (`paper` choice), otherwise, or
/// with `canonical`, the primitive integral forms of the cusp basis.
std::vector<std::pair<std::string, PeriodPolynomial>> exceptional_sources(unsigned two_n, GeneratorChoice choice);

enum class Projection { coefficient, even_part, interior };

/// coefficient: coefficient of x_var^k, as a polynomial of the same arity
///   with that exponent set to 0;
/// even_part: the terms whose exponent of x_var is even;
/// interior: the terms in which every exponent is >= 2 (var ignored).
Poly project(const Poly& p, std::size_t var, Projection mode, unsigned k = 0);

/// No monomial with all exponents even.
bool is_uneven(const Poly& p);
/// Annihilated by the derivative in every variable at once: no monomial
/// uses all variables.
bool is_sparse(const Poly& p);

/// Values of the functional "coefficient of x1^{n1-1} ... xr^{nr-1}" on
/// each basis element of the space.
RVector express_in_basis(const std::vector<unsigned>& n, const SolutionSpace& space);

/// For a one-dimensional space: coefficient at n divided by the one at ref.
Rational relative_coordinate(const std::vector<unsigned>& n, const std::vector<unsigned>& ref,
                             const SolutionSpace& space);

}  // namespace dgmzv
