#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace dgmzv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent vector of a monomial; its length is the arity of the owning polynomial.
using Exponent = std::vector<std::uint32_t>;

unsigned total_degree(const Exponent& e);

/// Graded lexicographic order, largest monomial first.
///
/// Monomials of higher total degree come first; ties are broken by comparing
/// exponents of x_1, x_2, ... in turn, larger exponent first. Every iteration
/// over polynomial terms, every serialization and every matrix column order
/// in the library uses this order.
struct GrLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Sparse multivariate polynomial over Q in a fixed number of variables.
///
/// Zero coefficients are never stored. Variables are 0-based internally;
/// for reduced depth-r polynomials variable i stands for x_{i+1}, for
/// lifted ones it stands for y_i.
class Poly {
 public:
  using TermMap = std::map<Exponent, Rational, GrLexGreater>;

  explicit Poly(std::size_t arity = 0) : arity_(arity) {}

  static Poly constant(std::size_t arity, const Rational& c);
  /// The variable with 0-based index `index`.
  static Poly variable(std::size_t arity, std::size_t index);
  static Poly monomial(Exponent e, const Rational& c = 1);
  /// Sum over (coefficient, variable index) pairs, e.g. y_1 - y_0.
  static Poly linear(std::size_t arity, std::span<const std::pair<long, std::size_t>> parts);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const Exponent& e) const;
  /// Adds c to the coefficient of e; erases the term if it becomes zero.
  /// c must be canonical (mpq_class(a, b) is not reduced until canonicalize()).
  void add_term(const Exponent& e, const Rational& c);
  void add_term(Exponent&& e, const Rational& c);

  /// Largest total degree occurring; nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  /// True for zero and for polynomials whose monomials share one total degree.
  bool is_homogeneous() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  Poly pow(unsigned n) const;

  /// Moves variable i to variable targets[i] of a polynomial with arity
  /// `new_arity`; repeated targets multiply.
  Poly relabel(std::span<const std::size_t> targets, std::size_t new_arity) const;

  /// Simultaneous substitution of images[i] for variable i.
  Poly substitute(std::span<const Poly> images) const;

  /// Substitution x_j -> x_j + s x_k (j != k), expanded binomially; much
  /// cheaper than substitute() for the linear changes of variables used on
  /// lifts.
  Poly shear(std::size_t j, std::size_t k, long s) const;

  /// Partial derivative with respect to variable `var`.
  Poly derivative(std::size_t var) const;

  /// Keeps only terms for which `keep(exponent)` holds.
  template <class Pred>
  Poly filter(Pred keep) const {
    Poly out(arity_);
    for (const auto& [e, c] : terms_)
      if (keep(e)) out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
  }

 private:
  std::size_t arity_;
  TermMap terms_;
};

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

/// One line per term, "e1,e2,...,ek : p/q", in graded-lex order.
std::string serialize(const Poly& p);
Poly parse_poly(std::string_view text, std::size_t arity);

/// Human-readable form such as "x1^2*x2 - 3*x3", variables named prefix+index.
std::string to_pretty(const Poly& p, std::string_view prefix = "x", unsigned first_index = 1);

/// All exponent vectors of the given arity and total degree, graded-lex order.
std::vector<Exponent> monomials_of_degree(std::size_t arity, unsigned degree);

}  // namespace dgmzv
