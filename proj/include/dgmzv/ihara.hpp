#pragma once

#include <cstddef>

#include "dgmzv/poly.hpp"

namespace dgmzv {

/// Reduced representative in x1..xr of a depth-r, weight-N element; the body
/// is homogeneous of degree N - r.
class DepthPoly {
 public:
  DepthPoly() : body_(0) {}
  /// Throws std::invalid_argument if body has the wrong arity or degree.
  DepthPoly(std::size_t depth, std::size_t weight, Poly body);

  /// Depth 0, weight 0, body 1: the composition unit.
  static DepthPoly unit();
  /// x1^{2n}, depth 1, weight 2n+1.
  static DepthPoly generator(unsigned n);
  static DepthPoly zero(std::size_t depth, std::size_t weight);

  std::size_t depth() const { return depth_; }
  std::size_t weight() const { return weight_; }
  const Poly& body() const { return body_; }
  bool is_zero() const { return body_.is_zero(); }

  /// body(y1 - y0, ..., yr - y0)
  Poly lift() const;

  DepthPoly& operator+=(const DepthPoly& o);
  DepthPoly& operator-=(const DepthPoly& o);
  friend DepthPoly operator+(DepthPoly a, const DepthPoly& b) { return a += b; }
  friend DepthPoly operator-(DepthPoly a, const DepthPoly& b) { return a -= b; }
  friend DepthPoly operator*(const Rational& c, DepthPoly a) {
    a.body_ *= c;
    return a;
  }
  friend bool operator==(const DepthPoly& a, const DepthPoly& b) {
    return a.depth_ == b.depth_ && a.weight_ == b.weight_ && a.body_ == b.body_;
  }

 private:
  std::size_t depth_ = 0, weight_ = 0;
  Poly body_;
};

/// The two-sum composition formula on polynomials in y0..yr and y0..ys;
/// the result has arity r+s+1. The sign (-1)^{deg f + r} uses the degree of
/// each term of f.
Poly compose_lifted(const Poly& f, const Poly& g);

/// Composition of reduced representatives (computed on lifts, then y0 = 0).
DepthPoly poly_compose(const DepthPoly& f, const DepthPoly& g);

/// {f, g} = f o g - g o f
DepthPoly bracket(const DepthPoly& f, const DepthPoly& g);
Poly bracket_lifted(const Poly& f, const Poly& g);

enum class Dihedral { sigma, tau, cycle };

/// On f in y0..yr:
///   sigma: (-1)^{deg + r} f(yr, ..., y0)
///   tau:   (-1)^r f(y0, yr, ..., y1)
///   cycle: (-1)^{deg} f(yr, y0, ..., y_{r-1})   (= sigma after tau)
Poly dihedral(Dihedral op, const Poly& f);

/// Signed sum over the dihedral group of order 2(r+s+1) applied to
/// f(y0..yr) g(yr..y_{r+s}): rotations count +1, reflections -1.
Poly dihedral_bracket(const Poly& f, const Poly& g);

/// Evenness, reversal antisymmetry and the three-term translation condition
/// on reduced depth-r polynomials (r >= 1).
bool is_in_pbar(const DepthPoly& f);

/// x1^{2n} o g via the explicit sum over the slot i that receives x1^{2n}
/// (x0 = 0, the i = r second term dropped). g has depth r-1.
DepthPoly depth1_action(unsigned n, const DepthPoly& g);

}  // namespace dgmzv
