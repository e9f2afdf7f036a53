#include "dgmzv/ihara.hpp"

#include <numeric>
#include <stdexcept>

#include "dgmzv/words.hpp"

namespace dgmzv {

DepthPoly::DepthPoly(std::size_t depth, std::size_t weight, Poly body)
    : depth_(depth), weight_(weight), body_(std::move(body)) {
  if (body_.arity() != depth_) throw std::invalid_argument("DepthPoly: body arity must equal depth");
  if (weight_ < depth_) throw std::invalid_argument("DepthPoly: weight below depth");
  const unsigned deg = static_cast<unsigned>(weight_ - depth_);
  for (const auto& [e, c] : body_.terms())
    if (total_degree(e) != deg) throw std::invalid_argument("DepthPoly: body not of degree weight - depth");
}

DepthPoly DepthPoly::unit() { return DepthPoly(0, 0, Poly::constant(0, 1)); }

DepthPoly DepthPoly::generator(unsigned n) {
  return DepthPoly(1, 2 * n + 1, Poly::monomial(Exponent{2 * n}));
}

DepthPoly DepthPoly::zero(std::size_t depth, std::size_t weight) {
  return DepthPoly(depth, weight, Poly(depth));
}

Poly DepthPoly::lift() const { return translate_lift(body_); }

DepthPoly& DepthPoly::operator+=(const DepthPoly& o) {
  if (o.depth_ != depth_ || o.weight_ != weight_) throw std::invalid_argument("DepthPoly: bidegree mismatch");
  body_ += o.body_;
  return *this;
}

DepthPoly& DepthPoly::operator-=(const DepthPoly& o) {
  if (o.depth_ != depth_ || o.weight_ != weight_) throw std::invalid_argument("DepthPoly: bidegree mismatch");
  body_ -= o.body_;
  return *this;
}

namespace {

Poly signed_by_degree(const Poly& f, unsigned offset) {
  Poly out(f.arity());
  for (const auto& [e, c] : f.terms()) out.add_term(e, ((total_degree(e) + offset) % 2) ? -c : c);
  return out;
}

// The composition formula; with `drop_y0` every factor is restricted to
// y0 = 0 before multiplying, which yields the reduction of the full result.
Poly compose_impl(const Poly& f, const Poly& g, bool drop_y0) {
  if (f.arity() == 0 || g.arity() == 0) throw std::invalid_argument("compose: lifted arity must be >= 1");
  const std::size_t r = f.arity() - 1, s = g.arity() - 1, n = r + s + 1;
  auto restrict = [&](Poly p) {
    if (!drop_y0) return p;
    return p.filter([](const Exponent& e) { return e[0] == 0; });
  };
  const Poly f_signed = signed_by_degree(f, static_cast<unsigned>(r));
  Poly out(n);
  std::vector<std::size_t> tf(r + 1), tg(s + 1);
  for (std::size_t i = 0; i <= s; ++i) {
    for (std::size_t j = 0; j <= r; ++j) tf[j] = i + j;
    for (std::size_t k = 0; k <= s; ++k) tg[k] = k <= i ? k : k + r;
    out += restrict(f.relabel(tf, n)) * restrict(g.relabel(tg, n));
  }
  for (std::size_t i = 1; i <= s; ++i) {
    for (std::size_t j = 0; j <= r; ++j) tf[j] = i + r - j;
    for (std::size_t k = 0; k <= s; ++k) tg[k] = k < i ? k : k + r;
    out += restrict(f_signed.relabel(tf, n)) * restrict(g.relabel(tg, n));
  }
  return out;
}

}  // namespace

Poly compose_lifted(const Poly& f, const Poly& g) { return compose_impl(f, g, false); }

DepthPoly poly_compose(const DepthPoly& f, const DepthPoly& g) {
  // unit on the left: 1 o g is not g (it counts insertion slots), so keep the formula
  Poly lifted = compose_impl(f.lift(), g.lift(), true);
  return DepthPoly(f.depth() + g.depth(), f.weight() + g.weight(), reduce(lifted));
}

DepthPoly bracket(const DepthPoly& f, const DepthPoly& g) {
  return poly_compose(f, g) - poly_compose(g, f);
}

Poly bracket_lifted(const Poly& f, const Poly& g) { return compose_lifted(f, g) - compose_lifted(g, f); }

Poly dihedral(Dihedral op, const Poly& f) {
  if (f.arity() == 0) throw std::invalid_argument("dihedral: arity must be >= 1");
  const std::size_t r = f.arity() - 1;
  std::vector<std::size_t> t(r + 1);
  switch (op) {
    case Dihedral::sigma:
      for (std::size_t i = 0; i <= r; ++i) t[i] = r - i;
      return signed_by_degree(f.relabel(t, r + 1), static_cast<unsigned>(r));
    case Dihedral::tau: {
      t[0] = 0;
      for (std::size_t i = 1; i <= r; ++i) t[i] = r + 1 - i;
      Poly out = f.relabel(t, r + 1);
      if (r % 2) out *= Rational(-1);
      return out;
    }
    case Dihedral::cycle:
      t[0] = r;
      for (std::size_t i = 1; i <= r; ++i) t[i] = i - 1;
      return signed_by_degree(f.relabel(t, r + 1), 0);
  }
  throw std::invalid_argument("dihedral: unknown operation");
}

Poly dihedral_bracket(const Poly& f, const Poly& g) {
  if (f.arity() == 0 || g.arity() == 0) throw std::invalid_argument("dihedral_bracket: arity must be >= 1");
  const std::size_t r = f.arity() - 1, s = g.arity() - 1, n = r + s + 1;
  std::vector<std::size_t> tf(r + 1), tg(s + 1);
  std::iota(tf.begin(), tf.end(), 0);
  std::iota(tg.begin(), tg.end(), r);
  Poly term = f.relabel(tf, n) * g.relabel(tg, n);
  Poly out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out += term;
    out -= dihedral(Dihedral::sigma, term);
    term = dihedral(Dihedral::cycle, term);
  }
  if (!(term == f.relabel(tf, n) * g.relabel(tg, n)))
    throw std::logic_error("dihedral_bracket: rotation does not have the expected order");
  return out;
}

bool is_in_pbar(const DepthPoly& f) {
  const std::size_t r = f.depth();
  if (r == 0) throw std::invalid_argument("is_in_pbar: depth must be >= 1");
  const Poly& p = f.body();
  for (const auto& [e, c] : p.terms())
    if (total_degree(e) % 2) return false;
  const Rational sign = (r % 2) ? -1 : 1;

  std::vector<std::size_t> rev(r);
  for (std::size_t i = 0; i < r; ++i) rev[i] = r - 1 - i;
  if (!(p + sign * p.relabel(rev, r)).is_zero()) return false;

  // x_i -> x_{r-i} - x_r for i < r, x_r -> -x_r: reverse the first r-1
  // variables, flip the sign of x_r, then shear each x_i by -x_r
  std::vector<std::size_t> t(r);
  for (std::size_t i = 0; i + 1 < r; ++i) t[i] = r - 2 - i;
  t[r - 1] = r - 1;
  Poly q(r);
  const Poly reversed = p.relabel(t, r);
  for (const auto& [e, c] : reversed.terms()) q.add_term(e, e[r - 1] % 2 ? -c : c);
  for (std::size_t i = 0; i + 1 < r; ++i) q = q.shear(i, r - 1, -1);
  return (p + sign * q).is_zero();
}

DepthPoly depth1_action(unsigned n, const DepthPoly& g) {
  if (n == 0) throw std::invalid_argument("depth1_action: n must be >= 1");
  const std::size_t r = g.depth() + 1;
  Poly out(r);
  std::vector<std::size_t> t(r - 1);
  for (std::size_t i = 1; i <= r; ++i) {
    // factor (x_i - x_{i-1})^{2n} - (x_i - x_{i+1})^{2n}, with x_0 = 0
    std::vector<std::pair<long, std::size_t>> left = {{1, i - 1}};
    if (i > 1) left.push_back({-1, i - 2});
    Poly factor = Poly::linear(r, left).pow(2 * n);
    if (i < r) {
      const std::pair<long, std::size_t> right[] = {{1, i - 1}, {-1, i}};
      factor -= Poly::linear(r, right).pow(2 * n);
    }
    for (std::size_t k = 0; k + 1 < r; ++k) t[k] = k < i - 1 ? k : k + 1;
    Poly moved = g.body().arity() == 0 ? Poly::constant(r, g.body().coefficient(Exponent{}))
                                       : g.body().relabel(t, r);
    out += factor * moved;
  }
  return DepthPoly(r, g.weight() + 2 * n + 1, std::move(out));
}

}  // namespace dgmzv
