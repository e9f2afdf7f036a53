#include <doctest.h>

#include "dgmzv/exceptional.hpp"
#include "dgmzv/words.hpp"

using namespace dgmzv;

namespace {

Poly y(std::size_t i) { return Poly::variable(5, i); }

// sum over i of f1(y_{i+4} - y_{i+3}, y_{i+2} - y_{i+1}) + (y_i - y_{i+1}) f0(y_{i+2} - y_{i+3}, y_{i+4} - y_{i+3})
Poly cyclic_oracle(const PeriodPolynomial& f) {
  Poly out(5);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto v = [i](std::size_t k) { return y((i + k) % 5); };
    const Poly a[] = {v(4) - v(3), v(2) - v(1)};
    const Poly b[] = {v(2) - v(3), v(4) - v(3)};
    out += f.f1.substitute(a) + (v(0) - v(1)) * f.f0.substitute(b);
  }
  return out;
}

const ExceptionalElement& e12() {
  static const ExceptionalElement e = [] {
    const auto src = exceptional_sources(12, GeneratorChoice::paper);
    return build_exceptional(src.at(0).second, src.at(0).first);
  }();
  return e;
}

Poly relabel_to(const Poly& p, std::initializer_list<std::size_t> targets, std::size_t arity) {
  const std::vector<std::size_t> t(targets);
  return p.relabel(t, arity);
}

}  // namespace

TEST_CASE("weight 12: known coefficients and term count") {
  const auto& e = e12();
  CHECK(e.source_name == "f12");
  const Poly& b = e.reduced.body();
  CHECK(e.reduced.depth() == 4);
  CHECK(e.reduced.weight() == 12);
  CHECK(b.size() == 118);
  CHECK(b.coefficient({0, 0, 7, 1}) == 1);
  CHECK(b.coefficient({3, 2, 2, 1}) == -116);
  CHECK(b.coefficient({2, 5, 0, 1}) == -57);
  for (const auto& [x, c] : b.terms()) CHECK(c.get_den() == 1);
}

TEST_CASE("construction matches the five-term cyclic sum") {
  for (unsigned k : {12u, 16u, 18u})
    for (const auto& [name, f] : exceptional_sources(k, GeneratorChoice::paper)) {
      const auto e = build_exceptional(f, name);
      const Poly full = cyclic_oracle(f);
      CHECK(e.full == full);
      CHECK(e.reduced.body() == reduce(full));
      // full is invariant under y_i -> y_i + t
      Poly partials(5);
      for (std::size_t i = 0; i < 5; ++i) partials += full.derivative(i);
      CHECK(partials.is_zero());
      CHECK(e.reduced.lift() == full);
    }
  PeriodPolynomial zero;
  zero.two_n = 12;
  CHECK(build_exceptional(zero).reduced.is_zero());
}

TEST_CASE("relation to the solution space at weight 12, depth 4") {
  const auto space = solve(12, 4);
  REQUIRE(space.dimension() == 1);
  const std::vector<unsigned> ref{1, 1, 8, 2};
  CHECK(relative_coordinate({4, 3, 3, 2}, ref, space) == -116);
  CHECK(relative_coordinate({3, 6, 1, 2}, ref, space) == -57);
  CHECK(relative_coordinate(ref, ref, space) == 1);
  // the space is spanned by e12
  CHECK(span_of(12, 4, {e12().reduced}).basis.at(0) == space.basis.at(0));
  CHECK_THROWS_AS(express_in_basis({1, 1, 8}, space), std::invalid_argument);
  CHECK_THROWS_AS(express_in_basis({1, 1, 8, 3}, space), std::invalid_argument);
}

TEST_CASE("exceptional elements satisfy the double shuffle equations (weights 12..22)") {
  for (unsigned k = 12; k <= 22; k += 2)
    for (const auto& [name, f] : exceptional_sources(k, GeneratorChoice::canonical)) {
      INFO(name);
      const auto e = build_exceptional(f, name);
      CHECK_FALSE(e.reduced.is_zero());
      CHECK(membership_test(e.reduced));
      CHECK(is_in_pbar(e.reduced));
    }
  CHECK(exceptional_sources(14, GeneratorChoice::canonical).empty());
  CHECK(exceptional_sources(24, GeneratorChoice::paper).size() == 2);
}

TEST_CASE("projections") {
  Poly p(3);
  p.add_term({2, 1, 0}, 3);
  p.add_term({1, 1, 1}, 2);
  p.add_term({2, 2, 2}, -1);
  Poly c(3);
  c.add_term({0, 1, 0}, 3);
  c.add_term({0, 2, 2}, -1);
  CHECK(project(p, 0, Projection::coefficient, 2) == c);
  CHECK(project(p, 0, Projection::even_part).size() == 2);
  CHECK(project(p, 2, Projection::interior) == Poly::monomial({2, 2, 2}, -1));
  CHECK_THROWS_AS(project(p, 3, Projection::even_part), std::out_of_range);
  CHECK_FALSE(is_uneven(p));
  CHECK(is_uneven(Poly::monomial({2, 1})));
  CHECK(is_sparse(Poly::monomial({2, 0})));
  CHECK_FALSE(is_sparse(Poly::monomial({2, 1})));
}

TEST_CASE("uneven, sparse, interior and the value at x3 = x4 = 0") {
  for (unsigned k : {12u, 16u, 18u, 20u}) {
    const auto e = build_exceptional(exceptional_sources(k, GeneratorChoice::paper).at(0).second);
    INFO("weight " << k);
    CHECK(is_uneven(e.full));
    CHECK(is_sparse(e.full));
    // interior equals that of f1(x4 - x3, x2 - x1)
    const Poly x1 = Poly::variable(4, 0), x2 = Poly::variable(4, 1), x3 = Poly::variable(4, 2), x4 = Poly::variable(4, 3);
    const Poly images[] = {x4 - x3, x2 - x1};
    const Poly& b = e.reduced.body();
    CHECK(project(b, 0, Projection::interior) == project(e.source.f1.substitute(images), 0, Projection::interior));
    // e(x1, x2, 0, 0) = f1(x1, x2)
    CHECK(project(project(b, 2, Projection::coefficient, 0), 3, Projection::coefficient, 0) ==
          relabel_to(e.source.f1, {0, 1}, 4));
  }
}

TEST_CASE("uneven and sparse elements form ideals (brackets with e12)") {
  const DepthPoly& e = e12().reduced;
  const std::vector<DepthPoly> partners = {DepthPoly::generator(1), DepthPoly::generator(3), solve(8, 2).basis.at(0),
                                           solve(10, 2).basis.at(0)};
  for (const auto& g : partners) {
    const DepthPoly b = bracket(g, e);
    CHECK_FALSE(b.is_zero());
    CHECK(is_uneven(b.lift()));
    CHECK(is_sparse(b.lift()));
    CHECK(is_in_pbar(b));
    CHECK(membership_test(b));
  }
  // depth-1 brackets alone are neither
  const DepthPoly b = bracket(DepthPoly::generator(1), DepthPoly::generator(4));
  CHECK_FALSE(is_uneven(b.lift()));
}

TEST_CASE("e12 o e12: restriction to x4 = ... = x8 = 0 and the quadratic factorization") {
  const auto& e = e12();
  const Poly& b = e.reduced.body();
  const Poly comp = poly_compose(e.reduced, e.reduced).body();
  REQUIRE(comp.arity() == 8);

  Poly lhs = comp;
  for (std::size_t v = 3; v < 8; ++v) lhs = project(lhs, v, Projection::coefficient, 0);
  CHECK(lhs == relabel_to(e.source.f1, {0, 1}, 8) * relabel_to(e.source.f1, {1, 2}, 8));
  CHECK_FALSE(lhs.is_zero());

  Poly q = project(project(comp, 0, Projection::even_part), 4, Projection::even_part);
  for (std::size_t v = 5; v < 8; ++v) q = project(q, v, Projection::coefficient, 0);
  const Poly left = project(project(b, 0, Projection::even_part), 3, Projection::coefficient, 0);
  const Poly right = project(project(b, 2, Projection::even_part), 3, Projection::coefficient, 0);
  CHECK(q == relabel_to(left, {0, 1, 2, 3}, 8) * relabel_to(right, {2, 3, 4, 5}, 8));
  CHECK_FALSE(q.is_zero());
}
