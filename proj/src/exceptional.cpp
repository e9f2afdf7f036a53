#include "dgmzv/exceptional.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dgmzv/words.hpp"

namespace dgmzv {

namespace {

Poly diff(std::size_t i, std::size_t j) {
  const std::pair<long, std::size_t> parts[] = {{1, i}, {-1, j}};
  return Poly::linear(5, parts);
}

Poly eval2(const Poly& p, const Poly& x, const Poly& y) {
  const Poly images[] = {x, y};
  return p.substitute(images);
}

}  // namespace

ExceptionalElement build_exceptional(const PeriodPolynomial& f, std::string name) {
  ExceptionalElement out;
  out.source = f;
  out.source_name = std::move(name);
  const Poly seed = eval2(f.f1, diff(4, 3), diff(2, 1)) + diff(0, 1) * eval2(f.f0, diff(2, 3), diff(4, 3));
  Poly term = seed, full(5);
  const std::size_t rotate[] = {1, 2, 3, 4, 0};
  for (int k = 0; k < 5; ++k) {
    full += term;
    term = term.relabel(rotate, 5);
  }
  out.full = std::move(full);
  out.reduced = DepthPoly(4, f.two_n, reduce(out.full));
  return out;
}

std::vector<std::pair<std::string, PeriodPolynomial>> exceptional_sources(unsigned two_n, GeneratorChoice choice) {
  std::vector<std::pair<std::string, PeriodPolynomial>> out;
  const auto& gens = integral_generators();
  if (choice == GeneratorChoice::paper)
    if (auto it = gens.find(two_n); it != gens.end()) {
      out.emplace_back("f" + std::to_string(two_n), make_period_polynomial(two_n, it->second));
      return out;
    }
  const auto basis = basis_S(two_n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    out.emplace_back("S" + std::to_string(two_n) + "[" + std::to_string(i) + "]",
                     make_period_polynomial(two_n, primitive_integral(basis[i].P)));
  return out;
}

Poly project(const Poly& p, std::size_t var, Projection mode, unsigned k) {
  if (var >= p.arity()) throw std::out_of_range("project: variable index out of range");
  switch (mode) {
    case Projection::coefficient: {
      Poly out(p.arity());
      for (const auto& [e, c] : p.terms()) {
        if (e[var] != k) continue;
        Exponent f = e;
        f[var] = 0;
        out.add_term(std::move(f), c);
      }
      return out;
    }
    case Projection::even_part:
      return p.filter([var](const Exponent& e) { return e[var] % 2 == 0; });
    case Projection::interior:
      return p.filter([](const Exponent& e) { return std::all_of(e.begin(), e.end(), [](auto x) { return x >= 2; }); });
  }
  throw std::invalid_argument("project: unknown mode");
}

bool is_uneven(const Poly& p) {
  for (const auto& [e, c] : p.terms())
    if (std::all_of(e.begin(), e.end(), [](auto x) { return x % 2 == 0; })) return false;
  return true;
}

bool is_sparse(const Poly& p) {
  for (const auto& [e, c] : p.terms())
    if (std::all_of(e.begin(), e.end(), [](auto x) { return x > 0; })) return false;
  return true;
}

RVector express_in_basis(const std::vector<unsigned>& n, const SolutionSpace& space) {
  if (n.size() != space.depth) throw std::invalid_argument("express_in_basis: depth mismatch");
  if (std::accumulate(n.begin(), n.end(), std::size_t{0}) != space.weight)
    throw std::invalid_argument("express_in_basis: weight mismatch");
  Exponent e;
  for (auto x : n) {
    if (x == 0) throw std::invalid_argument("express_in_basis: entries must be >= 1");
    e.push_back(x - 1);
  }
  RVector out;
  for (const auto& b : space.basis) out.push_back(b.body().coefficient(e));
  return out;
}

Rational relative_coordinate(const std::vector<unsigned>& n, const std::vector<unsigned>& ref,
                             const SolutionSpace& space) {
  if (space.dimension() != 1) throw std::invalid_argument("relative_coordinate: space must be one-dimensional");
  const Rational a = express_in_basis(n, space).front(), b = express_in_basis(ref, space).front();
  if (sgn(b) == 0) throw std::domain_error("relative_coordinate: reference coefficient vanishes");
  return a / b;
}

}  // namespace dgmzv
