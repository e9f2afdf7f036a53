#include "dgmzv/odd_mzv.hpp"

#include <numeric>
#include <stdexcept>

#include "dgmzv/matrix.hpp"

namespace dgmzv {

std::vector<Composition> compositions(std::size_t N, std::size_t r) {
  std::vector<Composition> out;
  if (r == 0) {
    if (N == 0) out.emplace_back();
    return out;
  }
  Composition cur;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t slots) -> void {
    if (slots == 1) {
      cur.push_back(static_cast<unsigned>(remaining));
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (std::size_t part = 1; part + (slots - 1) <= remaining; ++part) {
      cur.push_back(static_cast<unsigned>(part));
      self(self, remaining - part, slots - 1);
      cur.pop_back();
    }
  };
  if (N >= r) rec(rec, N, r);
  return out;
}

namespace {

void check_parts(const Composition& m) {
  if (m.empty()) throw std::invalid_argument("composition must be nonempty");
  for (auto x : m)
    if (x == 0) throw std::invalid_argument("composition parts must be >= 1");
}

Exponent doubled(const Composition& n) {
  Exponent e;
  for (auto x : n) e.push_back(2 * x);
  return e;
}

void check_shapes(const Composition& m, const Composition& n) {
  check_parts(m);
  check_parts(n);
  if (m.size() != n.size() || std::accumulate(m.begin(), m.end(), 0u) != std::accumulate(n.begin(), n.end(), 0u))
    throw std::invalid_argument("c_coefficient: compositions differ in length or sum");
}

Integer integral(const Rational& q) {
  if (q.get_den() != 1) throw std::logic_error("c_coefficient: non-integral coefficient");
  return q.get_num();
}

}  // namespace

DepthPoly nested_odd_element(const Composition& m) {
  check_parts(m);
  DepthPoly g = DepthPoly::unit();
  for (auto it = m.rbegin(); it != m.rend(); ++it) g = depth1_action(*it, g);
  return g;
}

DepthPoly nested_odd_element_by_compose(const Composition& m) {
  check_parts(m);
  DepthPoly g = DepthPoly::generator(m.back());
  for (auto it = m.rbegin() + 1; it != m.rend(); ++it) g = poly_compose(DepthPoly::generator(*it), g);
  return g;
}

Integer c_coefficient(const Composition& m, const Composition& n) {
  check_shapes(m, n);
  return integral(nested_odd_element(m).body().coefficient(doubled(n)));
}

Integer c_coefficient_by_compose(const Composition& m, const Composition& n) {
  check_shapes(m, n);
  return integral(nested_odd_element_by_compose(m).body().coefficient(doubled(n)));
}

OddMatrix odd_matrix(std::size_t N, std::size_t r) {
  if (r < 1 || N < r) throw std::invalid_argument("odd_matrix: need N >= r >= 1");
  OddMatrix out;
  out.N = N;
  out.r = r;
  out.index = compositions(N, r);
  // nested elements share suffixes
  std::map<Composition, DepthPoly> memo;
  auto nested = [&](auto&& self, const Composition& m) -> const DepthPoly& {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    DepthPoly inner = m.size() == 1 ? DepthPoly::unit() : self(self, Composition(m.begin() + 1, m.end()));
    return memo.emplace(m, depth1_action(m.front(), inner)).first->second;
  };
  for (const auto& m : out.index) {
    const DepthPoly& g = nested(nested, m);
    std::vector<Integer> row;
    for (const auto& n : out.index) row.push_back(integral(g.body().coefficient(doubled(n))));
    out.entries.push_back(std::move(row));
  }
  return out;
}

std::size_t odd_rank(std::size_t N, std::size_t r) {
  const auto m = odd_matrix(N, r);
  return rank(m.entries, m.index.size());
}

std::map<std::pair<std::size_t, std::size_t>, std::size_t> odd_rank_table(std::size_t max_weight,
                                                                          std::size_t max_depth) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (std::size_t r = 1; r <= max_depth; ++r)
    for (std::size_t N = r; 2 * N + r <= max_weight; ++N) out[{2 * N + r, r}] = odd_rank(N, r);
  return out;
}

}  // namespace dgmzv
