#include "dgmzv/double_shuffle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "dgmzv/words.hpp"

namespace dgmzv {

namespace {

void check_bidegree(std::size_t N, std::size_t r) {
  if (r < 1 || N < r) throw std::invalid_argument("need weight >= depth >= 1");
}

/// Shuffles of (0..k-1) and (k..r-1), as 0-based target positions.
std::vector<std::vector<std::size_t>> position_shuffles(std::size_t k, std::size_t r) {
  YWord left, right;
  for (std::size_t i = 1; i <= k; ++i) left.push_back(static_cast<std::uint32_t>(i));
  for (std::size_t i = k + 1; i <= r; ++i) right.push_back(static_cast<std::uint32_t>(i));
  std::vector<std::vector<std::size_t>> out;
  const auto sh = shuffle(left, right);
  for (const auto& [w, c] : sh.terms()) out.emplace_back(w.begin(), w.end());
  for (auto& w : out)
    for (auto& x : w) --x;
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("constraint entry overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("constraint entry overflow");
  return out;
}

std::int64_t binomial(std::uint32_t n, std::uint32_t k) {
  std::int64_t b = 1;
  for (std::uint32_t i = 1; i <= k; ++i) b = checked_mul(b, n - k + i) / i;
  return b;
}

/// Terms of prod_i (x_1 + ... + x_i)^{a_i}. Variable x_j occurs only in the
/// factors i >= j, so peeling variables from the last one down gives the
/// coefficient as a product of binomials.
void sharp_terms(const Exponent& a, std::vector<std::pair<Exponent, std::int64_t>>& out) {
  out.clear();
  const std::size_t r = a.size();
  Exponent b(r, 0);
  auto rec = [&](auto&& self, std::size_t j, std::uint32_t carry, std::int64_t coeff) -> void {
    const std::uint32_t avail = a[j] + carry;
    if (j == 0) {
      b[0] = avail;
      out.emplace_back(b, coeff);
      return;
    }
    for (std::uint32_t t = 0; t <= avail; ++t) {
      b[j] = t;
      self(self, j - 1, avail - t, checked_mul(coeff, binomial(avail, t)));
    }
  };
  rec(rec, r - 1, 0, 1);
}

// Packs an exponent vector (entries < 256, arity <= 8) into one key.
std::uint64_t pack(const Exponent& e) {
  std::uint64_t key = 0;
  for (auto x : e) key = (key << 8) | x;
  return key;
}

IntMatrix::Row merged(std::vector<IntMatrix::Entry>& entries) {
  std::sort(entries.begin(), entries.end());
  IntMatrix::Row row;
  for (const auto& [c, v] : entries) {
    if (!row.empty() && row.back().first == c) row.back().second = checked_add(row.back().second, v);
    else row.emplace_back(c, v);
  }
  std::erase_if(row, [](const IntMatrix::Entry& e) { return e.second == 0; });
  return row;
}

// f(x1, x1+x2, ..., x1+...+xr), as x_j -> x_j + x_{j-1} for j = r-1, ..., 1
Poly sharp(const Poly& f) {
  Poly out = f;
  for (std::size_t j = f.arity(); j-- > 1;) out = out.shear(j, j - 1, 1);
  return out;
}

}  // namespace

std::vector<Exponent> constraint_columns(std::size_t N, std::size_t r) {
  check_bidegree(N, r);
  return monomials_of_degree(r, static_cast<unsigned>(N - r));
}

RVector coordinates(const Poly& p, const std::vector<Exponent>& columns) {
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < columns.size(); ++i) index.emplace(columns[i], i);
  RVector v(columns.size());
  for (const auto& [e, c] : p.terms()) {
    auto it = index.find(e);
    if (it == index.end()) throw std::invalid_argument("coordinates: monomial outside the column set");
    v[it->second] = c;
  }
  return v;
}

Poly from_coordinates(const RVector& v, const std::vector<Exponent>& columns) {
  if (v.size() != columns.size()) throw std::invalid_argument("from_coordinates: length mismatch");
  Poly p(columns.empty() ? 0 : columns.front().size());
  for (std::size_t i = 0; i < v.size(); ++i) p.add_term(columns[i], v[i]);
  return p;
}

IntMatrix assemble_constraints(std::size_t N, std::size_t r) {
  const auto columns = constraint_columns(N, r);
  IntMatrix m(columns.size());
  if (r == 1) {
    if (N % 2 == 0 || N == 1) m.push_row({{0, 1}});
    return m;
  }
  if (r > 8 || N - r > 255) throw std::invalid_argument("assemble_constraints: bidegree too large");
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  for (std::size_t i = 0; i < columns.size(); ++i) index.emplace(pack(columns[i]), static_cast<std::uint32_t>(i));

  // sharp_of[e] = list of (a, coefficient of x^e in the sharp of x^a)
  std::vector<std::vector<IntMatrix::Entry>> sharp_of(columns.size());
  std::vector<std::pair<Exponent, std::int64_t>> terms;
  for (std::size_t col = 0; col < columns.size(); ++col) {
    sharp_terms(columns[col], terms);
    for (const auto& [e, c] : terms) sharp_of[index.at(pack(e))].emplace_back(static_cast<std::uint32_t>(col), c);
  }

  std::set<IntMatrix::Row> rows;
  std::vector<IntMatrix::Entry> plain, twisted;
  Exponent a(r);
  for (std::size_t k = 1; k < r; ++k) {
    const auto shuffles = position_shuffles(k, r);
    // output monomial b of sum_w f(x_{w1}, ..., x_{wr}) collects a = (b_{w1}, ..., b_{wr})
    for (const auto& b : columns) {
      plain.clear();
      twisted.clear();
      for (const auto& w : shuffles) {
        for (std::size_t j = 0; j < r; ++j) a[j] = b[w[j]];
        const std::uint32_t col = index.at(pack(a));
        plain.emplace_back(col, 1);
        twisted.insert(twisted.end(), sharp_of[col].begin(), sharp_of[col].end());
      }
      for (auto* entries : {&plain, &twisted}) {
        auto row = merged(*entries);
        if (!row.empty()) rows.insert(std::move(row));
      }
    }
  }
  for (const auto& row : rows) m.push_row(row);
  return m;
}

SolutionSpace solve(std::size_t N, std::size_t r) {
  const auto columns = constraint_columns(N, r);
  const auto cert = certified_nullspace(assemble_constraints(N, r));
  SolutionSpace out{N, r, {}};
  for (const auto& v : cert.basis) out.basis.emplace_back(r, N, from_coordinates(v, columns));
  return out;
}

bool membership_test(const DepthPoly& f) {
  const std::size_t r = f.depth(), N = f.weight();
  check_bidegree(N, r);
  if (f.is_zero()) return true;
  if (r == 1) return N % 2 == 1 && N >= 3;
  if (r > 8 || N - r > 255) {
    // too wide for packed keys
    const Poly fs = sharp(f.body());
    for (std::size_t k = 1; k < r; ++k) {
      Poly plain(r), twisted(r);
      for (const auto& w : position_shuffles(k, r)) {
        plain += f.body().relabel(w, r);
        twisted += fs.relabel(w, r);
      }
      if (!plain.is_zero() || !twisted.is_zero()) return false;
    }
    return true;
  }

  // packed exponents, x_j in byte r-1-j
  using Packed = std::unordered_map<std::uint64_t, Rational>;
  const auto shift = [r](std::size_t j) { return 8 * (r - 1 - j); };
  const auto get = [&](std::uint64_t key, std::size_t j) { return static_cast<unsigned>((key >> shift(j)) & 0xff); };
  Packed body;
  for (const auto& [e, c] : f.body().terms()) body.emplace(pack(e), c);

  // f# via x_j -> x_j + x_{j-1} for j = r-1, ..., 1
  std::vector<std::vector<Integer>> pascal(N - r + 1);
  for (std::size_t n = 0; n < pascal.size(); ++n) {
    pascal[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  Packed fs = body;
  for (std::size_t j = r - 1; j >= 1; --j) {
    Packed next;
    for (const auto& [key, c] : fs) {
      const unsigned a = get(key, j - 1), b = get(key, j);
      const std::uint64_t base = key & ~((0xffull << shift(j)) | (0xffull << shift(j - 1)));
      for (unsigned t = 0; t <= b; ++t) {
        const std::uint64_t k2 = base | (std::uint64_t{a + t} << shift(j - 1)) | (std::uint64_t{b - t} << shift(j));
        next[k2] += c * pascal[b][t];
      }
    }
    fs = std::move(next);
  }

  const auto vanishes = [&](const Packed& g, const std::vector<std::vector<std::size_t>>& shuffles) {
    Packed sum;
    for (const auto& w : shuffles)
      for (const auto& [key, c] : g) {
        std::uint64_t k2 = 0;
        for (std::size_t i = 0; i < r; ++i) k2 |= std::uint64_t{get(key, i)} << shift(w[i]);
        sum[k2] += c;
      }
    return std::all_of(sum.begin(), sum.end(), [](const auto& kv) { return sgn(kv.second) == 0; });
  };
  for (std::size_t k = 1; k < r; ++k) {
    const auto shuffles = position_shuffles(k, r);
    if (!vanishes(body, shuffles) || !vanishes(fs, shuffles)) return false;
  }
  return true;
}

SolutionSpace solve_from_words(std::size_t N, std::size_t r) {
  check_bidegree(N, r);
  const auto unknowns = words_of(N, r);
  std::map<BWord, std::uint32_t> index;
  for (std::size_t i = 0; i < unknowns.size(); ++i) index.emplace(unknowns[i], static_cast<std::uint32_t>(i));

  std::set<IntMatrix::Row> rows;
  auto add_row = [&](const std::map<std::uint32_t, std::int64_t>& entries) {
    IntMatrix::Row row;
    for (const auto& [c, v] : entries)
      if (v) row.emplace_back(c, v);
    if (!row.empty()) rows.insert(std::move(row));
  };

  // shuffles of pairs of nonempty words; unordered pairs suffice
  for (std::size_t n1 = 1; 2 * n1 <= N; ++n1) {
    const std::size_t n2 = N - n1;
    for (std::size_t d1 = 0; d1 <= std::min(n1, r); ++d1) {
      const std::size_t d2 = r - d1;
      if (d2 > n2) continue;
      const auto left = words_of(n1, d1), right = words_of(n2, d2);
      for (const auto& u : left)
        for (const auto& v : right) {
          if (n1 == n2 && v < u) continue;
          std::map<std::uint32_t, std::int64_t> entries;
          const auto sh = shuffle(u, v);
          for (const auto& [w, c] : sh.terms()) entries[index.at(w)] += c.get_num().get_si();
          add_row(entries);
        }
    }
  }

  // Y-word shuffles on alpha: y_{n1}...y_{nr} <-> e1 e0^{n1-1} ... e1 e0^{nr-1}
  auto word_of_y = [](const YWord& y) {
    BWord w;
    for (auto n : y) {
      w.push_back(1);
      w.insert(w.end(), n - 1, 0);
    }
    return w;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::vector<YWord>> ywords;
  auto compositions = [&](std::size_t n, std::size_t d) -> const std::vector<YWord>& {
    auto [it, inserted] = ywords.try_emplace({n, d});
    if (inserted)
      for (const auto& w : words_of(n, d))
        if (auto y = alpha(w)) it->second.push_back(*y);
    return it->second;
  };
  for (std::size_t d1 = 1; 2 * d1 <= r; ++d1) {
    const std::size_t d2 = r - d1;
    for (std::size_t n1 = d1; n1 + d2 <= N; ++n1) {
      const std::size_t n2 = N - n1;
      for (const auto& u : compositions(n1, d1))
        for (const auto& v : compositions(n2, d2)) {
          if (d1 == d2 && v < u) continue;
          std::map<std::uint32_t, std::int64_t> entries;
          const auto sh = shuffle(u, v);
          for (const auto& [w, c] : sh.terms())
            entries[index.at(word_of_y(w))] += c.get_num().get_si();
          add_row(entries);
        }
    }
  }

  if (r == 1 && (N % 2 == 0 || N == 1))
    for (std::size_t i = 0; i < unknowns.size(); ++i) add_row({{static_cast<std::uint32_t>(i), 1}});

  IntMatrix m(unknowns.size());
  for (const auto& row : rows) m.push_row(row);
  const auto cert = certified_nullspace(m);

  const auto columns = constraint_columns(N, r);
  std::vector<DepthPoly> projected;
  for (const auto& v : cert.basis) {
    Poly p(r);
    for (std::size_t i = 0; i < unknowns.size(); ++i)
      if (sgn(v[i]) != 0 && unknowns[i].front() == 1) p += rho_bar(unknowns[i]) * v[i];
    projected.emplace_back(r, N, std::move(p));
  }
  return span_of(N, r, projected);
}

SolutionSpace span_of(std::size_t N, std::size_t r, const std::vector<DepthPoly>& elements) {
  const auto columns = constraint_columns(N, r);
  std::vector<RVector> vecs;
  for (const auto& e : elements) {
    if (e.depth() != r || e.weight() != N) throw std::invalid_argument("span_of: bidegree mismatch");
    vecs.push_back(coordinates(e.body(), columns));
  }
  SolutionSpace out{N, r, {}};
  for (const auto& v : rref(std::move(vecs))) out.basis.emplace_back(r, N, from_coordinates(v, columns));
  return out;
}

SolutionSpace iterated_bracket_span(std::size_t N, std::size_t r) {
  check_bidegree(N, r);
  std::map<std::vector<unsigned>, DepthPoly> nested;  // keyed by generator exponents n (x1^{2n})
  auto build = [&](auto&& self, const std::vector<unsigned>& ns) -> DepthPoly {
    if (auto it = nested.find(ns); it != nested.end()) return it->second;
    DepthPoly out = ns.size() == 1 ? DepthPoly::generator(ns.front())
                                   : bracket(DepthPoly::generator(ns.front()),
                                             self(self, std::vector<unsigned>(ns.begin() + 1, ns.end())));
    nested.emplace(ns, out);
    return out;
  };
  std::vector<DepthPoly> elements;
  std::vector<unsigned> ns;
  // weights 2n+1 >= 3 summing to N
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t slots) -> void {
    if (slots == 0) {
      if (remaining == 0) elements.push_back(build(build, ns));
      return;
    }
    for (std::size_t w = 3; w + 3 * (slots - 1) <= remaining; w += 2) {
      ns.push_back(static_cast<unsigned>((w - 1) / 2));
      self(self, remaining - w, slots - 1);
      ns.pop_back();
    }
  };
  rec(rec, N, r);
  return span_of(N, r, elements);
}

}  // namespace dgmzv
