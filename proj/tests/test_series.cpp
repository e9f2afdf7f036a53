#include <doctest.h>

#include "dgmzv/double_shuffle.hpp"
#include "dgmzv/series.hpp"

using namespace dgmzv;

namespace {

constexpr std::size_t S = 30, T = 6;

BiSeries t_one(std::size_t max_s = S, std::size_t max_t = T) { return BiSeries::monomial(0, 1, 1, max_s, max_t); }

int mobius(unsigned n) {
  int m = 1;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  return n > 1 ? -m : m;
}

// free Lie algebra on one generator in each odd weight >= 3 (depth 1):
// L_{N,d} = (1/d) sum_{k | d} mu(k) [s^N] O(s^k)^{d/k}
DimTable free_lie_dims(std::size_t max_s, std::size_t max_t) {
  DimTable out;
  for (std::size_t d = 1; d <= max_t; ++d) {
    std::vector<Integer> acc(max_s + 1);
    for (std::size_t k = 1; k <= d; ++k) {
      if (d % k) continue;
      // O(s^k)^{d/k}
      std::vector<Integer> p(max_s + 1);
      p[0] = 1;
      for (std::size_t e = 0; e < d / k; ++e) {
        std::vector<Integer> q(max_s + 1);
        for (std::size_t i = 0; i <= max_s; ++i)
          if (p[i] != 0)
            for (std::size_t w = 3; i + k * w <= max_s; w += 2) q[i + k * w] += p[i];
        p = std::move(q);
      }
      for (std::size_t i = 0; i <= max_s; ++i) acc[i] += mobius(static_cast<unsigned>(k)) * p[i];
    }
    for (std::size_t N = 0; N <= max_s; ++N) {
      REQUIRE(acc[N] % Integer(d) == 0);
      const Integer v = acc[N] / Integer(d);
      if (v != 0) out[{N, d}] = v.get_ui();
    }
  }
  return out;
}

}  // namespace

TEST_CASE("E, O, S coefficients") {
  const EOS e = eos(S, T);
  for (std::size_t i = 0; i <= S; ++i) {
    CHECK(e.E.at(i, 0) == (i >= 2 && i % 2 == 0 ? 1 : 0));
    CHECK(e.O.at(i, 0) == (i >= 3 && i % 2 == 1 ? 1 : 0));
  }
  const int cusp[] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 2, 0, 2};
  for (std::size_t i = 0; i <= S; ++i) CHECK(e.S.at(i, 0) == cusp[i]);
}

TEST_CASE("full series at t = 1 is 1/(1 - s^2 - s^3)") {
  const auto h = hilbert_t1(40);
  REQUIRE(h.size() == 41);
  CHECK(h[0] == 1);
  CHECK(h[1] == 0);
  CHECK(h[2] == 1);
  for (std::size_t N = 3; N <= 40; ++N) CHECK(h[N] == h[N - 2] + h[N - 3]);
  CHECK(h[12] == 12);  // 1 0 1 1 1 2 2 3 4 5 7 9 12
  CHECK(bk_series(BKKind::full, 40, 40).at_t_equals_one() == h);
}

TEST_CASE("full = (1 + E t) ls") {
  const EOS e = eos(S, T);
  CHECK(bk_series(BKKind::full, S, T) == (BiSeries::one(S, T) + e.E * t_one()) * bk_series(BKKind::ls, S, T));
}

TEST_CASE("totally odd series: s^12 t^2 coefficient counted by hand") {
  const BiSeries odd = bk_series(BKKind::odd, S, T);
  // (O t)^2 at s^12: (3,9), (5,7), (7,5), (9,3); minus S t^2: 1
  CHECK(odd.at(12, 2) == 3);
  // depth 1: one per odd weight >= 3
  for (std::size_t i = 0; i <= S; ++i) CHECK(odd.at(i, 1) == (i >= 3 && i % 2 ? 1 : 0));
  // defining relation: odd * (1 - O t + S t^2) = 1
  const EOS e = eos(S, T);
  CHECK(odd * (BiSeries::one(S, T) - e.O * t_one() + e.S * t_one().times_t(1)) == BiSeries::one(S, T));
}

TEST_CASE("pbw products") {
  CHECK(pbw({}, S, T) == BiSeries::one(S, T));
  const BiSeries single = pbw({{{3, 1}, 1}}, S, T);
  for (std::size_t i = 0; i <= S; ++i)
    for (std::size_t j = 0; j <= T; ++j) CHECK(single.at(i, j) == (i == 3 * j ? 1 : 0));
  // (1 - s^2 t)^{-2}: coefficient k + 1 at s^{2k} t^k
  const BiSeries doubled = pbw({{{2, 1}, 2}}, S, T);
  CHECK(doubled.at(8, 4) == 5);
  // the free Lie algebra on depth-1 generators (necklace counts) has
  // enveloping algebra 1 / (1 - O t)
  const EOS e = eos(S, T);
  CHECK(pbw(free_lie_dims(S, T), S, T) == (BiSeries::one(S, T) - e.O * t_one()).inverse());
  CHECK(euler_series(e.O * t_one(), BiSeries(S, T)) == (BiSeries::one(S, T) - e.O * t_one()).inverse());
}

TEST_CASE("Euler characteristic form of the ls series") {
  const EOS e = eos(S, T);
  const BiSeries h1 = e.O * t_one() + e.S * t_one().times_t(3);
  const BiSeries h2 = e.S * t_one().times_t(1);
  CHECK(euler_check(h1, h2));
  CHECK_FALSE(euler_check(e.O * t_one(), BiSeries(S, T)));
  CHECK(euler_series(BiSeries(S, T), BiSeries(S, T)) == BiSeries::one(S, T));
}

TEST_CASE("series coefficients are nonnegative in the tested range") {
  for (auto k : {BKKind::full, BKKind::ls, BKKind::odd}) CHECK(bk_series(k, S, T).nonnegative());
  CHECK_FALSE((BiSeries::one(S, T) - t_one()).nonnegative());
}

TEST_CASE("computed Lie dimensions reproduce ls (N <= 16, d <= 3)") {
  DimTable dims;
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t N = d; N <= 16; ++N)
      if (auto n = solve(N, d).dimension()) dims[{N, d}] = n;
  const BiSeries lhs = pbw(dims, 16, 3), rhs = bk_series(BKKind::ls, 16, 3);
  CHECK(lhs == rhs);
}

TEST_CASE("inverse, shapes, dump") {
  CHECK_THROWS_AS(t_one().inverse(), std::domain_error);
  CHECK_THROWS((BiSeries::one(4, 2) + BiSeries::one(5, 2)));
  CHECK(BiSeries::monomial(9, 0, 1, 8, 2) == BiSeries(8, 2));
  BiSeries b(4, 2);
  b.at(3, 1) = 5;
  b.at(0, 0) = 1;
  CHECK(b.dump() == "0\t0\t1\n3\t1\t5\n");
  CHECK((b * b).at(3, 1) == 10);
}
