#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dgmzv/poly.hpp"

namespace dgmzv {

/// Truncated power series in s and t with integer coefficients; terms
/// beyond (max_s, max_t) are discarded by every operation.
class BiSeries {
 public:
  static constexpr std::size_t default_max_s = 40;
  static constexpr std::size_t default_max_t = 8;

  explicit BiSeries(std::size_t max_s = default_max_s, std::size_t max_t = default_max_t);
  static BiSeries one(std::size_t max_s = default_max_s, std::size_t max_t = default_max_t);
  /// c s^i t^j (zero if beyond the truncation)
  static BiSeries monomial(std::size_t i, std::size_t j, const Integer& c, std::size_t max_s = default_max_s,
                           std::size_t max_t = default_max_t);

  std::size_t max_s() const { return max_s_; }
  std::size_t max_t() const { return max_t_; }

  const Integer& at(std::size_t i, std::size_t j) const;
  Integer& at(std::size_t i, std::size_t j);

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend bool operator==(const BiSeries& a, const BiSeries& b);

  /// Multiplicative inverse; throws std::domain_error unless the constant
  /// term is 1.
  BiSeries inverse() const;
  /// Multiplies every s^i t^j by t^k (shifting up in t).
  BiSeries times_t(std::size_t k) const;

  /// Sum over t of the coefficients, as a series in s.
  std::vector<Integer> at_t_equals_one() const;
  /// Coefficients of t^0 as a series in s.
  std::vector<Integer> s_part(std::size_t j = 0) const;

  bool nonnegative() const;

  /// "s_power<TAB>t_power<TAB>coefficient" lines for nonzero terms.
  std::string dump() const;

 private:
  void check_shape(const BiSeries& o) const;
  std::size_t max_s_, max_t_;
  std::vector<Integer> c_;
};

struct EOS {
  BiSeries E, O, S;
};

/// E = s^2/(1-s^2), O = s^3/(1-s^2), S = s^12/((1-s^4)(1-s^6)), with t-degree 0.
EOS eos(std::size_t max_s = BiSeries::default_max_s, std::size_t max_t = BiSeries::default_max_t);

enum class BKKind { full, ls, odd };

///   full: (1 + E t) / (1 - O t + S t^2 - S t^4)
///   ls:   1 / (1 - O t + S t^2 - S t^4)
///   odd:  1 / (1 - O t + S t^2)
BiSeries bk_series(BKKind kind, std::size_t max_s = BiSeries::default_max_s,
                   std::size_t max_t = BiSeries::default_max_t);

/// (N, d) -> dimension
using DimTable = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

/// prod over (N, d) of (1 - s^N t^d)^{-dim}
BiSeries pbw(const DimTable& lie_dims, std::size_t max_s = BiSeries::default_max_s,
             std::size_t max_t = BiSeries::default_max_t);

/// 1 / (1 - h1 + h2)
BiSeries euler_series(const BiSeries& h1, const BiSeries& h2);
/// Whether euler_series(h1, h2) equals the ls series at the same truncation.
bool euler_check(const BiSeries& h1, const BiSeries& h2);

/// Coefficients of 1/(1 - s^2 - s^3) up to s^max_s.
std::vector<Integer> hilbert_t1(std::size_t max_s = BiSeries::default_max_s);

}  // namespace dgmzv
