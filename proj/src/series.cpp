#include "dgmzv/series.hpp"

#include <sstream>
#include <stdexcept>

namespace dgmzv {

BiSeries::BiSeries(std::size_t max_s, std::size_t max_t)
    : max_s_(max_s), max_t_(max_t), c_((max_s + 1) * (max_t + 1)) {}

BiSeries BiSeries::one(std::size_t max_s, std::size_t max_t) {
  BiSeries b(max_s, max_t);
  b.at(0, 0) = 1;
  return b;
}

BiSeries BiSeries::monomial(std::size_t i, std::size_t j, const Integer& c, std::size_t max_s, std::size_t max_t) {
  BiSeries b(max_s, max_t);
  if (i <= max_s && j <= max_t) b.at(i, j) = c;
  return b;
}

const Integer& BiSeries::at(std::size_t i, std::size_t j) const {
  if (i > max_s_ || j > max_t_) throw std::out_of_range("BiSeries: index beyond truncation");
  return c_[j * (max_s_ + 1) + i];
}

Integer& BiSeries::at(std::size_t i, std::size_t j) {
  if (i > max_s_ || j > max_t_) throw std::out_of_range("BiSeries: index beyond truncation");
  return c_[j * (max_s_ + 1) + i];
}

void BiSeries::check_shape(const BiSeries& o) const {
  if (o.max_s_ != max_s_ || o.max_t_ != max_t_) throw std::invalid_argument("BiSeries: truncation mismatch");
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  check_shape(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  check_shape(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  a.check_shape(b);
  BiSeries out(a.max_s_, a.max_t_);
  for (std::size_t j1 = 0; j1 <= a.max_t_; ++j1)
    for (std::size_t i1 = 0; i1 <= a.max_s_; ++i1) {
      const Integer& x = a.at(i1, j1);
      if (sgn(x) == 0) continue;
      for (std::size_t j2 = 0; j1 + j2 <= a.max_t_; ++j2)
        for (std::size_t i2 = 0; i1 + i2 <= a.max_s_; ++i2) {
          const Integer& y = b.at(i2, j2);
          if (sgn(y) != 0) out.at(i1 + i2, j1 + j2) += x * y;
        }
    }
  return out;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
  return a.max_s_ == b.max_s_ && a.max_t_ == b.max_t_ && a.c_ == b.c_;
}

BiSeries BiSeries::inverse() const {
  if (at(0, 0) != 1) throw std::domain_error("BiSeries: constant term must be 1 to invert");
  // b = 1/a from a*b = 1: b_{ij} = -sum_{(k,l) != (0,0)} a_{kl} b_{i-k,j-l}
  BiSeries out(max_s_, max_t_);
  for (std::size_t j = 0; j <= max_t_; ++j)
    for (std::size_t i = 0; i <= max_s_; ++i) {
      Integer acc = (i == 0 && j == 0) ? 1 : 0;
      for (std::size_t l = 0; l <= j; ++l)
        for (std::size_t k = 0; k <= i; ++k) {
          if (k == 0 && l == 0) continue;
          const Integer& a = at(k, l);
          if (sgn(a) != 0) acc -= a * out.at(i - k, j - l);
        }
      out.at(i, j) = acc;
    }
  return out;
}

BiSeries BiSeries::times_t(std::size_t k) const {
  BiSeries out(max_s_, max_t_);
  for (std::size_t j = 0; j + k <= max_t_; ++j)
    for (std::size_t i = 0; i <= max_s_; ++i) out.at(i, j + k) = at(i, j);
  return out;
}

std::vector<Integer> BiSeries::at_t_equals_one() const {
  std::vector<Integer> out(max_s_ + 1);
  for (std::size_t j = 0; j <= max_t_; ++j)
    for (std::size_t i = 0; i <= max_s_; ++i) out[i] += at(i, j);
  return out;
}

std::vector<Integer> BiSeries::s_part(std::size_t j) const {
  std::vector<Integer> out(max_s_ + 1);
  for (std::size_t i = 0; i <= max_s_; ++i) out[i] = at(i, j);
  return out;
}

bool BiSeries::nonnegative() const {
  for (const auto& x : c_)
    if (sgn(x) < 0) return false;
  return true;
}

std::string BiSeries::dump() const {
  std::ostringstream os;
  for (std::size_t i = 0; i <= max_s_; ++i)
    for (std::size_t j = 0; j <= max_t_; ++j)
      if (sgn(at(i, j)) != 0) os << i << '\t' << j << '\t' << at(i, j).get_str() << '\n';
  return os.str();
}

EOS eos(std::size_t max_s, std::size_t max_t) {
  EOS out{BiSeries(max_s, max_t), BiSeries(max_s, max_t), BiSeries(max_s, max_t)};
  for (std::size_t i = 2; i <= max_s; i += 2) out.E.at(i, 0) = 1;
  for (std::size_t i = 3; i <= max_s; i += 2) out.O.at(i, 0) = 1;
  // s^12 / ((1-s^4)(1-s^6)): count a, b >= 0 with 12 + 4a + 6b = i
  for (std::size_t i = 12; i <= max_s; ++i)
    for (std::size_t b = 0; 12 + 6 * b <= i; ++b)
      if ((i - 12 - 6 * b) % 4 == 0) out.S.at(i, 0) += 1;
  return out;
}

BiSeries bk_series(BKKind kind, std::size_t max_s, std::size_t max_t) {
  const auto [E, O, S] = eos(max_s, max_t);
  BiSeries denom = BiSeries::one(max_s, max_t) - O.times_t(1) + S.times_t(2);
  if (kind != BKKind::odd) denom -= S.times_t(4);
  BiSeries out = denom.inverse();
  if (kind == BKKind::full) out = (BiSeries::one(max_s, max_t) + E.times_t(1)) * out;
  return out;
}

BiSeries pbw(const DimTable& lie_dims, std::size_t max_s, std::size_t max_t) {
  BiSeries out = BiSeries::one(max_s, max_t);
  for (const auto& [key, dim] : lie_dims) {
    const auto [N, d] = key;
    if (dim == 0) continue;
    if (N == 0 && d == 0) throw std::invalid_argument("pbw: generator in bidegree (0, 0)");
    // (1 - x)^{-m} = sum_k C(m+k-1, k) x^k with x = s^N t^d
    BiSeries factor(max_s, max_t);
    for (std::size_t k = 0; k * N <= max_s && k * d <= max_t; ++k) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), dim + k - 1, k);
      factor.at(k * N, k * d) = c;
    }
    out = out * factor;
  }
  return out;
}

BiSeries euler_series(const BiSeries& h1, const BiSeries& h2) {
  return (BiSeries::one(h1.max_s(), h1.max_t()) - h1 + h2).inverse();
}

bool euler_check(const BiSeries& h1, const BiSeries& h2) {
  return euler_series(h1, h2) == bk_series(BKKind::ls, h1.max_s(), h1.max_t());
}

std::vector<Integer> hilbert_t1(std::size_t max_s) {
  std::vector<Integer> d(max_s + 1);
  d[0] = 1;
  for (std::size_t i = 1; i <= max_s; ++i) {
    if (i >= 2) d[i] += d[i - 2];
    if (i >= 3) d[i] += d[i - 3];
  }
  return d;
}

}  // namespace dgmzv
