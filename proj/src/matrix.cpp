#include "dgmzv/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

namespace dgmzv {

void RMatrix::push_row(const RVector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row length does not match matrix");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::size_t rank(const std::vector<std::vector<Integer>>& input, std::size_t cols) {
  auto a = input;
  const std::size_t rows = a.size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank(const RMatrix& m) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational scaled = m.at(i, j) * den;
      a[i][j] = scaled.get_num();
    }
  }
  return rank(a, m.cols());
}

std::vector<RVector> rref(std::vector<RVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<RVector> nullspace(const RMatrix& m) {
  std::vector<RVector> rows(m.rows(), RVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  rows = rref(std::move(rows));
  std::vector<long> pivot_of_col(m.cols(), -1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t c = 0;
    while (sgn(rows[i][c]) == 0) ++c;
    pivot_of_col[c] = static_cast<long>(i);
  }
  std::vector<RVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (pivot_of_col[free] >= 0) continue;
    RVector v(m.cols());
    v[free] = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (pivot_of_col[c] >= 0) v[c] = -rows[pivot_of_col[c]][free];
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis));
}

void IntMatrix::push_row(Row row) {
  std::sort(row.begin(), row.end());
  Row merged;
  for (const auto& [c, v] : row) {
    if (c >= cols_) throw std::out_of_range("IntMatrix column out of range");
    if (!merged.empty() && merged.back().first == c) {
      if (__builtin_add_overflow(merged.back().second, v, &merged.back().second))
        throw std::overflow_error("IntMatrix entry overflow");
    } else {
      merged.emplace_back(c, v);
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
  rows_.push_back(std::move(merged));
}

RMatrix IntMatrix::to_rational() const {
  RMatrix m(rows_.size(), cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [c, v] : rows_[i]) m.at(i, c) = Rational(static_cast<long>(v));
  return m;
}

bool rational_reconstruct(const Integer& r, const Integer& m, Rational& out) {
  // half-extended Euclid on (m, r), stopping once the remainder drops below sqrt(m/2)
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = ((r % m) + m) % m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (abs(t1) > bound || sgn(t1) == 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = Rational(r1, t1);
  out.canonicalize();
  return true;
}

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce_mod(std::int64_t v, std::uint64_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r);
}

// Primes stay below 2^26 so that products fit in 52 bits and a 64-bit
// accumulator absorbs thousands of them before it must be reduced.
constexpr std::uint64_t prime_ceiling = std::uint64_t{1} << 26;
constexpr unsigned lazy_budget = 4000;

/// Row echelon form modulo p built by inserting rows one at a time. Each
/// stored row has leading entry 1 and zeros before it.
class ModEchelon {
 public:
  ModEchelon(std::size_t cols, std::uint64_t p) : cols_(cols), p_(p), pivot_of_col_(cols, -1) {}

  /// True if the row was independent of the rows stored so far.
  bool insert(const IntMatrix::Row& sparse) {
    if (sparse.empty() || rows_.size() == cols_) return false;
    work_.assign(cols_, 0);
    for (const auto& [c, v] : sparse) work_[c] = reduce_mod(v, p_);
    unsigned pending = 0;
    std::uint64_t* w = work_.data();
    for (std::size_t c = sparse.front().first; c < cols_; ++c) {
      if (w[c] == 0) continue;
      w[c] %= p_;
      if (w[c] == 0) continue;
      const long k = pivot_of_col_[c];
      if (k < 0) {
        const std::uint64_t inv = inverse_mod(w[c], p_);
        std::vector<std::uint32_t> row(cols_, 0);
        for (std::size_t j = c; j < cols_; ++j) row[j] = static_cast<std::uint32_t>(w[j] % p_ * inv % p_);
        pivot_of_col_[c] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
      }
      const std::uint64_t f = p_ - w[c];
      const std::uint32_t* pr = rows_[k].data();
      for (std::size_t j = c; j < cols_; ++j) w[j] += f * pr[j];
      if (++pending == lazy_budget) {
        for (std::size_t j = c + 1; j < cols_; ++j) w[j] %= p_;
        pending = 0;
      }
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t nullity() const { return cols_ - rows_.size(); }

  /// Kernel basis with identity on the free columns, by back substitution.
  std::vector<std::vector<std::uint32_t>> kernel() const {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_of_col_[c] >= 0) pivots.push_back(c);
    std::vector<std::vector<std::uint32_t>> basis;
    std::vector<std::uint64_t> v(cols_);
    for (std::size_t free = 0; free < cols_; ++free) {
      if (pivot_of_col_[free] >= 0) continue;
      std::fill(v.begin(), v.end(), 0);
      v[free] = 1;
      for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto& pr = rows_[pivot_of_col_[*it]];
        std::uint64_t acc = 0;
        unsigned pending = 0;
        for (std::size_t j = *it + 1; j < cols_; ++j) {
          acc += pr[j] * v[j];
          if (++pending == lazy_budget) {
            acc %= p_;
            pending = 0;
          }
        }
        acc %= p_;
        v[*it] = acc ? p_ - acc : 0;
      }
      basis.emplace_back(v.begin(), v.end());
    }
    return basis;
  }

 private:
  std::size_t cols_;
  std::uint64_t p_;
  std::vector<long> pivot_of_col_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::uint64_t> work_;
};

/// Reduced row echelon form modulo p of a small dense matrix, in place;
/// returns the pivot columns.
std::vector<std::size_t> rref_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const std::uint64_t inv = inverse_mod(rows[r][c], p);
    for (std::size_t j = c; j < cols; ++j) rows[r][j] = static_cast<std::uint32_t>(rows[r][j] * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = p - rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (rows[r][j]) rows[i][j] = static_cast<std::uint32_t>((rows[i][j] + f * rows[r][j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

const std::vector<std::uint32_t>& primes() {
  static const std::vector<std::uint32_t> list = [] {
    std::vector<std::uint32_t> out;
    Integer q = Integer(static_cast<unsigned long>(prime_ceiling)) - 1;
    while (out.size() < 400) {
      if (mpz_probab_prime_p(q.get_mpz_t(), 30)) out.push_back(static_cast<std::uint32_t>(q.get_ui()));
      q -= 2;
    }
    return out;
  }();
  return list;
}

bool row_kills(const IntMatrix::Row& row, const std::vector<std::uint32_t>& v, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (const auto& [c, val] : row) acc = (acc + reduce_mod(val, p) * v[c]) % p;
  return acc == 0;
}

// First pass modulo p: insert rows in a scrambled order until the rank
// stalls; then make sure the kernel of the inserted rows is killed by every
// row, inserting offenders as they are found. Returns the inserted rows.
std::vector<std::size_t> select_rows(const IntMatrix& m, std::uint64_t p) {
  const auto& rows = m.row_data();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(0x5eed);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

  ModEchelon ech(cols, p);
  std::vector<std::size_t> chosen;
  const std::size_t small = std::max<std::size_t>(8, cols / 16);
  std::size_t stall = 0, pos = 0;
  for (; pos < order.size() && ech.rank() < cols; ++pos) {
    if (ech.insert(rows[order[pos]])) {
      chosen.push_back(order[pos]);
      stall = 0;
    } else if (++stall >= 24 && ech.nullity() <= small) {
      ++pos;
      break;
    }
  }
  if (ech.rank() == cols || pos == order.size()) return chosen;

  auto kernel = ech.kernel();
  for (; pos < order.size(); ++pos) {
    const auto& row = rows[order[pos]];
    bool ok = true;
    for (const auto& v : kernel)
      if (!row_kills(row, v, p)) {
        ok = false;
        break;
      }
    if (ok) continue;
    if (ech.insert(row)) chosen.push_back(order[pos]);
    if (ech.rank() == cols) break;
    kernel = ech.kernel();
  }
  return chosen;
}

bool exact_kernel_row_check(const IntMatrix::Row& row, const std::vector<Integer>& w) {
  Integer acc = 0;
  for (const auto& [c, val] : row) {
    if (sgn(w[c]) == 0) continue;
    if (val >= 0) mpz_addmul_ui(acc.get_mpz_t(), w[c].get_mpz_t(), static_cast<unsigned long>(val));
    else mpz_submul_ui(acc.get_mpz_t(), w[c].get_mpz_t(), static_cast<unsigned long>(-val));
  }
  return sgn(acc) == 0;
}

std::vector<Integer> clear_denominators(const RVector& v) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    Rational s = v[j] * den;
    w[j] = s.get_num();
  }
  return w;
}

// Index of a row violated by some vector, or nullopt if all vanish exactly.
std::optional<std::size_t> first_violation(const IntMatrix& m, const std::vector<RVector>& vs) {
  for (const auto& v : vs) {
    const auto w = clear_denominators(v);
    const auto& rows = m.row_data();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!exact_kernel_row_check(rows[i], w)) return i;
  }
  return std::nullopt;
}

}  // namespace

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  if (p < 3 || p >= prime_ceiling) throw std::invalid_argument("rank_mod_p: prime out of range");
  ModEchelon ech(m.cols(), p);
  for (const auto& row : m.row_data()) ech.insert(row);
  return ech.rank();
}

KernelCertificate certified_nullspace(const IntMatrix& m) {
  const std::size_t cols = m.cols();
  const auto& plist = primes();
  if (cols == 0) return {{}, 0, 0};

  std::vector<std::size_t> chosen = select_rows(m, plist.front());
  std::size_t used = 1;

  for (;;) {
    // Work modulo primes on the chosen rows only; their rank modulo any
    // prime bounds the rank over Q from below.
    std::size_t best_rank = 0;
    bool have = false;
    std::size_t mismatches = 0;
    std::vector<std::size_t> pattern;
    std::vector<std::vector<Integer>> residues;
    Integer modulus = 1;
    std::vector<RVector> previous;
    bool restart = false;

    for (std::size_t pi = 0; pi < plist.size() && !restart; ++pi) {
      const std::uint64_t p = plist[pi];
      ++used;
      ModEchelon ech(cols, p);
      for (auto i : chosen) ech.insert(m.row_data()[i]);
      const std::size_t r = ech.rank();
      if (r == cols) return {{}, cols, used};
      if (have && r < best_rank) continue;  // unlucky prime

      auto kernel = ech.kernel();
      auto piv = rref_mod_p(kernel, p);
      const bool fresh = !have || r > best_rank || (piv != pattern && ++mismatches > 3);
      if (!fresh && piv != pattern) continue;
      if (fresh) {
        have = true;
        best_rank = r;
        pattern = piv;
        mismatches = 0;
        modulus = static_cast<unsigned long>(p);
        residues.assign(kernel.size(), std::vector<Integer>(cols));
        for (std::size_t i = 0; i < kernel.size(); ++i)
          for (std::size_t j = 0; j < cols; ++j) residues[i][j] = static_cast<unsigned long>(kernel[i][j]);
        previous.clear();
      } else {
        // x = a mod M, x = b mod p  ->  x = a + M ((b - a) M^{-1} mod p)
        const std::uint64_t minv = inverse_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
        for (std::size_t i = 0; i < kernel.size(); ++i)
          for (std::size_t j = 0; j < cols; ++j) {
            Integer& a = residues[i][j];
            const std::uint64_t a_mod = mpz_fdiv_ui(a.get_mpz_t(), p);
            const std::uint64_t t = (kernel[i][j] + p - a_mod) % p * minv % p;
            if (t) a += modulus * static_cast<unsigned long>(t);
          }
        modulus *= static_cast<unsigned long>(p);
      }

      std::vector<RVector> candidate(residues.size(), RVector(cols));
      bool ok = true;
      for (std::size_t i = 0; i < residues.size() && ok; ++i)
        for (std::size_t j = 0; j < cols && ok; ++j)
          if (sgn(residues[i][j]) != 0) ok = rational_reconstruct(residues[i][j], modulus, candidate[i][j]);
      if (!ok) continue;
      if (candidate != previous) {
        previous = std::move(candidate);
        continue;
      }
      if (auto bad = first_violation(m, candidate)) {
        // the first prime under-counted the rank; widen the row set
        chosen.push_back(*bad);
        restart = true;
        continue;
      }
      return {rref(std::move(candidate)), best_rank, used};
    }
    if (!restart) throw std::runtime_error("certified_nullspace: no certificate within prime budget");
  }
}

}  // namespace dgmzv
