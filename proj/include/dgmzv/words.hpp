#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgmzv/poly.hpp"

namespace dgmzv {

/// Word over {e0, e1}; letter 0 is e0, letter 1 is e1.
using BWord = std::vector<std::uint8_t>;
/// Word over the alphabet y_1, y_2, ...; entries are the indices (all >= 1).
using YWord = std::vector<std::uint32_t>;

std::size_t weight(const BWord& w);
std::size_t depth(const BWord& w);
std::size_t weight(const YWord& w);
std::size_t depth(const YWord& w);

/// "e0 e1 e0 e0"; the empty word prints as "".
std::string to_string(const BWord& w);
/// "3,5,7"
std::string to_string(const YWord& w);
BWord parse_bword(std::string_view text);
YWord parse_yword(std::string_view text);

/// Finite Q-linear combination of words of one alphabet; no zero coefficients.
template <class W>
class WordSum {
 public:
  using Map = std::map<W, Rational>;

  WordSum() = default;
  explicit WordSum(W w, const Rational& c = 1) { add(std::move(w), c); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const W& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(W w, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  WordSum& operator+=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  WordSum& operator-=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  WordSum& operator*=(const Rational& c) {
    if (sgn(c) == 0) terms_.clear();
    for (auto& [w, v] : terms_) v *= c;
    return *this;
  }
  friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
  friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
  friend WordSum operator*(const Rational& c, WordSum a) { return a *= c; }
  friend bool operator==(const WordSum& a, const WordSum& b) { return a.terms_ == b.terms_; }

  /// Single weight shared by all words, nullopt if mixed or empty.
  std::optional<std::size_t> pure_weight() const { return pure(&weight_of); }
  std::optional<std::size_t> pure_depth() const { return pure(&depth_of); }

 private:
  static std::size_t weight_of(const W& w) { return weight(w); }
  static std::size_t depth_of(const W& w) { return depth(w); }
  std::optional<std::size_t> pure(std::size_t (*f)(const W&)) const {
    if (terms_.empty()) return std::nullopt;
    const std::size_t v = f(terms_.begin()->first);
    for (const auto& [w, c] : terms_)
      if (f(w) != v) return std::nullopt;
    return v;
  }

  Map terms_;
};

using BWordSum = WordSum<BWord>;
using YWordSum = WordSum<YWord>;

/// Shuffle product, by the first-letter recursion.
BWordSum shuffle(const BWord& u, const BWord& v);
YWordSum shuffle(const YWord& u, const YWord& v);
/// Stuffle product on Y-words: shuffle plus the contraction y_i y_j -> y_{i+j}.
YWordSum stuffle(const YWord& u, const YWord& v);

template <class W>
WordSum<W> shuffle(const WordSum<W>& a, const WordSum<W>& b) {
  WordSum<W> out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      auto s = shuffle(u, v);
      s *= cu * cv;
      out += s;
    }
  return out;
}
YWordSum stuffle(const YWordSum& a, const YWordSum& b);

/// e0^{a0} e1 e0^{a1} ... e1 e0^{ar}  ->  y0^{a0} ... yr^{ar}, arity depth+1.
Poly rho(const BWord& w);
/// Linear extension; every word must have depth `depth`.
Poly rho(const BWordSum& s, std::size_t depth);
/// rho followed by y0 = 0, yi -> xi (arity depth); words starting in e0 vanish.
Poly rho_bar(const BWord& w);
Poly rho_bar(const BWordSum& s, std::size_t depth);
/// Inverse of rho on a single monomial.
BWord word_of_monomial(const Exponent& e);
/// Inverse of rho on a polynomial in y0..yr.
BWordSum words_of_poly(const Poly& p);

/// f(x1..xr) -> f(y1 - y0, ..., yr - y0), arity r+1.
Poly translate_lift(const Poly& f);
/// g(y0..yr) -> g(0, x1, ..., xr), arity r.
Poly reduce(const Poly& g);

/// e1 e0^{a1} ... e1 e0^{ar} -> y_{a1+1} ... y_{ar+1}; words starting in e0 -> nullopt.
std::optional<YWord> alpha(const BWord& w);
YWordSum alpha(const BWordSum& s);

/// (a1...an)* = (-1)^n an...a1.
BWordSum antipode(const BWord& w);

/// Linearized composition on words:
///   a o e0^n = e0^n a,
///   a o (e0^n e1 w) = e0^n a e1 w + e0^n e1 a* w + e0^n e1 (a o w).
BWordSum word_compose(const BWord& a, const BWord& g);
BWordSum word_compose(const BWordSum& a, const BWordSum& g);

/// One term  coefficient * (sub | quotient)  of the coaction component.
struct CoactionTerm {
  std::vector<std::uint8_t> sub;       ///< a_{p+1..p+r}, reversed when the rule applies
  std::vector<std::uint8_t> quotient;  ///< a_1..a_p, a_{p+r+1}..a_n
  Rational coefficient;
  friend bool operator==(const CoactionTerm&, const CoactionTerm&) = default;
};

/// D_r on I(0; a_1..a_n; 1). Terms with equal endpoints vanish; endpoints
/// (1, 0) contribute (-1)^r times the reversed subsequence. Identical
/// (sub, quotient) pairs are combined and zero totals dropped; terms are
/// sorted by (sub, quotient).
std::vector<CoactionTerm> coaction_component(std::size_t r, const std::vector<std::uint8_t>& a);

/// All words over {e0,e1} of the given weight and depth, lexicographic.
std::vector<BWord> words_of(std::size_t weight, std::size_t depth);

}  // namespace dgmzv
