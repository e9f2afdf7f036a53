#include "dgmzv/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dgmzv {

std::size_t weight(const BWord& w) { return w.size(); }
std::size_t depth(const BWord& w) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), 1)); }
std::size_t weight(const YWord& w) { return std::accumulate(w.begin(), w.end(), std::size_t{0}); }
std::size_t depth(const YWord& w) { return w.size(); }

std::string to_string(const BWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += w[i] ? "e1" : "e0";
  }
  return s;
}

std::string to_string(const YWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

BWord parse_bword(std::string_view text) {
  std::istringstream is{std::string(text)};
  BWord w;
  std::string tok;
  while (is >> tok) {
    if (tok == "e0") w.push_back(0);
    else if (tok == "e1") w.push_back(1);
    else throw std::invalid_argument("bad letter '" + tok + "' in word");
  }
  return w;
}

YWord parse_yword(std::string_view text) {
  YWord w;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    const unsigned long v = std::stoul(tok);
    if (v == 0) throw std::invalid_argument("Y-word indices must be >= 1");
    w.push_back(static_cast<std::uint32_t>(v));
  }
  return w;
}

namespace {

// Every interleaving is fixed by the set of positions that receive u's letters.
template <class W>
WordSum<W> shuffle_words(const W& u, const W& v) {
  const std::size_t n = u.size() + v.size();
  WordSum<W> out;
  std::vector<bool> from_u(n, false);
  std::fill(from_u.begin(), from_u.begin() + u.size(), true);
  W w(n);
  do {
    std::size_t iu = 0, iv = 0;
    for (std::size_t k = 0; k < n; ++k) w[k] = from_u[k] ? u[iu++] : v[iv++];
    out.add(w, 1);
  } while (std::prev_permutation(from_u.begin(), from_u.end()));
  return out;
}

void stuffle_into(const YWord& u, std::size_t i, const YWord& v, std::size_t j, YWord& prefix,
                  YWordSum& out) {
  if (i == u.size() || j == v.size()) {
    YWord w = prefix;
    w.insert(w.end(), u.begin() + i, u.end());
    w.insert(w.end(), v.begin() + j, v.end());
    out.add(std::move(w), 1);
    return;
  }
  prefix.push_back(u[i]);
  stuffle_into(u, i + 1, v, j, prefix, out);
  prefix.back() = v[j];
  stuffle_into(u, i, v, j + 1, prefix, out);
  prefix.back() = u[i] + v[j];
  stuffle_into(u, i + 1, v, j + 1, prefix, out);
  prefix.pop_back();
}

}  // namespace

BWordSum shuffle(const BWord& u, const BWord& v) { return shuffle_words(u, v); }
YWordSum shuffle(const YWord& u, const YWord& v) { return shuffle_words(u, v); }

YWordSum stuffle(const YWord& u, const YWord& v) {
  YWordSum out;
  YWord prefix;
  stuffle_into(u, 0, v, 0, prefix, out);
  return out;
}

YWordSum stuffle(const YWordSum& a, const YWordSum& b) {
  YWordSum out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      auto s = stuffle(u, v);
      s *= cu * cv;
      out += s;
    }
  return out;
}

Poly rho(const BWord& w) {
  Exponent e(depth(w) + 1, 0);
  std::size_t slot = 0;
  for (auto letter : w) {
    if (letter) ++slot;
    else ++e[slot];
  }
  return Poly::monomial(std::move(e));
}

Poly rho(const BWordSum& s, std::size_t d) {
  Poly out(d + 1);
  for (const auto& [w, c] : s.terms()) {
    if (depth(w) != d) throw std::invalid_argument("rho: word of unexpected depth");
    out += rho(w) * c;
  }
  return out;
}

Poly rho_bar(const BWord& w) { return reduce(rho(w)); }

Poly rho_bar(const BWordSum& s, std::size_t d) { return reduce(rho(s, d)); }

BWord word_of_monomial(const Exponent& e) {
  if (e.empty()) throw std::invalid_argument("word_of_monomial: arity must be >= 1");
  BWord w;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) w.push_back(1);
    w.insert(w.end(), e[i], 0);
  }
  return w;
}

BWordSum words_of_poly(const Poly& p) {
  BWordSum out;
  for (const auto& [e, c] : p.terms()) out.add(word_of_monomial(e), c);
  return out;
}

Poly translate_lift(const Poly& f) {
  // f(y1 - y0, ..., yr - y0): shift to y1..yr, then y_i -> y_i - y0 one at a time
  const std::size_t r = f.arity();
  std::vector<std::size_t> up(r);
  for (std::size_t i = 0; i < r; ++i) up[i] = i + 1;
  Poly out = f.relabel(up, r + 1);
  for (std::size_t i = 1; i <= r; ++i) out = out.shear(i, 0, -1);
  return out;
}

Poly reduce(const Poly& g) {
  if (g.arity() == 0) throw std::invalid_argument("reduce: arity must be >= 1");
  Poly out(g.arity() - 1);
  for (const auto& [e, c] : g.terms()) {
    if (e[0] != 0) continue;
    out.add_term(Exponent(e.begin() + 1, e.end()), c);
  }
  return out;
}

std::optional<YWord> alpha(const BWord& w) {
  if (w.empty() || w.front() == 0) return std::nullopt;
  YWord y;
  for (auto letter : w) {
    if (letter) y.push_back(1);
    else ++y.back();
  }
  return y;
}

YWordSum alpha(const BWordSum& s) {
  YWordSum out;
  for (const auto& [w, c] : s.terms())
    if (auto y = alpha(w)) out.add(std::move(*y), c);
  return out;
}

BWordSum antipode(const BWord& w) {
  return BWordSum(BWord(w.rbegin(), w.rend()), (w.size() % 2) ? -1 : 1);
}

BWordSum word_compose(const BWord& a, const BWord& g) {
  const auto first_e1 = std::find(g.begin(), g.end(), std::uint8_t{1});
  const BWord lead(g.begin(), first_e1);  // e0^n
  if (first_e1 == g.end()) {
    BWord w = lead;
    w.insert(w.end(), a.begin(), a.end());
    return BWordSum(std::move(w));
  }
  const BWord rest(first_e1 + 1, g.end());
  BWordSum out;

  BWord w = lead;
  w.insert(w.end(), a.begin(), a.end());
  w.push_back(1);
  w.insert(w.end(), rest.begin(), rest.end());
  out.add(std::move(w), 1);

  BWord head = lead;
  head.push_back(1);
  BWord star(a.rbegin(), a.rend());
  w = head;
  w.insert(w.end(), star.begin(), star.end());
  w.insert(w.end(), rest.begin(), rest.end());
  out.add(std::move(w), (a.size() % 2) ? -1 : 1);

  const auto inner = word_compose(a, rest);
  for (const auto& [u, c] : inner.terms()) {
    w = head;
    w.insert(w.end(), u.begin(), u.end());
    out.add(std::move(w), c);
  }
  return out;
}

BWordSum word_compose(const BWordSum& a, const BWordSum& g) {
  BWordSum out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : g.terms()) {
      auto s = word_compose(u, v);
      s *= cu * cv;
      out += s;
    }
  return out;
}

std::vector<CoactionTerm> coaction_component(std::size_t r, const std::vector<std::uint8_t>& a) {
  if (r == 0) throw std::invalid_argument("coaction_component: r must be >= 1");
  for (auto x : a)
    if (x > 1) throw std::invalid_argument("coaction_component: letters must be 0 or 1");
  const std::size_t n = a.size();
  std::map<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>, Rational> acc;
  if (r > n) return {};
  // full sequence with a_0 = 0 and a_{n+1} = 1
  std::vector<std::uint8_t> full;
  full.reserve(n + 2);
  full.push_back(0);
  full.insert(full.end(), a.begin(), a.end());
  full.push_back(1);
  for (std::size_t p = 0; p + r <= n; ++p) {
    const auto left = full[p], right = full[p + r + 1];
    if (left == right) continue;
    std::vector<std::uint8_t> sub(full.begin() + p + 1, full.begin() + p + r + 1);
    Rational c = 1;
    if (left == 1) {
      std::reverse(sub.begin(), sub.end());
      if (r % 2) c = -1;
    }
    std::vector<std::uint8_t> quotient(full.begin() + 1, full.begin() + p + 1);
    quotient.insert(quotient.end(), full.begin() + p + r + 1, full.begin() + n + 1);
    acc[{std::move(sub), std::move(quotient)}] += c;
  }
  std::vector<CoactionTerm> out;
  for (auto& [key, c] : acc)
    if (sgn(c) != 0) out.push_back({key.first, key.second, c});
  return out;
}

std::vector<BWord> words_of(std::size_t w, std::size_t d) {
  std::vector<BWord> out;
  if (d > w) return out;
  BWord word(w, 0);
  std::fill(word.begin(), word.begin() + d, 1);
  // lexicographic: start from the smallest arrangement (e1s at the end)
  std::sort(word.begin(), word.end());
  do {
    out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace dgmzv
