#include "dgmzv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dgmzv {

unsigned total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool GrLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Poly Poly::constant(std::size_t arity, const Rational& c) {
  Poly p(arity);
  p.add_term(Exponent(arity, 0), c);
  return p;
}

Poly Poly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw std::out_of_range("variable index out of range");
  Exponent e(arity, 0);
  e[index] = 1;
  return monomial(std::move(e));
}

Poly Poly::monomial(Exponent e, const Rational& c) {
  Poly p(e.size());
  p.add_term(std::move(e), c);
  return p;
}

Poly Poly::linear(std::size_t arity, std::span<const std::pair<long, std::size_t>> parts) {
  Poly p(arity);
  for (const auto& [c, i] : parts) {
    if (i >= arity) throw std::out_of_range("variable index out of range");
    Exponent e(arity, 0);
    e[i] = 1;
    p.add_term(std::move(e), Rational(c));
  }
  return p;
}

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) { add_term(Exponent(e), c); }

void Poly::add_term(Exponent&& e, const Rational& c) {
  if (e.size() != arity_) throw std::invalid_argument("exponent length does not match arity");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<unsigned> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return total_degree(terms_.begin()->first);
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.arity_ != arity_) throw std::invalid_argument("arity mismatch in addition");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.arity_ != arity_) throw std::invalid_argument("arity mismatch in subtraction");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("arity mismatch in multiplication");
  Poly out(a.arity_);
  Exponent e(a.arity_);
  Rational c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(arity_, 1);
  Poly base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Poly Poly::relabel(std::span<const std::size_t> targets, std::size_t new_arity) const {
  if (targets.size() != arity_) throw std::invalid_argument("relabel: wrong number of targets");
  for (auto t : targets)
    if (t >= new_arity) throw std::out_of_range("relabel: target out of range");
  Poly out(new_arity);
  Exponent e(new_arity);
  for (const auto& [ex, c] : terms_) {
    std::fill(e.begin(), e.end(), 0u);
    for (std::size_t i = 0; i < arity_; ++i) e[targets[i]] += ex[i];
    out.add_term(e, c);
  }
  return out;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != arity_) throw std::invalid_argument("substitute: wrong number of images");
  const std::size_t out_arity = images.empty() ? 0 : images.front().arity();
  for (const auto& im : images)
    if (im.arity() != out_arity) throw std::invalid_argument("substitute: images differ in arity");
  Poly out(out_arity);
  if (images.empty()) {
    for (const auto& [e, c] : terms_) out.add_term(Exponent{}, c);
    return out;
  }
  // powers[i][k] = images[i]^k, filled on demand
  std::vector<std::vector<Poly>> powers(arity_);
  auto power = [&](std::size_t i, unsigned k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(out_arity, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  for (const auto& [e, c] : terms_) {
    Poly term = constant(out_arity, c);
    for (std::size_t i = 0; i < arity_; ++i)
      if (e[i]) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

Poly Poly::shear(std::size_t j, std::size_t k, long s) const {
  if (j >= arity_ || k >= arity_ || j == k) throw std::invalid_argument("shear: bad variable indices");
  Poly out(arity_);
  if (s == 0) return *this;
  std::vector<Rational> scaled;  // C(b, t) s^t
  for (const auto& [e, c] : terms_) {
    const std::uint32_t b = e[j];
    scaled.assign(b + 1, c);
    Integer binom = 1, power = 1;
    for (std::uint32_t t = 0; t <= b; ++t) {
      scaled[t] *= binom * power;
      binom = binom * (b - t) / (t + 1);
      power *= s;
    }
    Exponent f = e;
    for (std::uint32_t t = 0; t <= b; ++t) {
      f[j] = b - t;
      f[k] = e[k] + t;
      out.add_term(f, scaled[t]);
    }
  }
  return out;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= arity_) throw std::out_of_range("derivative: variable out of range");
  Poly out(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    out.add_term(std::move(d), c * e[var]);
  }
  return out;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch in division");
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& [lead_e, lead_c] = *b.terms().begin();
  Poly quotient(a.arity());
  Poly rem = a;
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().begin();
    Exponent q(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < lead_e[i]) throw std::domain_error("polynomial division is not exact");
      q[i] = re[i] - lead_e[i];
    }
    const Rational qc = rc / lead_c;
    Poly t = Poly::monomial(q, qc);
    quotient += t;
    rem -= t * b;
  }
  return quotient;
}

std::string serialize(const Poly& p) {
  std::ostringstream os;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << " : " << to_string(c) << '\n';
  }
  return os.str();
}

Poly parse_poly(std::string_view text, std::size_t arity) {
  Poly p(arity);
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("poly line without ':'");
    Exponent e;
    std::istringstream es(line.substr(0, colon));
    std::string field;
    while (std::getline(es, field, ',')) {
      if (field.find_first_not_of(" \t") == std::string::npos) continue;
      e.push_back(static_cast<std::uint32_t>(std::stoul(field)));
    }
    if (e.size() != arity) throw std::invalid_argument("poly line has wrong arity");
    p.add_term(std::move(e), parse_rational(line.substr(colon + 1)));
  }
  return p;
}

std::string to_pretty(const Poly& p, std::string_view prefix, unsigned first_index) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = total_degree(e) == 0;
    bool wrote = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      os << (wrote ? "*" : "") << prefix << (first_index + i);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {
void fill_monomials(std::size_t pos, unsigned remaining, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    cur[pos] = k;
    fill_monomials(pos + 1, remaining - k, cur, out);
  }
}
}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t arity, unsigned degree) {
  std::vector<Exponent> out;
  if (arity == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent cur(arity, 0);
  fill_monomials(0, degree, cur, out);
  return out;
}

}  // namespace dgmzv
