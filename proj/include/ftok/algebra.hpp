#pragma once

// Exact sparse Laurent polynomials in the variables x_i, y_i, a_j, t, z_i,
// alpha_j with arbitrary-precision integer coefficients.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ftok/error.hpp"

namespace ftok {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Declaration order is the variable order x < y < a < t < z < alpha.
enum class Family : std::uint8_t { x, y, a, t, z, alpha };

struct Variable {
  Family family = Family::x;
  int index = 1;

  static Variable x(int i) { return make(Family::x, i); }
  static Variable y(int i) { return make(Family::y, i); }
  static Variable a(int j) { return make(Family::a, j); }
  static Variable t() { return Variable{Family::t, 0}; }
  static Variable z(int i) { return make(Family::z, i); }
  static Variable alpha(int j) { return make(Family::alpha, j); }

  static Variable make(Family f, int index) {
    if (f == Family::t) return Variable{Family::t, 0};
    const int lowest = f == Family::a ? 0 : 1;
    if (index < lowest)
      throw Error(Errc::parse_error, "variable index out of range: " + std::to_string(index));
    return Variable{f, index};
  }

  std::string name() const {
    switch (family) {
      case Family::x: return "x" + std::to_string(index);
      case Family::y: return "y" + std::to_string(index);
      case Family::a: return "a" + std::to_string(index);
      case Family::t: return "t";
      case Family::z: return "z" + std::to_string(index);
      case Family::alpha: return "al" + std::to_string(index);
    }
    return "?";
  }

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Power product of variables; exponents are nonzero and may be negative.
class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;
  explicit Monomial(Variable v, int e = 1) {
    if (e != 0) factors_.emplace_back(v, e);
  }

  static Monomial from_factors(std::vector<Factor> fs) {
    std::sort(fs.begin(), fs.end(),
              [](const Factor& l, const Factor& r) { return l.first < r.first; });
    Monomial m;
    for (const auto& [v, e] : fs) {
      if (!m.factors_.empty() && m.factors_.back().first == v)
        m.factors_.back().second += e;
      else
        m.factors_.emplace_back(v, e);
      if (m.factors_.back().second == 0) m.factors_.pop_back();
    }
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  int exponent(Variable v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, Variable w) { return f.first < w; });
    return it != factors_.end() && it->first == v ? it->second : 0;
  }

  int family_degree(Family f) const {
    int d = 0;
    for (const auto& [v, e] : factors_)
      if (v.family == f) d += e;
    return d;
  }

  Monomial inverse() const {
    Monomial m = *this;
    for (auto& f : m.factors_) f.second = -f.second;
    return m;
  }

  friend Monomial operator*(const Monomial& l, const Monomial& r) {
    Monomial out;
    out.factors_.reserve(l.factors_.size() + r.factors_.size());
    auto i = l.factors_.begin();
    auto j = r.factors_.begin();
    while (i != l.factors_.end() || j != r.factors_.end()) {
      if (j == r.factors_.end() || (i != l.factors_.end() && i->first < j->first)) {
        out.factors_.push_back(*i++);
      } else if (i == l.factors_.end() || j->first < i->first) {
        out.factors_.push_back(*j++);
      } else {
        const int e = i->second + j->second;
        if (e != 0) out.factors_.emplace_back(i->first, e);
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;  // sorted by variable
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  Polynomial() = default;
  Polynomial(long long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial{}, BigInt(c));
  }
  explicit Polynomial(const BigInt& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  explicit Polynomial(Variable v) { terms_.emplace(Monomial(v), BigInt(1)); }
  Polynomial(const Monomial& m, const BigInt& c) {
    if (c != 0) terms_.emplace(m, c);
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_monomial() const { return terms_.size() == 1; }

  /// A single term whose coefficient is a unit of the integers.
  bool is_invertible_monomial() const {
    return is_monomial() && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
  }

  /// Largest exponent of `v` over all terms (0 for the zero polynomial).
  int max_exponent(Variable v) const {
    std::optional<int> best;
    for (const auto& [m, c] : terms_) best = std::max(best.value_or(m.exponent(v)), m.exponent(v));
    return best.value_or(0);
  }

  int min_exponent(Variable v) const {
    std::optional<int> best;
    for (const auto& [m, c] : terms_) best = std::min(best.value_or(m.exponent(v)), m.exponent(v));
    return best.value_or(0);
  }

  bool involves(Variable v) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [v](const auto& term) { return term.first.exponent(v) != 0; });
  }

  /// Sum of the coefficients of all terms whose degree in family `f` equals `d`.
  Polynomial family_slice(Family f, int d) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
      if (m.family_degree(f) == d) out.terms_.emplace(m, c);
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
  friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
  friend Polynomial operator-(Polynomial p) {
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }

  friend Polynomial operator*(const Polynomial& l, const Polynomial& r) {
    Polynomial out;
    if (l.is_zero() || r.is_zero()) return out;
    for (const auto& [ml, cl] : l.terms_)
      for (const auto& [mr, cr] : r.terms_) {
        auto [it, inserted] = out.terms_.try_emplace(ml * mr, cl * cr);
        if (!inserted) it->second += cl * cr;
      }
    out.drop_zeros();
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Multiplies every term by the monomial `m` (a Laurent shift).
  Polynomial shifted_by(const Monomial& m, const BigInt& c = 1) const {
    Polynomial out;
    for (const auto& [mm, cc] : terms_) out.terms_.emplace(mm * m, cc * c);
    return out;
  }

  std::string to_string() const;
  static Polynomial parse(std::string_view text);

 private:
  void add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void drop_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }

  TermMap terms_;
};

inline Polynomial pow(const Polynomial& base, unsigned e) {
  Polynomial result = 1;
  Polynomial b = base;
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

template <class Range>
Polynomial product(const Range& factors) {
  Polynomial p = 1;
  for (const auto& f : factors) p *= f;
  return p;
}

/// Shorthand constructors, intended for `using namespace ftok::sym;`.
namespace sym {
inline Polynomial x(int i) { return Polynomial(Variable::x(i)); }
inline Polynomial y(int i) { return Polynomial(Variable::y(i)); }
inline Polynomial a(int j) { return Polynomial(Variable::a(j)); }
inline Polynomial t() { return Polynomial(Variable::t()); }
inline Polynomial z(int i) { return Polynomial(Variable::z(i)); }
inline Polynomial alpha(int j) { return Polynomial(Variable::alpha(j)); }
/// `v^e` with possibly negative `e`.
inline Polynomial power(Variable v, int e) { return Polynomial(Monomial(v, e), 1); }
}  // namespace sym

// ---------------------------------------------------------------------------
// Canonical text form.

namespace detail {

// Order of variables *inside* a printed monomial: family name alphabetical
// (a, al, t, x, y, z), then index ascending.
inline int print_rank(Family f) {
  switch (f) {
    case Family::a: return 0;
    case Family::alpha: return 1;
    case Family::t: return 2;
    case Family::x: return 3;
    case Family::y: return 4;
    case Family::z: return 5;
  }
  return 6;
}

/// Term order: total degree descending, then graded-lex in variable order
/// (the first variable whose exponents differ decides; larger exponent first).
inline bool canonical_before(const Monomial& l, const Monomial& r) {
  if (l.degree() != r.degree()) return l.degree() > r.degree();
  const auto& lf = l.factors();
  const auto& rf = r.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lf.size() || j < rf.size()) {
    if (j == rf.size() || (i < lf.size() && lf[i].first < rf[j].first))
      return lf[i].second > 0;
    if (i == lf.size() || rf[j].first < lf[i].first) return rf[j].second < 0;
    if (lf[i].second != rf[j].second) return lf[i].second > rf[j].second;
    ++i;
    ++j;
  }
  return false;
}

inline std::string monomial_text(const Monomial& m) {
  std::vector<Monomial::Factor> fs = m.factors();
  std::sort(fs.begin(), fs.end(), [](const auto& l, const auto& r) {
    const int rl = print_rank(l.first.family);
    const int rr = print_rank(r.first.family);
    return rl != rr ? rl < rr : l.first.index < r.first.index;
  });
  std::string out;
  for (const auto& [v, e] : fs) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial run() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty input");
    Polynomial result;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) {
        if (first) fail("expected a term");
        break;
      }
      int sign = 1;
      if (first) {
        if (peek() == '-') {
          sign = -1;
          ++pos_;
        }
      } else {
        if (peek() == '+') {
          ++pos_;
        } else if (peek() == '-') {
          sign = -1;
          ++pos_;
        } else {
          fail("expected '+' or '-'");
        }
      }
      skip_ws();
      result += term(sign);
      first = false;
    }
    return result;
  }

 private:
  Polynomial term(int sign) {
    BigInt coefficient = sign;
    std::vector<Monomial::Factor> factors;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient *= integer();
      skip_ws();
      if (peek() != '*') return Polynomial(Monomial{}, coefficient);
      ++pos_;
      skip_ws();
    }
    factors.push_back(factor());
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      skip_ws();
      factors.push_back(factor());
    }
    return Polynomial(Monomial::from_factors(std::move(factors)), coefficient);
  }

  Monomial::Factor factor() {
    Family f{};
    const char c = peek();
    if (c == 'a' && pos_ + 1 < s_.size() && s_[pos_ + 1] == 'l') {
      f = Family::alpha;
      pos_ += 2;
    } else if (c == 'x' || c == 'y' || c == 'a' || c == 'z' || c == 't') {
      f = c == 'x' ? Family::x : c == 'y' ? Family::y : c == 'a' ? Family::a
                   : c == 'z' ? Family::z : Family::t;
      ++pos_;
    } else {
      fail("expected a variable");
    }
    int index = 0;
    if (f != Family::t) {
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index");
      index = static_cast<int>(integer());
    }
    int e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      int esign = 1;
      if (peek() == '-') {
        esign = -1;
        ++pos_;
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      e = esign * static_cast<int>(integer());
    }
    return {Variable::make(f, index), e};
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::parse_error, why + " at offset " + std::to_string(pos_) + " in '" +
                                       std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& term : terms_) order.push_back(&term);
  std::sort(order.begin(), order.end(), [](const auto* l, const auto* r) {
    return detail::canonical_before(l->first, r->first);
  });
  std::string out;
  bool first = true;
  for (const auto* term : order) {
    const auto& [m, c] = *term;
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (m.is_unit()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + "*";
      out += detail::monomial_text(m);
    }
    first = false;
  }
  return out;
}

inline Polynomial Polynomial::parse(std::string_view text) { return detail::PolyParser(text).run(); }

inline std::string canonical(const Polynomial& p) { return p.to_string(); }
inline Polynomial parse_polynomial(std::string_view text) { return Polynomial::parse(text); }

// ---------------------------------------------------------------------------
// Substitution.

/// Ring homomorphism fixing every variable it has no rule for. Exact
/// variable rules take precedence over family rules.
class Substitution {
 public:
  using FamilyRule = std::function<Polynomial(int index)>;

  Substitution& set(Variable v, Polynomial image) {
    exact_.insert_or_assign(v, std::move(image));
    return *this;
  }
  Substitution& set_family(Family f, FamilyRule rule) {
    families_.insert_or_assign(f, std::move(rule));
    return *this;
  }

  std::optional<Polynomial> image_of(Variable v) const {
    if (auto it = exact_.find(v); it != exact_.end()) return it->second;
    if (auto it = families_.find(v.family); it != families_.end()) return it->second(v.index);
    return std::nullopt;
  }

  Polynomial apply(const Polynomial& p) const {
    std::map<std::pair<Variable, int>, Polynomial> powers;
    auto power_of = [&](Variable v, int e) -> const Polynomial& {
      auto key = std::make_pair(v, e);
      if (auto it = powers.find(key); it != powers.end()) return it->second;
      auto image = image_of(v);
      Polynomial value;
      if (!image) {
        value = sym::power(v, e);
      } else if (e > 0) {
        value = pow(*image, static_cast<unsigned>(e));
      } else {
        if (!image->is_invertible_monomial())
          throw Error(Errc::non_invertible_substitution,
                      v.name() + " appears with exponent " + std::to_string(e) +
                          " but maps to " + image->to_string());
        const auto& [m, c] = *image->terms().begin();
        const Polynomial inverse(m.inverse(), c);  // c is +-1, its own inverse
        value = pow(inverse, static_cast<unsigned>(-e));
      }
      return powers.emplace(key, std::move(value)).first->second;
    };

    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
      Polynomial term(Monomial{}, c);
      for (const auto& [v, e] : m.factors()) term *= power_of(v, e);
      out += term;
    }
    return out;
  }

 private:
  std::map<Variable, Polynomial> exact_;
  std::map<Family, FamilyRule> families_;
};

inline Polynomial substitute(const Polynomial& p, const Substitution& s) { return s.apply(p); }

// ---------------------------------------------------------------------------
// Determinants.

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant by dynamic programming over column subsets: row r is matched
/// to a column c not yet used; the sign counts used columns to the right of c.
/// Division-free, so it works over any commutative ring.
inline Polynomial det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw Error(Errc::non_square_matrix, "row of length " + std::to_string(row.size()) +
                                               " in a matrix with " + std::to_string(n) + " rows");
  if (n == 0) return 1;
  if (n > 20) throw Error(Errc::non_square_matrix, "matrix too large for subset expansion");

  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<Polynomial> dp(full + 1);
  dp[0] = 1;
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (dp[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      if (m[row][c].is_zero()) continue;
      const int larger = __builtin_popcountll(mask >> (c + 1));
      Polynomial contribution = dp[mask] * m[row][c];
      if (larger % 2 == 0)
        dp[mask | (std::size_t{1} << c)] += contribution;
      else
        dp[mask | (std::size_t{1} << c)] -= contribution;
    }
  }
  return dp[full];
}

}  // namespace ftok
