#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ftok/algebra.hpp"
#include "ftok/error.hpp"
#include "ftok/shapes.hpp"
#include "ftok/tableaux.hpp"

namespace ftok {

/// Argument list of q_m. Each slot is x_k (repeatable, factor x_k + a_s) or
/// y_k (at most once, factor y_k - a_s); the l-th chosen slot uses
/// s = l + offset.
class ShiftedAlphabet {
 public:
  struct Slot {
    Variable var;
    int offset = 0;
    bool repeatable() const { return var.family == Family::x; }
  };

  ShiftedAlphabet& x(int k) {
    slots_.push_back({Variable::x(k), pending_});
    return *this;
  }
  ShiftedAlphabet& y(int k) {
    slots_.push_back({Variable::y(k), pending_});
    return *this;
  }
  /// Raises the a-index of every slot added after this point.
  ShiftedAlphabet& sh(int times = 1) {
    pending_ += times;
    return *this;
  }
  ShiftedAlphabet& push(Variable v, int offset) {
    slots_.push_back({v, offset});
    return *this;
  }

  const std::vector<Slot>& slots() const { return slots_; }

  std::string to_string() const {
    std::string out;
    for (const auto& s : slots_) {
      if (!out.empty()) out += ", ";
      if (s.offset) out += "sh^" + std::to_string(s.offset) + " ";
      out += s.var.name();
    }
    return out;
  }

 private:
  std::vector<Slot> slots_;
  int pending_ = 0;
};

/// x_k, y_{k+1}, x_{k+1}, ..., y_n, x_n with no shifts.
inline ShiftedAlphabet lemma2_alphabet(int k, int n) {
  ShiftedAlphabet al;
  al.x(k);
  for (int i = k + 1; i <= n; ++i) al.y(i).x(i);
  return al;
}

inline Polynomial q_poly(const ShiftedAlphabet& alpha, int m) {
  if (m < 0) return Polynomial{};
  if (m == 0) return 1;
  using namespace sym;
  const auto& slots = alpha.slots();
  const std::size_t s_count = slots.size();
  std::map<std::pair<std::size_t, int>, Polynomial> memo;
  std::function<Polynomial(std::size_t, int)> g = [&](std::size_t s, int used) -> Polynomial {
    if (used == m) return 1;
    if (s == s_count) return Polynomial{};
    const auto key = std::make_pair(s, used);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto& slot = slots[s];
    const int max_take = slot.repeatable() ? m - used : 1;
    Polynomial sum = g(s + 1, used);
    Polynomial run = 1;
    for (int c = 1; c <= max_take; ++c) {
      const Polynomial v(slot.var);
      const Polynomial shift = a(used + c + slot.offset);
      run *= slot.repeatable() ? v + shift : v - shift;
      sum += run * g(s + 1, used + c);
    }
    return memo.emplace(key, sum).first->second;
  };
  return g(0, 0);
}

/// Sum over k <= i_1 <= ... <= i_m <= n of prod_l (x_{i_l} + a_{i_l - k + l}).
inline Polynomial h_poly(int m, int k, int n) {
  if (m < 0) return Polynomial{};
  if (m == 0) return 1;
  using namespace sym;
  Polynomial sum;
  std::function<void(int, int, Polynomial)> go = [&](int l, int lo, Polynomial acc) {
    if (l > m) {
      sum += acc;
      return;
    }
    for (int i = lo; i <= n; ++i) go(l + 1, i, acc * (x(i) + a(i - k + l)));
  };
  go(1, k, Polynomial(1));
  return sum;
}

// ---------------------------------------------------------------------------

enum class SymKind { schur, factorial_schur, big_p, big_q, factorial_big_p, factorial_big_q };

inline SymKind parse_sym_kind(std::string_view s) {
  if (s == "schur") return SymKind::schur;
  if (s == "factorial-schur" || s == "factorialSchur") return SymKind::factorial_schur;
  if (s == "p" || s == "bigP") return SymKind::big_p;
  if (s == "q" || s == "bigQ") return SymKind::big_q;
  if (s == "factorial-p" || s == "factorialBigP") return SymKind::factorial_big_p;
  if (s == "factorial-q" || s == "factorialBigQ") return SymKind::factorial_big_q;
  throw Error(Errc::parse_error, "unknown symmetric function kind '" + std::string(s) + "'");
}

inline Polynomial set_a0_to_zero(const Polynomial& p) {
  return Substitution().set(Variable::a(0), Polynomial{}).apply(p);
}

inline Polynomial tableau_sum(SymKind kind, const Partition& shape, int n) {
  switch (kind) {
    case SymKind::schur: return weighted_sum(TableauKind::sst, shape, n, WeightScheme::plain);
    case SymKind::factorial_schur: return weighted_sum(TableauKind::sst, shape, n, WeightScheme::factorial);
    case SymKind::big_p: return weighted_sum(TableauKind::primed_p, shape, n, WeightScheme::plain);
    case SymKind::big_q: return weighted_sum(TableauKind::primed_q, shape, n, WeightScheme::plain);
    case SymKind::factorial_big_p:
      return set_a0_to_zero(weighted_sum(TableauKind::primed_p, shape, n, WeightScheme::factorial_raw));
    case SymKind::factorial_big_q:
      return weighted_sum(TableauKind::primed_q, shape, n, WeightScheme::factorial_raw);
  }
  return Polynomial{};
}

/// s_mu(x | a) in n variables.
inline Polynomial factorial_schur(const Partition& mu, int n) { return tableau_sum(SymKind::factorial_schur, mu, n); }

// ---------------------------------------------------------------------------
// Determinantal formulas.

enum class DetKind { lemma1, lemma2 };

/// Entry (k, l) is h_{mu_l - l + k}(x_k, ..., x_n | a).
inline PolyMatrix lemma1_matrix(const Partition& mu, int n) {
  if (mu.length() > n)
    throw Error(Errc::mu_too_long, "l(" + mu.to_string() + ") exceeds n = " + std::to_string(n));
  std::map<std::pair<int, int>, Polynomial> memo;
  PolyMatrix m(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      const int deg = mu.part(l) - l + k;
      auto it = memo.find({k, deg});
      if (it == memo.end()) it = memo.emplace(std::make_pair(k, deg), h_poly(deg, k, n)).first;
      m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] = it->second;
    }
  return m;
}

/// Entry (k, l) is x_k q_{lambda_l - 1}(x_k, y_{k+1}, x_{k+1}, ..., y_n, x_n | a).
inline PolyMatrix lemma2_matrix(const Partition& lambda, int n) {
  if (!lambda.is_strict() || lambda.length() != n)
    throw Error(Errc::bad_params, "needs a strict partition with exactly n = " + std::to_string(n) +
                                      " nonzero parts, got " + lambda.to_string());
  std::map<std::pair<int, int>, Polynomial> memo;
  PolyMatrix m(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      const int deg = lambda.part(l) - 1;
      auto it = memo.find({k, deg});
      if (it == memo.end())
        it = memo.emplace(std::make_pair(k, deg), sym::x(k) * q_poly(lemma2_alphabet(k, n), deg)).first;
      m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] = it->second;
    }
  return m;
}

inline Polynomial det_formula(DetKind kind, const Partition& shape, int n) {
  return det(kind == DetKind::lemma1 ? lemma1_matrix(shape, n) : lemma2_matrix(shape, n));
}

enum class TheoremClass { P, Q };

/// prod_{i<j} (x_i + y_j), or prod_{i<=j} when `diagonal`.
inline Polynomial xy_product(int n, bool diagonal) {
  using namespace sym;
  Polynomial p = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = diagonal ? i : i + 1; j <= n; ++j) p *= x(i) + y(j);
  return p;
}

inline Polynomial x_product(int n) {
  Polynomial p = 1;
  for (int i = 1; i <= n; ++i) p *= sym::x(i);
  return p;
}

inline Polynomial theorem_rhs(const Partition& mu, int n, TheoremClass cls) {
  if (mu.length() > n)
    throw Error(Errc::mu_too_long, "l(" + mu.to_string() + ") exceeds n = " + std::to_string(n));
  const Polynomial s = factorial_schur(mu.normalized(), n);
  if (cls == TheoremClass::P) return x_product(n) * xy_product(n, false) * s;
  return xy_product(n, true) * s;
}

}  // namespace ftok
