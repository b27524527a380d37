#pragma once

// Strict Gelfand-Tsetlin patterns, alternating sign matrices with
// lambda-boundary, compass point matrices, and the maps between them and
// shifted tableaux.

#include <algorithm>
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

using IntMatrix = std::vector<std::vector<int>>;

/// Triangular array; rows[0] is the bottom row m_11, rows[n-1] the top row.
struct GTPattern {
  std::vector<std::vector<int>> rows;

  int size() const { return static_cast<int>(rows.size()); }
  /// m_{ij}, 1-based, j <= i.
  int m(int i, int j) const { return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
  Partition top() const { return rows.empty() ? Partition{} : Partition(rows.back()); }
  int row_sum(int i) const {
    if (i < 1) return 0;
    int s = 0;
    for (int v : rows[static_cast<std::size_t>(i - 1)]) s += v;
    return s;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) out += ' ';
      out += '(';
      for (std::size_t j = 0; j < rows[i].size(); ++j) out += (j ? "," : "") + std::to_string(rows[i][j]);
      out += ')';
    }
    return out;
  }

  friend bool operator==(const GTPattern&, const GTPattern&) = default;
};

/// Shape, nonnegativity, betweenness and (optionally) strict rows.
inline void validate_gtp(const GTPattern& g, bool strict = true) {
  for (int i = 1; i <= g.size(); ++i) {
    if (static_cast<int>(g.rows[static_cast<std::size_t>(i - 1)].size()) != i)
      throw Error(Errc::invalid_pattern, "row " + std::to_string(i) + " must have " + std::to_string(i) + " entries");
    for (int j = 1; j <= i; ++j) {
      if (g.m(i, j) < 0) throw Error(Errc::invalid_pattern, "negative entry");
      if (strict && j < i && g.m(i, j) <= g.m(i, j + 1))
        throw Error(Errc::invalid_pattern, "row " + std::to_string(i) + " not strictly decreasing");
      if (i > 1 && j < i && !(g.m(i, j) >= g.m(i - 1, j) && g.m(i - 1, j) >= g.m(i, j + 1)))
        throw Error(Errc::invalid_pattern, "betweenness fails at m_" + std::to_string(i) + std::to_string(j));
    }
  }
}

inline bool is_valid_gtp(const GTPattern& g, bool strict = true) {
  try {
    validate_gtp(g, strict);
    return true;
  } catch (const Error&) {
    return false;
  }
}

/// Strict patterns with the given top row, filled row by row downwards with
/// entries ascending left to right (lexicographic on the bottom-up rows).
inline std::vector<GTPattern> enumerate_gtp(const Partition& top) {
  if (!top.is_strict()) throw Error(Errc::invalid_shape, "top row " + top.to_string() + " is not strict");
  const int n = static_cast<int>(top.size());
  std::vector<GTPattern> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  rows[static_cast<std::size_t>(n - 1)] = top.parts();
  std::function<void(int, int)> fill = [&](int i, int j) {
    // filling row i (1-based), entry j
    if (i == 0) {
      out.push_back({rows});
      return;
    }
    const auto& above = rows[static_cast<std::size_t>(i)];
    auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (j > i) {
      fill(i - 1, 1);
      return;
    }
    const int hi = above[static_cast<std::size_t>(j - 1)];
    int lo = above[static_cast<std::size_t>(j)];
    int cap = hi;
    if (j > 1) cap = std::min(cap, row[static_cast<std::size_t>(j - 2)] - 1);
    for (int v = lo; v <= cap; ++v) {
      row.push_back(v);
      fill(i, j + 1);
      row.pop_back();
    }
  };
  fill(n - 1, 1);
  std::sort(out.begin(), out.end(), [](const GTPattern& l, const GTPattern& r) { return l.rows < r.rows; });
  return out;
}

/// m_{ij} = number of entries <= i in row j.
inline GTPattern gtp_from_shifted(const Tableau& s) {
  if (s.kind != TableauKind::shifted) throw Error(Errc::invalid_tableau, "expected a shifted tableau");
  require_valid(s);
  const int n = s.n;
  if (s.shape.length() != n || static_cast<int>(s.shape.size()) != n)
    throw Error(Errc::invalid_tableau, "shape must have exactly n = " + std::to_string(n) + " nonzero parts");
  GTPattern g;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> row;
    for (int j = 1; j <= i; ++j) {
      int c = 0;
      for (const Entry& e : s.rows[static_cast<std::size_t>(j - 1)]) c += e.value <= i ? 1 : 0;
      row.push_back(c);
    }
    g.rows.push_back(std::move(row));
  }
  return g;
}

/// In row j, positions m_{k-1,j}+1 .. m_{kj} hold k (with m_{j-1,j} = 0).
inline Tableau shifted_from_gtp(const GTPattern& g) {
  validate_gtp(g);
  const int n = g.size();
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    for (int k = j; k <= n; ++k) {
      const int from = k == j ? 0 : g.m(k - 1, j);
      for (int p = from + 1; p <= g.m(k, j); ++p) rows[static_cast<std::size_t>(j - 1)].push_back({k, false});
    }
  Tableau t(TableauKind::shifted, g.top(), n, std::move(rows));
  try {
    if (auto v = validate(t)) throw Error(Errc::invalid_pattern, "pattern gives an invalid shifted tableau (" + v->rule + ")");
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_pattern) throw;
    throw Error(Errc::invalid_pattern, e.what());
  }
  return t;
}

// ---------------------------------------------------------------------------
// Alternating sign matrices.

struct ASM {
  IntMatrix entries;

  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
  int at(int i, int j) const { return entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }

  /// Columns with sum 1, largest first.
  Partition shape() const {
    std::vector<int> parts;
    for (int j = cols(); j >= 1; --j) {
      int s = 0;
      for (int i = 1; i <= rows(); ++i) s += at(i, j);
      if (s == 1) parts.push_back(j);
    }
    return Partition(parts);
  }

  friend bool operator==(const ASM&, const ASM&) = default;
};

/// Conditions A1 to A5 for the boundary shape lambda (columns 1..lambda_1).
inline void validate_asm(const ASM& a, const Partition& lambda) {
  const int n = a.rows();
  const int m = lambda.largest();
  if (!lambda.is_strict() || lambda.length() != n || static_cast<int>(lambda.size()) != n)
    throw Error(Errc::invalid_asm, "boundary " + lambda.to_string() + " must be strict with " + std::to_string(n) + " parts");
  for (const auto& row : a.entries)
    if (static_cast<int>(row.size()) != m) throw Error(Errc::invalid_asm, "rows must have lambda_1 = " + std::to_string(m) + " entries");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      if (a.at(i, j) < -1 || a.at(i, j) > 1) throw Error(Errc::invalid_asm, "entry outside {-1,0,1}");
  for (int i = 1; i <= n; ++i) {
    int last = 0;
    int sum = 0;
    for (int j = 1; j <= m; ++j) {
      const int v = a.at(i, j);
      if (v == 0) continue;
      if (v == last) throw Error(Errc::invalid_asm, "A1: row " + std::to_string(i) + " does not alternate");
      last = v;
      sum += v;
    }
    if (last != 1) throw Error(Errc::invalid_asm, "A2: rightmost nonzero of row " + std::to_string(i) + " is not 1");
    if (sum != 1) throw Error(Errc::invalid_asm, "A4: row " + std::to_string(i) + " does not sum to 1");
  }
  for (int j = 1; j <= m; ++j) {
    int first = 0;
    int last = 0;
    int sum = 0;
    for (int i = 1; i <= n; ++i) {
      const int v = a.at(i, j);
      if (v == 0) continue;
      if (v == last) throw Error(Errc::invalid_asm, "A1: column " + std::to_string(j) + " does not alternate");
      if (first == 0) first = v;
      last = v;
      sum += v;
    }
    if (first == -1) throw Error(Errc::invalid_asm, "A3: topmost nonzero of column " + std::to_string(j) + " is not 1");
    if (sum != (lambda.contains_part(j) ? 1 : 0))
      throw Error(Errc::invalid_asm, "A5: column " + std::to_string(j) + " has sum " + std::to_string(sum));
  }
}

inline bool is_valid_asm(const ASM& a, const Partition& lambda) {
  try {
    validate_asm(a, lambda);
    return true;
  } catch (const Error&) {
    return false;
  }
}

/// a_ij = 1 when row i of G contains j and row i-1 does not, -1 for the reverse.
inline ASM asm_from_gtp(const GTPattern& g) {
  validate_gtp(g);
  const int n = g.size();
  const int m = n ? g.m(n, 1) : 0;
  for (const auto& row : g.rows)
    for (int v : row)
      if (v == 0) throw Error(Errc::invalid_pattern, "zero entry has no ASM column");
  ASM a{IntMatrix(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m), 0))};
  for (int i = 1; i <= n; ++i) {
    const auto& cur = g.rows[static_cast<std::size_t>(i - 1)];
    const std::vector<int> prev = i > 1 ? g.rows[static_cast<std::size_t>(i - 2)] : std::vector<int>{};
    auto has = [](const std::vector<int>& r, int v) { return std::find(r.begin(), r.end(), v) != r.end(); };
    for (int j = 1; j <= m; ++j) {
      const bool now = has(cur, j);
      const bool before = has(prev, j);
      a.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = now && !before ? 1 : (!now && before ? -1 : 0);
    }
  }
  return a;
}

/// Partial sums down each column (column-cumulative matrix).
inline IntMatrix column_cumulative(const ASM& a) {
  IntMatrix cs = a.entries;
  for (std::size_t i = 1; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs[i].size(); ++j) cs[i][j] += cs[i - 1][j];
  return cs;
}

/// Partial sums from the right along each row (row-cumulative matrix).
inline IntMatrix row_cumulative(const ASM& a) {
  IntMatrix rs = a.entries;
  for (auto& row : rs)
    for (std::size_t j = row.size(); j-- > 1;) row[j - 1] += row[j];
  return rs;
}

/// Row i of G lists, largest first, the columns where the column-cumulative
/// matrix has a 1 in row i.
inline GTPattern gtp_from_asm(const ASM& a) {
  validate_asm(a, a.shape());
  const auto cs = column_cumulative(a);
  GTPattern g;
  for (int i = 1; i <= a.rows(); ++i) {
    std::vector<int> row;
    for (int j = a.cols(); j >= 1; --j)
      if (cs[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] == 1) row.push_back(j);
    g.rows.push_back(std::move(row));
  }
  validate_gtp(g);
  return g;
}

/// Direct route: a_ij is the difference of "diagonal j of S contains i" and
/// "diagonal j+1 of S contains i".
inline ASM asm_from_shifted(const Tableau& s) {
  if (s.kind != TableauKind::shifted) throw Error(Errc::invalid_tableau, "expected a shifted tableau");
  require_valid(s);
  const int n = s.n;
  const int m = s.shape.largest();
  auto diagonal_has = [&](int d, int value) {
    for (int r = 1; r <= n; ++r)
      if (s.has(r, r + d - 1) && s.at(r, r + d - 1).value == value) return true;
    return false;
  };
  ASM a{IntMatrix(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m), 0))};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      a.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          (diagonal_has(j, i) ? 1 : 0) - (j < m && diagonal_has(j + 1, i) ? 1 : 0);
  return a;
}

/// Shifted tableau whose diagonal j holds the rows of the 1s in column j of
/// the row-cumulative matrix, top to bottom.
inline Tableau shifted_from_asm(const ASM& a) {
  const auto lambda = a.shape();
  validate_asm(a, lambda);
  const auto rs = row_cumulative(a);
  const int n = a.rows();
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(n));
  for (int j = 1; j <= a.cols(); ++j) {
    int r = 1;
    for (int i = 1; i <= n; ++i)
      if (rs[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] == 1) {
        auto& row = rows[static_cast<std::size_t>(r - 1)];
        if (static_cast<int>(row.size()) != j - 1) throw Error(Errc::invalid_asm, "diagonal does not fit the shape");
        row.push_back({i, false});
        ++r;
      }
  }
  Tableau t(TableauKind::shifted, lambda, n, std::move(rows));
  require_valid(t);
  return t;
}

/// Strict patterns with top row lambda mapped to ASMs; lambda must have
/// n = l(lambda) parts and no zero part.
inline std::vector<ASM> enumerate_asm(const Partition& lambda) {
  if (!lambda.is_strict() || lambda.length() != static_cast<int>(lambda.size()) || lambda.length() == 0)
    throw Error(Errc::invalid_shape, "ASM boundary needs a strict partition without zero parts, got " + lambda.to_string());
  std::vector<ASM> out;
  for (const auto& g : enumerate_gtp(lambda)) out.push_back(asm_from_gtp(g));
  return out;
}

// ---------------------------------------------------------------------------
// Compass point matrices.

enum class Compass { WE, NS, NE, SE, NW, SW };

inline std::string compass_name(Compass c) {
  switch (c) {
    case Compass::WE: return "WE";
    case Compass::NS: return "NS";
    case Compass::NE: return "NE";
    case Compass::SE: return "SE";
    case Compass::NW: return "NW";
    case Compass::SW: return "SW";
  }
  return "?";
}

inline Compass parse_compass(std::string_view s) {
  for (Compass c : {Compass::WE, Compass::NS, Compass::NE, Compass::SE, Compass::NW, Compass::SW})
    if (compass_name(c) == s) return c;
  throw Error(Errc::parse_error, "unknown compass entry '" + std::string(s) + "'");
}

using CPM = std::vector<std::vector<Compass>>;

/// 1 -> WE, -1 -> NS; a 0 is labelled by its nearest nonzero neighbours to
/// the north and east, a missing neighbour counting as -1.
inline CPM cpm_from_asm(const ASM& a) {
  validate_asm(a, a.shape());
  const int n = a.rows();
  const int m = a.cols();
  CPM c(static_cast<std::size_t>(n), std::vector<Compass>(static_cast<std::size_t>(m)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) {
      Compass& out = c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      const int v = a.at(i, j);
      if (v != 0) {
        out = v == 1 ? Compass::WE : Compass::NS;
        continue;
      }
      int north = -1;
      for (int r = i - 1; r >= 1; --r)
        if (a.at(r, j) != 0) {
          north = a.at(r, j);
          break;
        }
      int east = -1;
      for (int s = j + 1; s <= m; ++s)
        if (a.at(i, s) != 0) {
          east = a.at(i, s);
          break;
        }
      if (north == 1) out = east == 1 ? Compass::NW : Compass::NE;
      else out = east == 1 ? Compass::SW : Compass::SE;
    }
  return c;
}

inline ASM asm_from_cpm(const CPM& c) {
  ASM a;
  for (const auto& row : c) {
    std::vector<int> r;
    for (Compass x : row) r.push_back(x == Compass::WE ? 1 : x == Compass::NS ? -1 : 0);
    a.entries.push_back(std::move(r));
  }
  return a;
}

inline std::map<Compass, int> compass_counts(const CPM& c) {
  std::map<Compass, int> counts;
  for (const auto& row : c)
    for (Compass x : row) ++counts[x];
  return counts;
}

// ---------------------------------------------------------------------------
// Boltzmann weights.

/// bmn_modified moves the factor t from NE to SW.
enum class BoltzmannVariant { general, bmn, lascoux, bmn_modified };

inline std::string variant_name(BoltzmannVariant v) {
  switch (v) {
    case BoltzmannVariant::general: return "general";
    case BoltzmannVariant::bmn: return "bmn";
    case BoltzmannVariant::lascoux: return "lascoux";
    case BoltzmannVariant::bmn_modified: return "bmn-modified";
  }
  return "?";
}

inline BoltzmannVariant parse_variant(std::string_view s) {
  if (s == "general") return BoltzmannVariant::general;
  if (s == "bmn") return BoltzmannVariant::bmn;
  if (s == "lascoux") return BoltzmannVariant::lascoux;
  if (s == "bmn-modified") return BoltzmannVariant::bmn_modified;
  throw Error(Errc::parse_error, "unknown Boltzmann variant '" + std::string(s) + "'");
}

struct BoltzmannTable {
  BoltzmannVariant variant = BoltzmannVariant::general;

  Polynomial operator()(Compass c, int i, int j) const {
    using namespace sym;
    switch (variant) {
      case BoltzmannVariant::general:
        switch (c) {
          case Compass::NS: return x(i) + y(i);
          case Compass::NW: return y(i) - a(j);
          case Compass::SW: return x(i) + a(j);
          default: return 1;
        }
      case BoltzmannVariant::bmn:
      case BoltzmannVariant::bmn_modified: {
        const bool modified = variant == BoltzmannVariant::bmn_modified;
        switch (c) {
          case Compass::NS: return (1 + t()) * z(i);
          case Compass::NE: return modified ? Polynomial(1) : t();
          case Compass::NW: return z(i) - t() * alpha(j);
          case Compass::SW: return modified ? t() * (z(i) + alpha(j)) : z(i) + alpha(j);
          default: return 1;
        }
      }
      case BoltzmannVariant::lascoux: {
        const Polynomial ratio = x(i) * power(Variable::a(j), -1);
        switch (c) {
          case Compass::NS: return -ratio;
          case Compass::SW: return -(ratio + 1);
          default: return 1;
        }
      }
    }
    return 1;
  }
};

inline BoltzmannTable boltzmann_table(BoltzmannVariant v) { return BoltzmannTable{v}; }

inline Polynomial weight_cpm(const CPM& c, const BoltzmannTable& table, bool diagonal_prefactor) {
  Polynomial w = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (diagonal_prefactor) w *= sym::x(static_cast<int>(i) + 1);
    for (std::size_t j = 0; j < c[i].size(); ++j) w *= table(c[i][j], static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Triples of a pattern.

enum class TripleKind { L, R, B };

struct Triple {
  int i;
  int j;
  TripleKind kind;
};

struct TripleCounts {
  int L = 0;
  int R = 0;
  int B = 0;
};

/// For i >= 2, j < i, compares (m_ij, m_{i-1,j}, m_{i,j+1}).
inline std::vector<Triple> classify_triples(const GTPattern& g) {
  validate_gtp(g);
  std::vector<Triple> out;
  for (int i = 2; i <= g.size(); ++i)
    for (int j = 1; j < i; ++j) {
      const int top = g.m(i, j);
      const int mid = g.m(i - 1, j);
      const int right = g.m(i, j + 1);
      const TripleKind k = top == mid ? TripleKind::L : mid == right ? TripleKind::R : TripleKind::B;
      out.push_back({i, j, k});
    }
  return out;
}

inline TripleCounts count_triples(const GTPattern& g) {
  TripleCounts c;
  for (const auto& t : classify_triples(g)) {
    if (t.kind == TripleKind::L) ++c.L;
    if (t.kind == TripleKind::R) ++c.R;
    if (t.kind == TripleKind::B) ++c.B;
  }
  return c;
}

/// Pattern weight with a0 = 0; a left-saturated triple contributes 1.
inline Polynomial weight_gtp(const GTPattern& g) {
  using namespace sym;
  auto xa = [](int i, int k) { return k == 0 ? x(i) : x(i) + a(k); };
  Polynomial w = 1;
  for (int i = 1; i <= g.size(); ++i)
    for (int k = 0; k < g.m(i, i); ++k) w *= xa(i, k);
  for (const auto& t : classify_triples(g)) {
    const int i = t.i;
    const int mid = g.m(i - 1, t.j);
    if (t.kind == TripleKind::B) w *= x(i) + y(i);
    if (t.kind == TripleKind::R) w *= mid == 0 ? y(i) : y(i) - a(mid);
    for (int k = mid + 1; k < g.m(i, t.j); ++k) w *= xa(i, k);
  }
  return w;
}

}  // namespace ftok
