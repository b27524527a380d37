#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ftok/algebra.hpp"
#include "ftok/error.hpp"
#include "ftok/shapes.hpp"

namespace ftok {

enum class TableauKind { sst, shifted, primed_p, primed_q };

inline std::string kind_name(TableauKind k) {
  switch (k) {
    case TableauKind::sst: return "sst";
    case TableauKind::shifted: return "shifted";
    case TableauKind::primed_p: return "primed-p";
    case TableauKind::primed_q: return "primed-q";
  }
  return "?";
}

inline TableauKind parse_tableau_kind(std::string_view s) {
  if (s == "sst") return TableauKind::sst;
  if (s == "shifted") return TableauKind::shifted;
  if (s == "primed-p" || s == "primedP") return TableauKind::primed_p;
  if (s == "primed-q" || s == "primedQ") return TableauKind::primed_q;
  throw Error(Errc::parse_error, "unknown tableau kind '" + std::string(s) + "'");
}

inline bool is_shifted_kind(TableauKind k) { return k != TableauKind::sst; }
inline bool is_primed_kind(TableauKind k) { return k == TableauKind::primed_p || k == TableauKind::primed_q; }

/// Letter of the alphabet 1' < 1 < 2' < 2 < ...
struct Entry {
  int value = 1;
  bool primed = false;

  int key() const { return 2 * value - (primed ? 1 : 0); }

  std::string to_string() const { return std::to_string(value) + (primed ? "'" : ""); }

  static Entry parse(std::string_view s) {
    Entry e;
    if (!s.empty() && s.back() == '\'') {
      e.primed = true;
      s.remove_suffix(1);
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
      throw Error(Errc::parse_error, "bad tableau entry '" + std::string(s) + "'");
    e.value = std::stoi(std::string(s));
    return e;
  }

  friend bool operator==(const Entry&, const Entry&) = default;
  friend auto operator<=>(const Entry& l, const Entry& r) { return l.key() <=> r.key(); }
};

struct Tableau {
  TableauKind kind = TableauKind::sst;
  Partition shape;
  int n = 0;
  /// rows[i-1] lists row i left to right; shifted rows begin at column i.
  std::vector<std::vector<Entry>> rows;

  Tableau() = default;
  Tableau(TableauKind k, Partition s, int n_, std::vector<std::vector<Entry>> r)
      : kind(k), shape(std::move(s)), n(n_), rows(std::move(r)) {
    while (rows.size() < shape.size() && shape.part(static_cast<int>(rows.size()) + 1) == 0) rows.emplace_back();
  }

  int first_column(int i) const { return is_shifted_kind(kind) ? i : 1; }

  /// Matrix coordinates, 1-based.
  const Entry& at(int i, int j) const {
    return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - first_column(i))];
  }
  bool has(int i, int j) const {
    if (i < 1 || i > static_cast<int>(rows.size())) return false;
    const int c = j - first_column(i);
    return c >= 0 && c < static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size());
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) out += " / ";
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (j) out += ' ';
        out += rows[i][j].to_string();
      }
    }
    return out;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Parses "1 1 2' / 2 3" style text.
inline Tableau parse_tableau(TableauKind kind, const Partition& shape, int n, std::string_view text) {
  std::vector<std::vector<Entry>> rows(1);
  std::string tok;
  auto flush = [&] {
    if (!tok.empty()) rows.back().push_back(Entry::parse(tok));
    tok.clear();
  };
  for (char c : text) {
    if (c == '/') {
      flush();
      rows.emplace_back();
    } else if (c == ' ' || c == ',') {
      flush();
    } else {
      tok += c;
    }
  }
  flush();
  if (rows.size() == 1 && rows[0].empty()) rows.clear();
  return Tableau(kind, shape, n, std::move(rows));
}

struct Violation {
  std::string rule;
  int row = 0;
  int col = 0;
  std::string detail;
};

inline void check_shape(const Tableau& t) {
  if (t.rows.size() != t.shape.size())
    throw Error(Errc::shape_mismatch, std::to_string(t.rows.size()) + " rows for shape " + t.shape.to_string());
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (static_cast<int>(t.rows[i].size()) != t.shape.part(static_cast<int>(i) + 1))
      throw Error(Errc::shape_mismatch, "row " + std::to_string(i + 1) + " has " + std::to_string(t.rows[i].size()) +
                                            " cells, shape " + t.shape.to_string());
  if (is_shifted_kind(t.kind) && !t.shape.is_strict())
    throw Error(Errc::invalid_shape_for_kind, kind_name(t.kind) + " needs a strict shape, got " + t.shape.to_string());
}

/// First violated rule in row-major cell order; checks the definitions
/// directly (whole rows, columns and diagonals), not neighbour shortcuts.
inline std::optional<Violation> validate(const Tableau& t) {
  check_shape(t);
  const bool primed = is_primed_kind(t.kind);
  for (const Cell& c : cells(is_shifted_kind(t.kind) ? DiagramKind::shifted : DiagramKind::young, t.shape)) {
    const int i = c.row;
    const int j = c.col;
    const Entry& e = t.at(i, j);
    auto bad = [&](const char* rule, const std::string& detail) {
      return Violation{rule, i, j, detail + " at (" + std::to_string(i) + "," + std::to_string(j) + ")"};
    };
    if (e.value < 1 || e.value > t.n) return bad("alphabet", "entry " + e.to_string() + " outside 1.." + std::to_string(t.n));
    if (e.primed && !primed) return bad("alphabet", "primed entry in an unprimed tableau");

    const bool left = t.has(i, j - 1);
    const bool up = t.has(i - 1, j);
    switch (t.kind) {
      case TableauKind::sst:
        if (left && t.at(i, j - 1) > e) return bad("T1", "row decreases");
        if (up && !(t.at(i - 1, j) < e)) return bad("T2", "column not strictly increasing");
        break;
      case TableauKind::shifted:
        if (left && t.at(i, j - 1) > e) return bad("S1", "row decreases");
        if (up && t.at(i - 1, j) > e) return bad("S2", "column decreases");
        for (int d = 1; t.has(i - d, j - d); ++d)
          if (!(t.at(i - d, j - d) < e)) return bad("S3", "diagonal not strictly increasing");
        break;
      case TableauKind::primed_p:
      case TableauKind::primed_q:
        if (left && t.at(i, j - 1) > e) return bad("P1", "row decreases");
        if (up && t.at(i - 1, j) > e) return bad("P2", "column decreases");
        if (e.primed)
          for (int jj = t.first_column(i); jj < j; ++jj)
            if (t.at(i, jj) == e) return bad("P3", "second " + e.to_string() + " in row");
        if (!e.primed)
          for (int ii = 1; ii < i; ++ii)
            if (t.has(ii, j) && t.at(ii, j) == e) return bad("P4", "second " + e.to_string() + " in column");
        if (t.kind == TableauKind::primed_p && i == j && e.primed)
          return bad("P5", "primed entry on the main diagonal");
        break;
    }
  }
  return std::nullopt;
}

inline bool is_valid(const Tableau& t) { return !validate(t).has_value(); }

inline void require_valid(const Tableau& t) {
  if (auto v = validate(t)) throw Error(Errc::invalid_tableau, v->rule + ": " + v->detail);
}

// ---------------------------------------------------------------------------
// Enumeration.

namespace detail {

inline std::vector<Entry> alphabet(TableauKind kind, int n) {
  std::vector<Entry> out;
  for (int k = 1; k <= n; ++k) {
    if (is_primed_kind(kind)) out.push_back({k, true});
    out.push_back({k, false});
  }
  return out;
}

/// Can `e` go at (i, j) given the already-filled cells to the left and above?
inline bool locally_admissible(const Tableau& t, int i, int j, const Entry& e) {
  const bool left = t.has(i, j - 1) && j - 1 >= t.first_column(i);
  const bool up = i > 1 && t.has(i - 1, j);
  switch (t.kind) {
    case TableauKind::sst:
      return (!left || t.at(i, j - 1) <= e) && (!up || t.at(i - 1, j) < e);
    case TableauKind::shifted:
      return (!left || t.at(i, j - 1) <= e) && (!up || t.at(i - 1, j) <= e) &&
             (!t.has(i - 1, j - 1) || t.at(i - 1, j - 1) < e);
    case TableauKind::primed_p:
    case TableauKind::primed_q:
      if (t.kind == TableauKind::primed_p && i == j && e.primed) return false;
      if (left && (t.at(i, j - 1) > e || (e.primed && t.at(i, j - 1) == e))) return false;
      if (up && (t.at(i - 1, j) > e || (!e.primed && t.at(i - 1, j) == e))) return false;
      return true;
  }
  return false;
}

}  // namespace detail

/// Calls `visit` on every valid filling, cells row-major, entries ascending.
/// Returning false from `visit` stops the enumeration.
template <class Visit>
void for_each_tableau(TableauKind kind, const Partition& shape, int n, Visit&& visit) {
  if (is_shifted_kind(kind) && !shape.is_strict())
    throw Error(Errc::invalid_shape_for_kind, kind_name(kind) + " needs a strict shape, got " + shape.to_string());
  if (n < 0) throw Error(Errc::bad_params, "n must be nonnegative");
  const auto diagram = cells(is_shifted_kind(kind) ? DiagramKind::shifted : DiagramKind::young, shape);
  const auto letters = detail::alphabet(kind, n);

  Tableau t;
  t.kind = kind;
  t.shape = shape;
  t.n = n;
  t.rows.resize(shape.size());
  bool stop = false;
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (stop) return;
    if (idx == diagram.size()) {
      if (!visit(static_cast<const Tableau&>(t))) stop = true;
      return;
    }
    const auto [i, j] = diagram[idx];
    auto& row = t.rows[static_cast<std::size_t>(i - 1)];
    for (const Entry& e : letters) {
      row.push_back(e);
      if (detail::locally_admissible(t, i, j, e)) fill(idx + 1);
      row.pop_back();
      if (stop) return;
    }
  };
  fill(0);
}

inline std::vector<Tableau> enumerate(TableauKind kind, const Partition& shape, int n) {
  std::vector<Tableau> out;
  for_each_tableau(kind, shape, n, [&](const Tableau& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

inline std::size_t count_tableaux(TableauKind kind, const Partition& shape, int n) {
  std::size_t count = 0;
  for_each_tableau(kind, shape, n, [&](const Tableau&) {
    ++count;
    return true;
  });
  return count;
}

// ---------------------------------------------------------------------------
// Weights.

/// factorial: the tabulated cell weights (diagonal primed cells give x_k / y_k).
/// factorial_raw: the defining sums, diagonal k -> x_k + a0, k' -> y_k - a0.
/// plain: a = 0 throughout.
enum class WeightScheme { factorial, factorial_raw, plain };

namespace detail {

inline Polynomial cell_weight(TableauKind kind, int i, int j, const Entry& e, WeightScheme scheme) {
  using namespace sym;
  const int k = e.value;
  const bool with_a = scheme != WeightScheme::plain;
  switch (kind) {
    case TableauKind::sst:
      return with_a ? x(k) + a(k + j - i) : x(k);
    case TableauKind::primed_p:
    case TableauKind::primed_q: {
      const bool raw = scheme == WeightScheme::factorial_raw || i != j;
      if (!with_a || !raw) return e.primed ? y(k) : x(k);
      return e.primed ? y(k) - a(j - i) : x(k) + a(j - i);
    }
    case TableauKind::shifted:
      break;
  }
  throw Error(Errc::invalid_tableau, "cell weights of shifted tableaux depend on neighbours");
}

inline Polynomial shifted_cell_weight(const Tableau& t, int i, int j, WeightScheme scheme) {
  using namespace sym;
  const int k = t.at(i, j).value;
  const bool with_a = scheme != WeightScheme::plain;
  if (i == j) return x(k);
  if (t.has(i, j - 1) && t.at(i, j - 1).value == k) return with_a ? x(k) + a(j - i) : x(k);
  if (t.has(i + 1, j) && t.at(i + 1, j).value == k) return with_a ? y(k) - a(j - i) : y(k);
  return x(k) + y(k);
}

}  // namespace detail

inline Polynomial weight(const Tableau& t, WeightScheme scheme = WeightScheme::factorial) {
  require_valid(t);
  Polynomial w = 1;
  for (const Cell& c : cells(is_shifted_kind(t.kind) ? DiagramKind::shifted : DiagramKind::young, t.shape)) {
    if (t.kind == TableauKind::shifted)
      w *= detail::shifted_cell_weight(t, c.row, c.col, scheme);
    else
      w *= detail::cell_weight(t.kind, c.row, c.col, t.at(c.row, c.col), scheme);
  }
  return w;
}

/// Sum of weights over all tableaux. Cell-local kinds use a memoized fold
/// over cells keyed on the boundary state of the partial filling, so shared
/// suffixes are summed once; the shifted kind sums enumerate + weight.
inline Polynomial weighted_sum(TableauKind kind, const Partition& shape, int n,
                               WeightScheme scheme = WeightScheme::factorial) {
  if (kind == TableauKind::shifted) {
    Polynomial sum;
    for_each_tableau(kind, shape, n, [&](const Tableau& t) {
      Polynomial w = 1;
      for (const Cell& c : cells(DiagramKind::shifted, t.shape)) w *= detail::shifted_cell_weight(t, c.row, c.col, scheme);
      sum += w;
      return true;
    });
    return sum;
  }
  if (is_shifted_kind(kind) && !shape.is_strict())
    throw Error(Errc::invalid_shape_for_kind, kind_name(kind) + " needs a strict shape, got " + shape.to_string());

  const auto diagram = cells(is_shifted_kind(kind) ? DiagramKind::shifted : DiagramKind::young, shape);
  const auto letters = detail::alphabet(kind, n);
  Tableau t;
  t.kind = kind;
  t.shape = shape;
  t.n = n;
  t.rows.resize(shape.size());

  // Everything still to be filled depends on the filled part only through
  // the current row so far and the previous row from the current column on.
  std::map<std::pair<std::size_t, std::vector<int>>, Polynomial> memo;
  std::function<Polynomial(std::size_t)> fold = [&](std::size_t idx) -> Polynomial {
    if (idx == diagram.size()) return 1;
    const auto [i, j] = diagram[idx];
    std::vector<int> frontier;
    for (const Entry& e : t.rows[static_cast<std::size_t>(i - 1)]) frontier.push_back(e.key());
    frontier.push_back(-1);
    if (i > 1)
      for (int jj = j; t.has(i - 1, jj); ++jj) frontier.push_back(t.at(i - 1, jj).key());
    auto key = std::make_pair(idx, std::move(frontier));
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Polynomial sum;
    auto& row = t.rows[static_cast<std::size_t>(i - 1)];
    for (const Entry& e : letters) {
      row.push_back(e);
      if (detail::locally_admissible(t, i, j, e)) {
        Polynomial rest = fold(idx + 1);
        if (!rest.is_zero()) sum += detail::cell_weight(kind, i, j, e, scheme) * rest;
      }
      row.pop_back();
    }
    return memo.emplace(std::move(key), sum).first->second;
  };
  return fold(0);
}

}  // namespace ftok
