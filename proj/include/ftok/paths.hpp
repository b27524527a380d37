#pragma once

// Non-intersecting lattice paths for semistandard and primed shifted
// tableaux. Lattice points use matrix coordinates (row down, column right).

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ftok/algebra.hpp"
#include "ftok/error.hpp"
#include "ftok/shapes.hpp"
#include "ftok/tableaux.hpp"

namespace ftok {

using Point = std::pair<int, int>;

/// H: column + 1. V: row + 1. D: both.
struct LatticePath {
  Point start;
  std::string steps;

  std::vector<Point> points() const {
    std::vector<Point> out{start};
    Point p = start;
    for (char s : steps) {
      if (s == 'H' || s == 'D') ++p.second;
      if (s == 'V' || s == 'D') ++p.first;
      out.push_back(p);
    }
    return out;
  }
  Point end() const { return points().back(); }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

enum class PathKind { sst, pst };

inline std::string path_kind_name(PathKind k) { return k == PathKind::sst ? "sst" : "pst"; }

struct PathFamily {
  PathKind kind = PathKind::sst;
  int n = 0;
  Partition shape;
  std::vector<LatticePath> paths;

  friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

namespace detail {

inline Point path_start(PathKind kind, int n, int i) { return kind == PathKind::sst ? Point{i, n - i + 1} : Point{i, 0}; }

inline Point path_end(PathKind kind, const Partition& shape, int n, int i) {
  return kind == PathKind::sst ? Point{n + 1, shape.part(i) + n - i + 1} : Point{n + 1, shape.part(i)};
}

inline void check_path_shape(PathKind kind, const Partition& shape, int n) {
  if (kind == PathKind::sst) {
    if (shape.length() > n) throw Error(Errc::mu_too_long, "shape " + shape.to_string() + " longer than n");
  } else if (!shape.is_strict() || shape.length() != n) {
    throw Error(Errc::invalid_shape_for_kind, "pst paths need a strict shape with n nonzero parts, got " +
                                                  shape.to_string());
  }
}

inline bool pairwise_disjoint(const std::vector<LatticePath>& paths) {
  std::set<Point> seen;
  for (const auto& p : paths)
    for (const auto& pt : p.points())
      if (!seen.insert(pt).second) return false;
  return true;
}

}  // namespace detail

inline PathFamily tableau_to_paths(const Tableau& t) {
  require_valid(t);
  PathFamily f;
  f.n = t.n;
  f.shape = t.shape;
  const int n = t.n;
  if (t.kind == TableauKind::sst) {
    f.kind = PathKind::sst;
    detail::check_path_shape(f.kind, t.shape, n);
    for (int i = 1; i <= n; ++i) {
      LatticePath p{detail::path_start(f.kind, n, i), {}};
      int row = i;
      if (i <= static_cast<int>(t.rows.size()))
        for (const Entry& e : t.rows[static_cast<std::size_t>(i - 1)]) {
          for (; row < e.value; ++row) p.steps += 'V';
          p.steps += 'H';
        }
      for (; row <= n; ++row) p.steps += 'V';
      f.paths.push_back(std::move(p));
    }
  } else if (t.kind == TableauKind::primed_p) {
    f.kind = PathKind::pst;
    detail::check_path_shape(f.kind, t.shape, n);
    for (int i = 1; i <= n; ++i) {
      LatticePath p{detail::path_start(f.kind, n, i), {}};
      int row = i;
      for (const Entry& e : t.rows[static_cast<std::size_t>(i - 1)]) {
        const int target = e.primed ? e.value - 1 : e.value;
        for (; row < target; ++row) p.steps += 'V';
        p.steps += e.primed ? 'D' : 'H';
        row = e.value;
      }
      for (; row <= n; ++row) p.steps += 'V';
      f.paths.push_back(std::move(p));
    }
  } else {
    throw Error(Errc::invalid_tableau, "lattice paths exist for sst and primed-p tableaux only");
  }
  return f;
}

/// Endpoints, step grammar and lattice-point disjointness.
inline void check_family(const PathFamily& f) {
  detail::check_path_shape(f.kind, f.shape, f.n);
  if (static_cast<int>(f.paths.size()) != f.n)
    throw Error(Errc::malformed_family, std::to_string(f.paths.size()) + " paths for n = " + std::to_string(f.n));
  for (int i = 1; i <= f.n; ++i) {
    const auto& p = f.paths[static_cast<std::size_t>(i - 1)];
    const std::string where = "path " + std::to_string(i);
    if (p.start != detail::path_start(f.kind, f.n, i)) throw Error(Errc::malformed_family, where + " starts off its point");
    if (p.steps.find_first_not_of(f.kind == PathKind::sst ? "HV" : "HVD") != std::string::npos)
      throw Error(Errc::malformed_family, where + " has an illegal step");
    if (p.steps.empty() || p.steps.back() != 'V') throw Error(Errc::malformed_family, where + " must end vertically");
    if (f.kind == PathKind::pst && p.steps.front() != 'H')
      throw Error(Errc::malformed_family, where + " must start horizontally");
    if (p.end() != detail::path_end(f.kind, f.shape, f.n, i)) throw Error(Errc::malformed_family, where + " ends off its point");
  }
  if (!detail::pairwise_disjoint(f.paths)) throw Error(Errc::intersecting_paths, "paths share a lattice point");
}

inline Tableau paths_to_tableau(const PathFamily& f) {
  check_family(f);
  std::vector<std::vector<Entry>> rows(f.shape.size());
  for (int i = 1; i <= f.n; ++i) {
    std::vector<Entry> row;
    Point pt = f.paths[static_cast<std::size_t>(i - 1)].start;
    for (char s : f.paths[static_cast<std::size_t>(i - 1)].steps) {
      if (s == 'H') row.push_back({pt.first, false});
      if (s == 'D') row.push_back({pt.first + 1, true});
      if (s == 'H' || s == 'D') ++pt.second;
      if (s == 'V' || s == 'D') ++pt.first;
    }
    if (i > static_cast<int>(rows.size())) {
      if (!row.empty()) throw Error(Errc::malformed_family, "path beyond the shape has horizontal steps");
      continue;
    }
    rows[static_cast<std::size_t>(i - 1)] = std::move(row);
  }
  Tableau t(f.kind == PathKind::sst ? TableauKind::sst : TableauKind::primed_p, f.shape, f.n, std::move(rows));
  if (auto v = validate(t)) throw Error(Errc::malformed_family, "paths encode an invalid tableau: " + v->rule);
  return t;
}

/// Weight of a single H or D edge ending at lattice point (row, col).
inline Polynomial edge_weight(PathKind kind, int n, char step, int row, int col) {
  using namespace sym;
  if (step == 'V') return 1;
  if (kind == PathKind::sst) return x(row) + a(row + col - n - 1);
  if (step == 'H') return col == 1 ? x(row) : x(row) + a(col - 1);
  return y(row) - a(col - 1);
}

inline Polynomial path_weight(PathKind kind, int n, const LatticePath& p) {
  Polynomial w = 1;
  Point pt = p.start;
  for (char s : p.steps) {
    if (s == 'H' || s == 'D') ++pt.second;
    if (s == 'V' || s == 'D') ++pt.first;
    w *= edge_weight(kind, n, s, pt.first, pt.second);
  }
  return w;
}

inline Polynomial paths_weight(const PathFamily& f) {
  check_family(f);
  Polynomial w = 1;
  for (const auto& p : f.paths) w *= path_weight(f.kind, f.n, p);
  return w;
}

/// Every lattice path with the endpoints and step grammar of row i.
inline std::vector<LatticePath> candidate_paths(PathKind kind, const Partition& shape, int n, int i) {
  const Point start = detail::path_start(kind, n, i);
  const Point end = detail::path_end(kind, shape, n, i);
  std::vector<LatticePath> out;
  std::string steps;
  std::function<void(Point)> go = [&](Point p) {
    if (p == end) {
      if (!steps.empty() && steps.back() == 'V' && (kind == PathKind::sst || steps.front() == 'H'))
        out.push_back({start, steps});
      return;
    }
    const std::string moves = kind == PathKind::sst ? "HV" : "HDV";
    for (char s : moves) {
      Point q = p;
      if (s == 'H' || s == 'D') ++q.second;
      if (s == 'V' || s == 'D') ++q.first;
      if (q.first > end.first || q.second > end.second) continue;
      if (kind == PathKind::pst && steps.empty() && s != 'H') continue;
      steps.push_back(s);
      go(q);
      steps.pop_back();
    }
  };
  go(start);
  return out;
}

/// All pairwise non-intersecting families with the fixed endpoints, found
/// by searching path by path (no tableaux involved).
inline std::vector<PathFamily> nonintersecting_families(PathKind kind, const Partition& shape, int n) {
  detail::check_path_shape(kind, shape, n);
  std::vector<std::vector<LatticePath>> candidates;
  for (int i = 1; i <= n; ++i) candidates.push_back(candidate_paths(kind, shape, n, i));
  std::vector<PathFamily> out;
  std::vector<LatticePath> chosen;
  std::set<Point> used;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == candidates.size()) {
      out.push_back({kind, n, shape, chosen});
      return;
    }
    for (const auto& p : candidates[i]) {
      const auto pts = p.points();
      bool clash = false;
      for (const auto& pt : pts) clash = clash || used.count(pt) > 0;
      if (clash) continue;
      for (const auto& pt : pts) used.insert(pt);
      chosen.push_back(p);
      go(i + 1);
      chosen.pop_back();
      for (const auto& pt : pts) used.erase(pt);
    }
  };
  go(0);
  return out;
}

}  // namespace ftok
