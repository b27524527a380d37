#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ftok/error.hpp"

namespace ftok {

/// Weakly decreasing sequence of nonnegative parts. Trailing zeros are kept
/// and take part in equality; use normalized() to compare diagrams.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw Error(Errc::invalid_shape, "negative part in " + to_string());
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw Error(Errc::invalid_shape, "parts not weakly decreasing in " + to_string());
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }

  /// Number of nonzero parts.
  int length() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
  }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// 1-based; zero past the stored parts.
  int part(int i) const {
    return i >= 1 && i <= static_cast<int>(parts_.size()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  Partition normalized() const {
    std::vector<int> p = parts_;
    while (!p.empty() && p.back() == 0) p.pop_back();
    return Partition(std::move(p));
  }

  /// Copy padded with zeros (or truncated of zeros) to exactly `len` parts.
  Partition padded(int len) const {
    if (length() > len)
      throw Error(Errc::invalid_shape, to_string() + " has more than " + std::to_string(len) + " parts");
    std::vector<int> p = parts_;
    p.resize(static_cast<std::size_t>(len), 0);
    return Partition(std::move(p));
  }

  /// Strictly decreasing nonzero parts, at most one terminal zero.
  bool is_strict() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i] >= parts_[i - 1]) return false;
    return true;
  }

  bool contains_part(int v) const { return std::find(parts_.begin(), parts_.end(), v) != parts_.end(); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  /// "6,4,3,1"; the empty string (or "-") is the empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '(' || c == ')'; }),
            s.end());
    if (s.empty() || s == "-") return Partition{};
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw Error(Errc::parse_error, "bad partition part '" + item + "' in '" + s + "'");
      parts.push_back(std::stoi(item));
    }
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A Partition known to be strict.
class StrictPartition : public Partition {
 public:
  StrictPartition() = default;
  StrictPartition(std::initializer_list<int> parts) : StrictPartition(Partition(parts)) {}
  explicit StrictPartition(const Partition& p) : Partition(p) {
    const auto& ps = parts();
    for (std::size_t i = 1; i < ps.size(); ++i)
      if (ps[i] >= ps[i - 1])
        throw Error(Errc::invalid_shape, "parts not strictly decreasing in " + p.to_string());
  }
};

inline Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

enum class Offset { delta, rho };

/// lambda_i = mu_i + (n - i + 1) for delta, mu_i + (n - i) for rho.
inline StrictPartition shape_for(const Partition& mu, int n, Offset offset) {
  if (n < 0) throw Error(Errc::bad_params, "n must be nonnegative");
  if (mu.length() > n)
    throw Error(Errc::mu_too_long,
                "l(" + mu.to_string() + ") = " + std::to_string(mu.length()) + " exceeds n = " + std::to_string(n));
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(mu.part(i) + n - i + (offset == Offset::delta ? 1 : 0));
  return StrictPartition(Partition(std::move(parts)));
}

/// mu = lambda - delta (or lambda - rho), with n = number of parts of lambda.
inline Partition subtract_offset(const Partition& lambda, Offset offset) {
  const int n = static_cast<int>(lambda.size());
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(lambda.part(i) - (n - i + (offset == Offset::delta ? 1 : 0)));
  return Partition(std::move(parts));
}

enum class DiagramKind { young, shifted };

struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Cells in row-major order. Shifted row i starts on the diagonal (i, i).
inline std::vector<Cell> cells(DiagramKind kind, const Partition& shape) {
  std::vector<Cell> out;
  for (int i = 1; i <= static_cast<int>(shape.size()); ++i) {
    const int first = kind == DiagramKind::young ? 1 : i;
    for (int j = 0; j < shape.part(i); ++j) out.push_back({i, first + j});
  }
  return out;
}

/// All partitions of `weight` with at most `max_len` parts, in reverse
/// lexicographic order, each without trailing zeros.
inline std::vector<Partition> partitions_of(int weight, int max_len) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> go = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      go(remaining - p, p);
      cur.pop_back();
    }
  };
  go(weight, weight);
  return out;
}

/// Every partition of weight at most `max_weight` with at most `max_len` parts.
inline std::vector<Partition> partitions_up_to(int max_weight, int max_len) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto ps = partitions_of(w, max_len);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

}  // namespace ftok
