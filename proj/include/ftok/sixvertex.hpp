#pragma once

// Square ice with lambda-boundary and its partition functions.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ftok/algebra.hpp"
#include "ftok/combin.hpp"
#include "ftok/error.hpp"
#include "ftok/shapes.hpp"

namespace ftok {

inline Polynomial partition_function(const Partition& mu, int n, BoltzmannVariant variant) {
  const auto lambda = shape_for(mu, n, Offset::delta);
  const auto table = boltzmann_table(variant);
  const bool prefactor = variant == BoltzmannVariant::general;
  Polynomial z;
  for (const auto& a : enumerate_asm(lambda)) z += weight_cpm(cpm_from_asm(a), table, prefactor);
  return z;
}

/// Edge orientations of an n x m ice grid. horizontal[i][k] is the edge left
/// of column k+1 in row i+1 ('>' or '<'); vertical[i][j] is the edge above
/// row i+1 in column j+1 ('^' or 'v'), with i = n the bottom boundary.
struct SquareIceConfig {
  int n = 0;
  int m = 0;
  std::vector<std::string> horizontal;
  std::vector<std::string> vertical;

  /// The two directions arrows point in from at vertex (i, j), 1-based.
  Compass vertex(int i, int j) const {
    const bool west = horizontal[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] == '>';
    const bool east = horizontal[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] == '<';
    const bool north = vertical[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] == 'v';
    const bool south = vertical[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] == '^';
    const int in = west + east + north + south;
    if (in != 2) throw Error(Errc::invalid_asm, "vertex (" + std::to_string(i) + "," + std::to_string(j) + ") breaks the ice rule");
    if (west && east) return Compass::WE;
    if (north && south) return Compass::NS;
    if (north) return east ? Compass::NE : Compass::NW;
    return east ? Compass::SE : Compass::SW;
  }

  CPM to_cpm() const {
    CPM c(static_cast<std::size_t>(n), std::vector<Compass>(static_cast<std::size_t>(m)));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= m; ++j) c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = vertex(i, j);
    return c;
  }

  /// Incoming on the left and right, outgoing on top, and on the bottom
  /// outgoing exactly in the columns that are parts of lambda.
  bool has_boundary(const Partition& lambda) const {
    for (int i = 0; i < n; ++i)
      if (horizontal[static_cast<std::size_t>(i)].front() != '>' || horizontal[static_cast<std::size_t>(i)].back() != '<') return false;
    for (int j = 1; j <= m; ++j) {
      if (vertical.front()[static_cast<std::size_t>(j - 1)] != '^') return false;
      if (vertical.back()[static_cast<std::size_t>(j - 1)] != (lambda.contains_part(j) ? 'v' : '^')) return false;
    }
    return true;
  }

  friend bool operator==(const SquareIceConfig&, const SquareIceConfig&) = default;
};

inline SquareIceConfig sic_from_cpm(const CPM& c) {
  SquareIceConfig s;
  s.n = static_cast<int>(c.size());
  s.m = s.n ? static_cast<int>(c[0].size()) : 0;
  s.horizontal.assign(static_cast<std::size_t>(s.n), std::string(static_cast<std::size_t>(s.m + 1), '?'));
  s.vertical.assign(static_cast<std::size_t>(s.n + 1), std::string(static_cast<std::size_t>(s.m), '?'));
  auto put = [](char& slot, char v) {
    if (slot != '?' && slot != v) throw Error(Errc::invalid_asm, "neighbouring vertices disagree on a shared edge");
    slot = v;
  };
  for (int i = 1; i <= s.n; ++i)
    for (int j = 1; j <= s.m; ++j) {
      const Compass x = c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      const bool west = x == Compass::WE || x == Compass::NW || x == Compass::SW;
      const bool east = x == Compass::WE || x == Compass::NE || x == Compass::SE;
      const bool north = x == Compass::NS || x == Compass::NE || x == Compass::NW;
      const bool south = x == Compass::NS || x == Compass::SE || x == Compass::SW;
      put(s.horizontal[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)], west ? '>' : '<');
      put(s.horizontal[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)], east ? '<' : '>');
      put(s.vertical[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)], north ? 'v' : '^');
      put(s.vertical[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)], south ? '^' : 'v');
    }
  return s;
}

/// 2n+1 lines: vertical edges between vertex rows, '+' for each vertex.
/// Trailing spaces are dropped and there is no final newline.
inline std::string render_sic(const SquareIceConfig& s) {
  std::vector<std::string> lines;
  auto vertical_line = [&](int i) {
    std::string line(static_cast<std::size_t>(2 * s.m), ' ');
    for (int j = 0; j < s.m; ++j) line[static_cast<std::size_t>(2 * j + 1)] = s.vertical[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return line;
  };
  for (int i = 0; i < s.n; ++i) {
    lines.push_back(vertical_line(i));
    std::string row;
    for (int k = 0; k <= s.m; ++k) {
      if (k) row += '+';
      row += s.horizontal[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    }
    lines.push_back(row);
  }
  lines.push_back(vertical_line(s.n));
  std::string out;
  for (std::size_t l = 0; l < lines.size(); ++l) {
    auto& line = lines[l];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    if (l + 1 < lines.size()) out += '\n';
  }
  return out;
}

inline std::string render_sic(const CPM& c) { return render_sic(sic_from_cpm(c)); }

inline SquareIceConfig parse_sic(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() % 2 == 0) throw Error(Errc::parse_error, "ice text needs an odd number of lines");
  SquareIceConfig s;
  s.n = static_cast<int>(lines.size() / 2);
  s.m = s.n ? static_cast<int>(lines[1].size() / 2) : 0;
  auto at = [](const std::string& line, std::size_t pos) { return pos < line.size() ? line[pos] : ' '; };
  for (int i = 0; i <= s.n; ++i) {
    const auto& line = lines[static_cast<std::size_t>(2 * i)];
    std::string v;
    for (int j = 0; j < s.m; ++j) {
      const char ch = at(line, static_cast<std::size_t>(2 * j + 1));
      if (ch != '^' && ch != 'v') throw Error(Errc::parse_error, "bad vertical edge on line " + std::to_string(2 * i + 1));
      v += ch;
    }
    s.vertical.push_back(v);
    if (i == s.n) break;
    const auto& row = lines[static_cast<std::size_t>(2 * i + 1)];
    if (static_cast<int>(row.size()) != 2 * s.m + 1) throw Error(Errc::parse_error, "vertex line " + std::to_string(2 * i + 2) + " has the wrong width");
    std::string h;
    for (int k = 0; k <= s.m; ++k) {
      const char ch = row[static_cast<std::size_t>(2 * k)];
      if (ch != '<' && ch != '>') throw Error(Errc::parse_error, "bad horizontal edge on line " + std::to_string(2 * i + 2));
      if (k < s.m && row[static_cast<std::size_t>(2 * k + 1)] != '+') throw Error(Errc::parse_error, "missing vertex marker");
      h += ch;
    }
    s.horizontal.push_back(h);
  }
  return s;
}

/// x -> z, a -> alpha.
inline Substitution to_z_alpha() {
  Substitution s;
  s.set_family(Family::x, [](int i) { return sym::z(i); });
  s.set_family(Family::a, [](int j) { return sym::alpha(j); });
  return s;
}

}  // namespace ftok
