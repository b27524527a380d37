#include <gtest/gtest.h>

#include <set>

#include "ftok/tableaux.hpp"

using namespace ftok;
using namespace ftok::sym;

namespace {

Tableau example_t() { return parse_tableau(TableauKind::sst, Partition{3, 2, 2, 1, 0}, 5, "1 2 4 / 2 3 / 4 4 / 5"); }
Tableau example_s() {
  return parse_tableau(TableauKind::shifted, Partition{6, 4, 3, 1}, 4, "1 1 2 2 3 4 / 2 3 3 3 / 3 4 4 / 4");
}
Tableau example_p() {
  return parse_tableau(TableauKind::primed_p, Partition{6, 4, 3, 1}, 4, "1 1 2' 2 3' 4 / 2 3' 3 3 / 3 4' 4 / 4");
}

// Every assignment of alphabet letters to cells, kept when validate() accepts.
std::vector<Tableau> brute_force(TableauKind kind, const Partition& shape, int n) {
  std::vector<Entry> letters;
  for (int k = 1; k <= n; ++k) {
    if (is_primed_kind(kind)) letters.push_back({k, true});
    letters.push_back({k, false});
  }
  std::vector<std::size_t> sizes;
  for (int p : shape.parts()) sizes.push_back(static_cast<std::size_t>(p));
  std::size_t total = 0;
  for (auto s : sizes) total += s;
  std::vector<std::size_t> digits(total, 0);
  std::vector<Tableau> out;
  if (letters.empty() && total > 0) return out;
  while (true) {
    std::vector<std::vector<Entry>> rows;
    std::size_t pos = 0;
    for (auto s : sizes) {
      rows.emplace_back();
      for (std::size_t c = 0; c < s; ++c) rows.back().push_back(letters[digits[pos++]]);
    }
    Tableau t(kind, shape, n, rows);
    if (is_valid(t)) out.push_back(t);
    std::size_t d = 0;
    while (d < total && ++digits[d] == letters.size()) digits[d++] = 0;
    if (d == total) break;
  }
  return out;
}

// Number of semistandard tableaux with entries in 1..n, by the hook-content formula.
BigInt hook_content(const Partition& mu, int n) {
  BigInt num = 1, den = 1;
  const auto conj = conjugate(mu);
  for (const auto& c : cells(DiagramKind::young, mu)) {
    num *= n + c.col - c.row;
    den *= (mu.part(c.row) - c.col) + (conj.part(c.col) - c.row) + 1;
  }
  return num / den;
}

std::vector<Partition> strict_shapes(int max_weight, int max_len) {
  std::vector<Partition> out;
  for (const auto& p : partitions_up_to(max_weight, max_len))
    if (p.is_strict()) out.push_back(p);
  return out;
}

}  // namespace

TEST(Tableaux, EnumerateExamples) {
  const auto sst = enumerate(TableauKind::sst, Partition{1}, 2);
  ASSERT_EQ(sst.size(), 2u);
  EXPECT_EQ(sst[0].to_string(), "1");
  EXPECT_EQ(sst[1].to_string(), "2");

  const auto p = enumerate(TableauKind::primed_p, Partition{2, 1}, 2);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].to_string(), "1 1 / 2");
  EXPECT_EQ(p[1].to_string(), "1 2' / 2");

  const auto s = enumerate(TableauKind::shifted, Partition{2, 1}, 2);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].to_string(), "1 1 / 2");
  EXPECT_EQ(s[1].to_string(), "1 2 / 2");
}

TEST(Tableaux, EnumerateRejectsNonStrictShiftedShape) {
  for (auto kind : {TableauKind::shifted, TableauKind::primed_p, TableauKind::primed_q}) {
    try {
      enumerate(kind, Partition{2, 2}, 2);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::invalid_shape_for_kind);
    }
  }
}

TEST(Tableaux, ValidateExamples) {
  EXPECT_FALSE(validate(example_t()));
  EXPECT_FALSE(validate(example_s()));
  EXPECT_FALSE(validate(example_p()));

  auto v = validate(parse_tableau(TableauKind::sst, Partition{1, 1}, 2, "1 / 1"));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->rule, "T2");
  EXPECT_EQ(v->row, 2);
  EXPECT_EQ(v->col, 1);

  v = validate(parse_tableau(TableauKind::primed_q, Partition{3}, 2, "1 2' 2'"));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->rule, "P3");

  v = validate(parse_tableau(TableauKind::primed_q, Partition{3, 1}, 3, "1 2 2 / 2"));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->rule, "P4");

  v = validate(parse_tableau(TableauKind::primed_p, Partition{2, 1}, 2, "1' 1 / 2"));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->rule, "P5");
  EXPECT_FALSE(validate(parse_tableau(TableauKind::primed_q, Partition{2, 1}, 2, "1' 1 / 2")));

  v = validate(parse_tableau(TableauKind::shifted, Partition{2, 1}, 2, "1 1 / 1"));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->rule, "S3");

  v = validate(parse_tableau(TableauKind::sst, Partition{1}, 2, "3"));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->rule, "alphabet");
}

TEST(Tableaux, ValidateShapeMismatch) {
  try {
    validate(parse_tableau(TableauKind::sst, Partition{2, 1}, 2, "1 1 / 2 2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::shape_mismatch);
  }
  EXPECT_THROW(validate(parse_tableau(TableauKind::sst, Partition{2}, 2, "1 1 / 2")), Error);
}

TEST(Tableaux, WeightExamples) {
  EXPECT_EQ(weight(parse_tableau(TableauKind::sst, Partition{1}, 1, "1")), x(1) + a(1));

  const Polynomial s_expected = x(1) * (x(1) + a(1)) * (x(2) + y(2)) * (x(2) + a(3)) * (y(3) - a(4)) *
                                (x(4) + y(4)) * x(2) * (y(3) - a(1)) * (x(3) + a(2)) * (x(3) + a(3)) * x(3) *
                                (y(4) - a(1)) * (x(4) + a(2)) * x(4);
  EXPECT_EQ(weight(example_s()), s_expected);

  const Polynomial p_expected = x(1) * (x(1) + a(1)) * (y(2) - a(2)) * (x(2) + a(3)) * (y(3) - a(4)) *
                                (x(4) + a(5)) * x(2) * (y(3) - a(1)) * (x(3) + a(2)) * (x(3) + a(3)) * x(3) *
                                (y(4) - a(1)) * (x(4) + a(2)) * x(4);
  EXPECT_EQ(weight(example_p()), p_expected);

  const Polynomial t_expected = (x(1) + a(1)) * (x(2) + a(3)) * (x(4) + a(6)) * (x(2) + a(1)) * (x(3) + a(3)) *
                                (x(4) + a(2)) * (x(4) + a(3)) * (x(5) + a(2));
  EXPECT_EQ(weight(example_t()), t_expected);

  EXPECT_THROW(weight(parse_tableau(TableauKind::sst, Partition{1, 1}, 2, "1 / 1")), Error);
}

TEST(Tableaux, RawDiagonalWeights) {
  const auto q = parse_tableau(TableauKind::primed_q, Partition{1}, 1, "1'");
  EXPECT_EQ(weight(q), y(1));
  EXPECT_EQ(weight(q, WeightScheme::factorial_raw), y(1) - a(0));
  EXPECT_EQ(weight(q, WeightScheme::plain), y(1));
}

TEST(TableauxProperty, EnumerateMatchesBruteForce) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& shape : partitions_up_to(8, 8)) {
      for (auto kind : {TableauKind::sst, TableauKind::shifted, TableauKind::primed_p, TableauKind::primed_q}) {
        if (is_shifted_kind(kind) && (!shape.is_strict() || shape.length() > n)) continue;
        if (kind == TableauKind::sst && shape.length() > n) continue;
        const auto fast = enumerate(kind, shape, n);
        const auto slow = brute_force(kind, shape, n);
        std::set<std::string> a_set, b_set;
        for (const auto& t : fast) {
          ASSERT_TRUE(is_valid(t));
          a_set.insert(t.to_string());
        }
        for (const auto& t : slow) b_set.insert(t.to_string());
        ASSERT_EQ(a_set.size(), fast.size()) << "duplicates";
        ASSERT_EQ(a_set, b_set) << kind_name(kind) << " " << shape.to_string() << " n=" << n;
      }
    }
}

TEST(TableauxProperty, HookContentCounts) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& mu : partitions_up_to(6, n))
      EXPECT_EQ(BigInt(count_tableaux(TableauKind::sst, mu, n)), hook_content(mu, n)) << mu.to_string();
}

TEST(TableauxProperty, QCountIsPowerOfTwoTimesP) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : strict_shapes(10, n)) {
      if (lambda.length() != n) continue;
      const auto p = enumerate(TableauKind::primed_p, lambda, n);
      EXPECT_EQ(count_tableaux(TableauKind::primed_q, lambda, n), p.size() << n);
      for (const auto& t : p)
        for (int i = 1; i <= n; ++i) ASSERT_EQ(t.at(i, i), (Entry{i, false}));
      for (const auto& t : enumerate(TableauKind::shifted, lambda, n))
        for (int i = 1; i <= n; ++i) ASSERT_EQ(t.at(i, i).value, i);
    }
}

TEST(TableauxProperty, WeightedSumMatchesEnumeration) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& shape : partitions_up_to(6, n))
      for (auto kind : {TableauKind::sst, TableauKind::primed_p, TableauKind::primed_q})
        for (auto scheme : {WeightScheme::factorial, WeightScheme::factorial_raw, WeightScheme::plain}) {
          if (is_shifted_kind(kind) && !shape.is_strict()) continue;
          Polynomial slow;
          for (const auto& t : enumerate(kind, shape, n)) slow += weight(t, scheme);
          ASSERT_EQ(weighted_sum(kind, shape, n, scheme), slow) << kind_name(kind) << " " << shape.to_string();
        }
}

TEST(TableauxProperty, SummedPrimedAndShiftedWeights) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& lambda : strict_shapes(9, n)) {
      if (lambda.length() != n) continue;
      const Polynomial p = weighted_sum(TableauKind::primed_p, lambda, n);
      const Polynomial q = weighted_sum(TableauKind::primed_q, lambda, n);
      Polynomial xs = 1, xys = 1;
      for (int i = 1; i <= n; ++i) {
        xs *= x(i);
        xys *= x(i) + y(i);
      }
      EXPECT_EQ(q * xs, p * xys) << lambda.to_string();
      EXPECT_EQ(weighted_sum(TableauKind::shifted, lambda, n), p) << lambda.to_string();
    }
}
