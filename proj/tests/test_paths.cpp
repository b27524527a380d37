#include <gtest/gtest.h>

#include "ftok/paths.hpp"
#include "ftok/symfun.hpp"

using namespace ftok;

namespace {

Tableau example_t() { return parse_tableau(TableauKind::sst, Partition{3, 2, 2, 1, 0}, 5, "1 2 4 / 2 3 / 4 4 / 5"); }
Tableau example_p() {
  return parse_tableau(TableauKind::primed_p, Partition{6, 4, 3, 1}, 4, "1 1 2' 2 3' 4 / 2 3' 3 3 / 3 4' 4 / 4");
}

// Reference families: start point and step word of each path.
PathFamily sst_family() {
  return {PathKind::sst, 5, Partition{3, 2, 2, 1, 0},
          {{{1, 5}, "HVHVVHVV"}, {{2, 4}, "HVHVVV"}, {{3, 3}, "VHHVV"}, {{4, 2}, "VHV"}, {{5, 1}, "V"}}};
}
PathFamily pst_family() {
  return {PathKind::pst, 4, Partition{6, 4, 3, 1},
          {{{1, 0}, "HHDHDVHV"}, {{2, 0}, "HDHHVV"}, {{3, 0}, "HDHV"}, {{4, 0}, "HV"}}};
}

}  // namespace

TEST(Paths, ExampleSstFamily) {
  EXPECT_EQ(tableau_to_paths(example_t()), sst_family());
  EXPECT_EQ(paths_to_tableau(sst_family()), example_t());
  EXPECT_EQ(paths_weight(sst_family()), weight(example_t()));
}

TEST(Paths, ExamplePrimedFamily) {
  EXPECT_EQ(tableau_to_paths(example_p()), pst_family());
  EXPECT_EQ(paths_to_tableau(pst_family()), example_p());
  EXPECT_EQ(paths_weight(pst_family()), weight(example_p()));
}

TEST(Paths, SingleVerticalPath) {
  const auto t = parse_tableau(TableauKind::sst, Partition{0}, 1, "");
  const auto f = tableau_to_paths(t);
  ASSERT_EQ(f.paths.size(), 1u);
  EXPECT_EQ(f.paths[0].start, (Point{1, 1}));
  EXPECT_EQ(f.paths[0].steps, "V");
  EXPECT_EQ(f.paths[0].end(), (Point{2, 1}));
  EXPECT_EQ(paths_to_tableau(f), t);
  EXPECT_EQ(paths_weight(f), Polynomial(1));
}

TEST(Paths, RejectsBadFamilies) {
  auto f = sst_family();
  f.paths[0].steps = "HVHVVHV";
  EXPECT_THROW(paths_to_tableau(f), Error);

  f = pst_family();
  f.paths[3].steps = "VH";
  try {
    paths_to_tableau(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::malformed_family);
  }

  // Row 2 of shape (1,1) at n = 2 taken through (2,2), which path 1 also visits.
  PathFamily clash{PathKind::sst, 2, Partition{1, 1}, {{{1, 2}, "VHV"}, {{2, 1}, "HV"}}};
  try {
    paths_to_tableau(clash);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::intersecting_paths);
  }
}

TEST(PathsProperty, RoundTripWeightAndDeterminant) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& mu : partitions_up_to(8, n)) {
      Polynomial sum;
      for (const auto& t : enumerate(TableauKind::sst, mu, n)) {
        const auto f = tableau_to_paths(t);
        ASSERT_EQ(paths_to_tableau(f), t);
        ASSERT_EQ(paths_weight(f), weight(t));
      }
      if (mu.weight() > 5) continue;
      for (const auto& f : nonintersecting_families(PathKind::sst, mu, n)) sum += paths_weight(f);
      EXPECT_EQ(sum, det_formula(DetKind::lemma1, mu, n)) << mu.to_string();
    }
    for (const auto& lambda : partitions_up_to(8, n)) {
      if (!lambda.is_strict() || lambda.length() != n) continue;
      Polynomial sum;
      for (const auto& t : enumerate(TableauKind::primed_p, lambda, n)) {
        const auto f = tableau_to_paths(t);
        ASSERT_EQ(paths_to_tableau(f), t);
        ASSERT_EQ(paths_weight(f), weight(t));
      }
      if (lambda.weight() > 6) continue;
      for (const auto& f : nonintersecting_families(PathKind::pst, lambda, n)) sum += paths_weight(f);
      EXPECT_EQ(sum, det_formula(DetKind::lemma2, lambda, n)) << lambda.to_string();
    }
  }
}
