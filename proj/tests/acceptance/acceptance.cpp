// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ftok/ftok.hpp"
#include "support/random_poly.hpp"

using namespace ftok;
using namespace ftok::sym;

namespace {

struct Outcome {
  long checks = 0;
  long failed = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failed;
    if (failures.size() < 5) failures.push_back(what);
  }
  void report(const IdentityReport& r) { check(r.pass, r.spec.to_string() + " diff " + r.diff); }
  bool pass() const { return failed == 0 && checks > 0; }
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<IdentitySpec> mu_range(IdentityId id, int max_weight, int max_n, bool spot_n4) {
  std::vector<IdentitySpec> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& mu : partitions_up_to(max_weight, n)) out.push_back({id, mu, std::nullopt, n, {}, {}, {}});
  if (spot_n4)
    for (const auto& mu : {Partition{}, Partition{1}}) out.push_back({id, mu, std::nullopt, 4, {}, {}, {}});
  return out;
}

void run_specs(Outcome& o, const std::vector<IdentitySpec>& specs) {
  for (const auto& r : run_suite(specs, jobs())) o.report(r);
}

std::vector<Partition> strict_full(int max_weight, int n) {
  std::vector<Partition> out;
  for (const auto& p : partitions_up_to(max_weight, n))
    if (p.is_strict() && p.length() == n) out.push_back(p);
  return out;
}

// Reference ice drawing of the worked example, arrow for arrow.
const char* const kDrawnIce =
    " ^ ^ ^ ^ ^ ^\n"
    ">+>+<+<+<+<+<\n"
    " ^ v ^ ^ ^ ^\n"
    ">+<+>+>+<+<+<\n"
    " v ^ ^ v ^ ^\n"
    ">+>+>+>+>+<+<\n"
    " v ^ ^ ^ v ^\n"
    ">+>+>+<+<+>+<\n"
    " v ^ v v ^ v";

Outcome theorem_one() {
  Outcome o;
  auto specs = mu_range(IdentityId::theorem1P, 4, 3, true);
  for (auto s : mu_range(IdentityId::theorem1Q, 4, 3, true)) specs.push_back(s);
  run_specs(o, specs);
  return o;
}

Outcome lemmas_one_two() {
  Outcome o;
  auto specs = mu_range(IdentityId::lemma1, 4, 3, true);
  for (auto s : mu_range(IdentityId::lemma2, 4, 3, true)) specs.push_back(s);
  run_specs(o, specs);
  return o;
}

Outcome lemma_three() {
  Outcome o;
  std::vector<IdentitySpec> specs;
  for (int n = 2; n <= 4; ++n)
    for (int p = 1; p < n; ++p)
      for (int m = 0; m <= 3; ++m) {
        specs.push_back({IdentityId::lemma3a, std::nullopt, std::nullopt, n, m, p, {}});
        for (int q = p + 1; q <= n; ++q) specs.push_back({IdentityId::lemma3b, std::nullopt, std::nullopt, n, m, p, q});
      }
  run_specs(o, specs);
  return o;
}

Outcome lattice_paths() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& mu : partitions_up_to(8, n)) {
      for (const auto& t : enumerate(TableauKind::sst, mu, n)) {
        const auto f = tableau_to_paths(t);
        o.check(paths_to_tableau(f) == t, "sst round trip " + t.to_string());
        o.check(paths_weight(f) == weight(t), "sst weight " + t.to_string());
      }
      Polynomial sum;
      for (const auto& f : nonintersecting_families(PathKind::sst, mu, n)) sum += paths_weight(f);
      o.check(sum == det_formula(DetKind::lemma1, mu, n), "sst determinant " + mu.to_string());
    }
    for (const auto& lambda : strict_full(8, n)) {
      for (const auto& t : enumerate(TableauKind::primed_p, lambda, n)) {
        const auto f = tableau_to_paths(t);
        o.check(paths_to_tableau(f) == t, "pst round trip " + t.to_string());
        o.check(paths_weight(f) == weight(t), "pst weight " + t.to_string());
      }
      Polynomial sum;
      for (const auto& f : nonintersecting_families(PathKind::pst, lambda, n)) sum += paths_weight(f);
      o.check(sum == det_formula(DetKind::lemma2, lambda, n), "pst determinant " + lambda.to_string());
    }
  }
  return o;
}

Outcome bijection_web() {
  Outcome o;
  const auto general = boltzmann_table(BoltzmannVariant::general);
  for (int n = 1; n <= 3; ++n)
    for (const auto& mu : partitions_up_to(3, n)) {
      const auto lambda = shape_for(mu, n, Offset::delta);
      for (const auto& s : enumerate(TableauKind::shifted, lambda, n)) {
        const auto g = gtp_from_shifted(s);
        const auto a = asm_from_gtp(g);
        const auto c = cpm_from_asm(a);
        const auto tag = s.to_string();
        o.check(shifted_from_gtp(g) == s, "S<-G " + tag);
        o.check(gtp_from_asm(a) == g, "G<-A " + tag);
        o.check(asm_from_cpm(c) == a, "A<-C " + tag);
        o.check(asm_from_shifted(s) == a, "S->A direct " + tag);
        o.check(parse_sic(render_sic(c)).to_cpm() == c, "C<-SIC " + tag);
        const auto w = weight(s);
        o.check(weight_gtp(g) == w, "wgt(G) " + tag);
        o.check(weight_cpm(c, general, true) == w, "wgt(A) " + tag);
      }
    }

  const auto s = parse_tableau(TableauKind::shifted, Partition{6, 4, 3, 1}, 4, "1 1 2 2 3 4 / 2 3 3 3 / 3 4 4 / 4");
  const GTPattern g{{{2}, {4, 1}, {5, 4, 1}, {6, 4, 3, 1}}};
  const ASM a{{{0, 1, 0, 0, 0, 0}, {1, -1, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 1, 0, -1, 1}}};
  CPM c;
  for (const auto& row : std::vector<std::vector<std::string>>{{"SW", "WE", "SE", "SE", "SE", "SE"},
                                                              {"WE", "NS", "SW", "WE", "SE", "SE"},
                                                              {"NW", "SW", "SW", "NW", "WE", "SE"},
                                                              {"NW", "SW", "WE", "NE", "NS", "WE"}}) {
    c.emplace_back();
    for (const auto& x : row) c.back().push_back(parse_compass(x));
  }
  o.check(gtp_from_shifted(s) == g, "example S -> G");
  o.check(asm_from_gtp(g) == a, "example G -> A");
  o.check(asm_from_shifted(s) == a, "example S -> A");
  o.check(cpm_from_asm(a) == c, "example A -> C");
  o.check(shifted_from_asm(a) == s, "example A -> S");

  const std::string rendered = render_sic(c);
  const std::string drawn = kDrawnIce;
  std::string where;
  if (rendered.size() == drawn.size()) {
    int line = 1, col = 1;
    for (std::size_t k = 0; k < rendered.size(); ++k) {
      if (rendered[k] != drawn[k])
        where += " line " + std::to_string(line) + " col " + std::to_string(col) + " rendered '" + rendered[k] +
                 "' drawn '" + drawn[k] + "';";
      if (drawn[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  } else {
    where = " lengths differ";
  }
  std::string ice_rule;
  try {
    parse_sic(drawn).to_cpm();
    ice_rule = "reference drawing obeys the ice rule";
  } catch (const Error& e) {
    ice_rule = std::string("reference drawing: ") + e.what();
  }
  o.check(rendered == drawn, "example SIC differs from the reference drawing at" + where + " " + ice_rule);
  return o;
}

Outcome corollary_one() {
  Outcome o;
  run_specs(o, mu_range(IdentityId::cor1_ikeda, 4, 3, true));
  return o;
}

Outcome corollaries_two_three() {
  Outcome o;
  auto specs = mu_range(IdentityId::cor2_asm, 4, 3, true);
  for (auto s : mu_range(IdentityId::cor3_gtp, 4, 3, true)) specs.push_back(s);
  run_specs(o, specs);
  return o;
}

Outcome corollary_four() {
  Outcome o;
  const auto reports = run_suite(mu_range(IdentityId::cor4_tokuyama, 3, 3, false), jobs());
  for (const auto& r : reports) {
    o.report(r);
    const int n = *r.spec.n;
    Polynomial direct = tableau_sum(SymKind::schur, *r.spec.mu, n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) direct *= x(i) + t() * x(j);
    o.check(Polynomial::parse(r.lhs) == direct, "deformed Weyl form " + r.spec.to_string());
  }
  return o;
}

Outcome corollary_five() {
  Outcome o;
  run_specs(o, mu_range(IdentityId::cor5_bmn, 3, 3, false));
  const auto bmn = boltzmann_table(BoltzmannVariant::bmn);
  const auto moved = boltzmann_table(BoltzmannVariant::bmn_modified);
  for (int n = 1; n <= 3; ++n)
    for (const auto& mu : partitions_up_to(3, n)) {
      const auto shift = power(Variable::t(), -mu.weight());
      for (const auto& a : enumerate_asm(shape_for(mu, n, Offset::delta))) {
        const auto c = cpm_from_asm(a);
        o.check(weight_cpm(c, bmn, false) == shift * weight_cpm(c, moved, false), "t-shift " + mu.to_string());
      }
      const auto s = to_z_alpha().apply(factorial_schur(mu, n));
      Substitution scale;
      scale.set_family(Family::z, [](int i) { return t() * z(i); });
      scale.set_family(Family::alpha, [](int j) { return t() * alpha(j); });
      o.check(shift * scale.apply(s) == s, "homogeneity " + mu.to_string());
    }
  return o;
}

Outcome corollary_six() {
  Outcome o;
  run_specs(o, mu_range(IdentityId::cor6_lascoux, 3, 3, false));
  return o;
}

Outcome lemma_four() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (const auto& mu : partitions_up_to(3, n))
      for (const auto& a : enumerate_asm(shape_for(mu, n, Offset::delta))) {
        auto k = compass_counts(cpm_from_asm(a));
        o.check(k[Compass::SW] == k[Compass::NE] + mu.weight(), "counts " + mu.to_string());
      }
  run_specs(o, mu_range(IdentityId::lemma4, 3, 3, false));
  const ASM example{{{0, 1, 0, 0, 0, 0}, {1, -1, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 1, 0, -1, 1}}};
  auto k = compass_counts(cpm_from_asm(example));
  const int mu_weight = subtract_offset(example.shape(), Offset::delta).weight();
  o.check(k[Compass::SW] == 5 && k[Compass::NE] == 1 && mu_weight == 4, "example 5 = 1 + 4");
  return o;
}

BigInt hook_content(const Partition& mu, int n) {
  BigInt num = 1, den = 1;
  const auto conj = conjugate(mu);
  for (const auto& c : cells(DiagramKind::young, mu)) {
    num *= n + c.col - c.row;
    den *= (mu.part(c.row) - c.col) + (conj.part(c.col) - c.row) + 1;
  }
  return num / den;
}

Outcome oracle_counts() {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (const auto& mu : partitions_up_to(6, n))
      o.check(BigInt(count_tableaux(TableauKind::sst, mu, n)) == hook_content(mu, n), "hook content " + mu.to_string());
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : strict_full(10, n))
      o.check(count_tableaux(TableauKind::primed_q, lambda, n) == (count_tableaux(TableauKind::primed_p, lambda, n) << n),
              "2^n " + lambda.to_string());
  // Every 3x3 matrix over {-1,0,1}.
  const Partition lambda{3, 2, 1};
  std::set<IntMatrix> brute;
  for (int code = 0; code < 19683; ++code) {
    ASM a{IntMatrix(3, std::vector<int>(3))};
    int c = code;
    for (int k = 0; k < 9; ++k, c /= 3) a.entries[static_cast<std::size_t>(k / 3)][static_cast<std::size_t>(k % 3)] = c % 3 - 1;
    if (is_valid_asm(a, lambda)) brute.insert(a.entries);
  }
  std::set<IntMatrix> fast;
  for (const auto& a : enumerate_asm(lambda)) fast.insert(a.entries);
  o.check(brute.size() == 7, "brute-force count " + std::to_string(brute.size()));
  o.check(brute == fast, "brute force equals enumeration");
  return o;
}

Outcome algebra_properties() {
  using test_support::cofactor_det;
  using test_support::random_poly;
  Outcome o;
  std::mt19937 rng(20240607);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_poly(rng, true), q = random_poly(rng, true), r = random_poly(rng, true);
    o.check(p + q == q + p && p * q == q * p && (p + q) + r == p + (q + r) && (p * q) * r == p * (q * r) &&
                p * (q + r) == p * q + p * r && p + Polynomial{} == p && p * Polynomial(1) == p && (p - p).is_zero(),
            "ring axioms " + canonical(p));
  }
  for (int i = 0; i < 300; ++i) {
    const auto p = random_poly(rng), q = random_poly(rng);
    Substitution s;
    s.set_family(Family::y, [](int k) { return x(k) + a(k); });
    s.set(Variable::t(), random_poly(rng));
    s.set_family(Family::alpha, [](int k) { return -a(k); });
    o.check(s.apply(p + q) == s.apply(p) + s.apply(q) && s.apply(p * q) == s.apply(p) * s.apply(q),
            "homomorphism " + canonical(p));
  }
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    PolyMatrix m(n, std::vector<Polynomial>(n));
    for (auto& row : m)
      for (auto& e : row) e = random_poly(rng, true);
    o.check(det(m) == cofactor_det(m), "determinant n=" + std::to_string(n));
  }
  for (int i = 0; i < 500; ++i) {
    const auto p = random_poly(rng, true);
    o.check(Polynomial::parse(p.to_string()) == p, "round trip " + p.to_string());
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"theorem 1, P and Q classes", theorem_one},
      {"lemmas 1 and 2, determinant = tableau sum", lemmas_one_two},
      {"lemma 3a and 3b", lemma_three},
      {"lattice paths: round trip, weights, determinants", lattice_paths},
      {"bijection web and worked example", bijection_web},
      {"corollary 1, y := x", corollary_one},
      {"corollaries 2 and 3, ASM and GT sums", corollaries_two_three},
      {"corollary 4, monotone triangles", corollary_four},
      {"corollary 5, t-shift, homogeneity", corollary_five},
      {"corollary 6, Laurent identity", corollary_six},
      {"lemma 4, #SW = #NE + |mu|", lemma_four},
      {"oracle counts", oracle_counts},
      {"algebra properties", algebra_properties},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      ++o.failed;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass() ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first << " (" << o.checks
              << " checks, " << o.failed << " failed, " << timing << ")\n";
    for (const auto& f : o.failures) std::cout << "    " << f << '\n';
    failed += !o.pass();
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
