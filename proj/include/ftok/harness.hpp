#pragma once

// Identity checks: each id computes two sides through the owning modules and
// compares canonical(lhs - rhs) with "0".

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"

#include "ftok/algebra.hpp"
#include "ftok/combin.hpp"
#include "ftok/error.hpp"
#include "ftok/paths.hpp"
#include "ftok/shapes.hpp"
#include "ftok/sixvertex.hpp"
#include "ftok/symfun.hpp"
#include "ftok/tableaux.hpp"

namespace ftok {

inline constexpr const char* kVersion = "1.0.0";

enum class IdentityId {
  theorem1P,
  theorem1Q,
  lemma1,
  lemma2,
  lemma3a,
  lemma3b,
  lemma4,
  cor1_ikeda,
  cor2_asm,
  cor3_gtp,
  cor4_tokuyama,
  cor5_bmn,
  cor6_lascoux,
  pathsLemma1,
  pathsLemma2,
};

inline const std::vector<std::pair<IdentityId, std::string_view>>& identity_names() {
  static const std::vector<std::pair<IdentityId, std::string_view>> names = {
      {IdentityId::theorem1P, "theorem1P"},       {IdentityId::theorem1Q, "theorem1Q"},
      {IdentityId::lemma1, "lemma1"},             {IdentityId::lemma2, "lemma2"},
      {IdentityId::lemma3a, "lemma3a"},           {IdentityId::lemma3b, "lemma3b"},
      {IdentityId::lemma4, "lemma4"},             {IdentityId::cor1_ikeda, "cor1_ikeda"},
      {IdentityId::cor2_asm, "cor2_asm"},         {IdentityId::cor3_gtp, "cor3_gtp"},
      {IdentityId::cor4_tokuyama, "cor4_tokuyama"}, {IdentityId::cor5_bmn, "cor5_bmn"},
      {IdentityId::cor6_lascoux, "cor6_lascoux"}, {IdentityId::pathsLemma1, "pathsLemma1"},
      {IdentityId::pathsLemma2, "pathsLemma2"},
  };
  return names;
}

inline std::string identity_name(IdentityId id) {
  for (const auto& [k, v] : identity_names())
    if (k == id) return std::string(v);
  return "?";
}

inline IdentityId parse_identity(std::string_view s) {
  for (const auto& [k, v] : identity_names())
    if (v == s) return k;
  throw Error(Errc::bad_params, "unknown identity '" + std::string(s) + "'");
}

struct IdentitySpec {
  IdentityId id = IdentityId::theorem1P;
  std::optional<Partition> mu;
  std::optional<Partition> lambda;
  std::optional<int> n, m, p, q;

  std::string to_string() const {
    std::string s = identity_name(id);
    if (mu) s += " mu=" + (mu->size() ? mu->to_string() : std::string("-"));
    if (lambda) s += " lambda=" + lambda->to_string();
    if (n) s += " n=" + std::to_string(*n);
    if (m) s += " m=" + std::to_string(*m);
    if (p) s += " p=" + std::to_string(*p);
    if (q) s += " q=" + std::to_string(*q);
    return s;
  }
};

struct IdentityReport {
  IdentitySpec spec;
  std::string lhs;
  std::string rhs;
  std::string diff;
  bool pass = false;
  std::chrono::duration<double> elapsed{};
};

// ---------------------------------------------------------------------------
// Cache of summed tableau weights, one JSON file per request.

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// FTOK_CACHE_DIR, else .ftok-cache/ under the working directory.
  static Cache from_env() {
    const char* d = std::getenv("FTOK_CACHE_DIR");
    return Cache(d && *d ? std::filesystem::path(d) : std::filesystem::path(".ftok-cache"));
  }

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path path_for(std::string_view request) const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(request)));
    return dir_ / (std::string(buf) + ".json");
  }

  struct Hit {
    long long count;
    Polynomial value;
  };

  std::optional<Hit> load(std::string_view request) const {
    std::ifstream in(path_for(request));
    if (!in) return std::nullopt;
    try {
      const auto j = nlohmann::json::parse(in);
      if (j.at("request").get<std::string>() != request || j.at("version").get<std::string>() != kVersion) return std::nullopt;
      return Hit{j.at("count").get<long long>(), Polynomial::parse(j.at("canonical_polynomial").get<std::string>())};
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  /// Write to a unique temporary file, then rename over the entry.
  void store(std::string_view request, long long count, const Polynomial& value) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const nlohmann::json j = {
        {"request", request}, {"count", count}, {"canonical_polynomial", canonical(value)}, {"version", kVersion}};
    const auto target = path_for(request);
    std::ostringstream suffix;
    suffix << ".tmp." << std::this_thread::get_id() << '.' << counter_++;
    auto tmp = target;
    tmp += suffix.str();
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << j.dump() << '\n';
      if (!out) return;
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

 private:
  std::filesystem::path dir_;
  inline static std::atomic<unsigned long long> counter_{0};
};

/// Summed weight of (kind, shape, n) under the given scheme, through the cache when given.
inline Polynomial cached_weighted_sum(const Cache* cache, TableauKind kind, const Partition& shape, int n,
                                      WeightScheme scheme) {
  const std::string request = "weighted_sum kind=" + kind_name(kind) + " shape=" + shape.to_string() +
                              " n=" + std::to_string(n) + " scheme=" + std::to_string(static_cast<int>(scheme));
  if (cache)
    if (auto hit = cache->load(request)) return hit->value;
  Polynomial value = weighted_sum(kind, shape, n, scheme);
  if (cache) cache->store(request, count_tableaux(kind, shape, n), value);
  return value;
}

namespace detail {

inline Partition need_mu(const IdentitySpec& s) {
  if (!s.mu) throw Error(Errc::bad_params, identity_name(s.id) + " needs mu");
  return *s.mu;
}

inline int need(const std::optional<int>& v, const IdentitySpec& s, const char* name) {
  if (!v) throw Error(Errc::bad_params, identity_name(s.id) + " needs " + name);
  return *v;
}

inline std::pair<Partition, int> mu_n(const IdentitySpec& s) {
  const auto mu = need_mu(s);
  const int n = need(s.n, s, "n");
  if (n < 1) throw Error(Errc::bad_params, "n must be positive");
  if (mu.length() > n) throw Error(Errc::bad_params, "mu = " + mu.to_string() + " has more than n parts");
  return {mu, n};
}

/// lambda given directly, or as mu + delta.
inline std::pair<Partition, int> lambda_n(const IdentitySpec& s) {
  const int n = need(s.n, s, "n");
  if (n < 1) throw Error(Errc::bad_params, "n must be positive");
  if (s.lambda) {
    const auto& l = *s.lambda;
    if (!l.is_strict() || l.length() != n)
      throw Error(Errc::bad_params, "lambda = " + l.to_string() + " must be strict with n nonzero parts");
    return {l.normalized(), n};
  }
  const auto [mu, nn] = mu_n(s);
  return {shape_for(mu, nn, Offset::delta), nn};
}

inline void check_lemma3(const IdentitySpec& s) {
  const int m = need(s.m, s, "m");
  const int p = need(s.p, s, "p");
  const int n = need(s.n, s, "n");
  if (m < 0) throw Error(Errc::bad_params, "m must be nonnegative");
  if (s.id == IdentityId::lemma3a) {
    if (!(1 <= p && p < n)) throw Error(Errc::bad_params, "lemma3a needs 1 <= p < n");
  } else {
    const int q = need(s.q, s, "q");
    if (!(1 <= p && p < q && q <= n)) throw Error(Errc::bad_params, "lemma3b needs 1 <= p < q <= n");
  }
}

// Tail y_k, x_k, ..., y_n, x_n at a fixed offset.
inline void push_tail(ShiftedAlphabet& al, int from, int n, int offset) {
  for (int k = from; k <= n; ++k) al.push(Variable::y(k), offset).push(Variable::x(k), offset);
}

inline std::pair<Polynomial, Polynomial> lemma3_sides(const IdentitySpec& s) {
  const int m = *s.m, p = *s.p, n = *s.n;
  ShiftedAlphabet first, second, right;
  Polynomial lead;
  if (s.id == IdentityId::lemma3a) {
    first.push(Variable::x(p), 0);
    push_tail(first, p + 1, n, 0);
    second.push(Variable::x(p + 1), 0);
    push_tail(second, p + 2, n, 0);
    right.push(Variable::x(p), 0).push(Variable::x(p + 1), 1);
    push_tail(right, p + 2, n, 1);
    lead = sym::x(p) + sym::y(p + 1);
  } else {
    const int q = *s.q;
    for (int k = p; k < q; ++k) first.push(Variable::x(k), k - p);
    push_tail(first, q, n, q - p - 1);
    for (int k = p + 1; k <= q; ++k) second.push(Variable::x(k), k - p - 1);
    push_tail(second, q + 1, n, q - p - 1);
    for (int k = p; k <= q; ++k) right.push(Variable::x(k), k - p);
    push_tail(right, q + 1, n, q - p);
    lead = sym::x(p) + sym::y(q);
  }
  return {q_poly(first, m) - q_poly(second, m), lead * q_poly(right, m - 1)};
}

inline Polynomial vandermonde_like(int n, const std::function<Polynomial(int, int)>& f) {
  Polynomial out = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out *= f(i, j);
  return out;
}

inline std::pair<Polynomial, Polynomial> compute(const IdentitySpec& s, const Cache* cache) {
  using namespace sym;
  switch (s.id) {
    case IdentityId::theorem1P:
    case IdentityId::theorem1Q: {
      const auto [mu, n] = mu_n(s);
      const auto lambda = shape_for(mu, n, Offset::delta);
      const bool is_p = s.id == IdentityId::theorem1P;
      Polynomial lhs = cached_weighted_sum(cache, is_p ? TableauKind::primed_p : TableauKind::primed_q, lambda, n,
                                           WeightScheme::factorial_raw);
      lhs = set_a0_to_zero(lhs);
      return {lhs, theorem_rhs(mu, n, is_p ? TheoremClass::P : TheoremClass::Q)};
    }
    case IdentityId::lemma1: {
      const auto [mu, n] = mu_n(s);
      return {det_formula(DetKind::lemma1, mu, n), cached_weighted_sum(cache, TableauKind::sst, mu, n, WeightScheme::factorial)};
    }
    case IdentityId::lemma2: {
      const auto [lambda, n] = lambda_n(s);
      return {det_formula(DetKind::lemma2, lambda, n),
              set_a0_to_zero(cached_weighted_sum(cache, TableauKind::primed_p, lambda, n, WeightScheme::factorial_raw))};
    }
    case IdentityId::lemma3a:
    case IdentityId::lemma3b:
      check_lemma3(s);
      return lemma3_sides(s);
    case IdentityId::lemma4: {
      const auto [mu, n] = mu_n(s);
      const auto asms = enumerate_asm(shape_for(mu, n, Offset::delta));
      Polynomial lhs;
      for (const auto& a : asms) {
        auto counts = compass_counts(cpm_from_asm(a));
        lhs += power(Variable::t(), counts[Compass::SW] - counts[Compass::NE]);
      }
      return {lhs, Polynomial(static_cast<long long>(asms.size())) * pow(t(), static_cast<unsigned>(mu.weight()))};
    }
    case IdentityId::cor1_ikeda: {
      const auto [mu, n] = mu_n(s);
      Substitution y_to_x;
      y_to_x.set_family(Family::y, [](int i) { return x(i); });
      const auto q = set_a0_to_zero(cached_weighted_sum(cache, TableauKind::primed_q, shape_for(mu, n, Offset::delta), n,
                                                        WeightScheme::factorial_raw));
      Polynomial rhs = factorial_schur(mu, n) * vandermonde_like(n, [](int i, int j) { return x(i) + x(j); });
      for (int i = 1; i <= n; ++i) rhs *= 2 * x(i);
      return {y_to_x.apply(q), rhs};
    }
    case IdentityId::cor2_asm: {
      const auto [mu, n] = mu_n(s);
      return {partition_function(mu, n, BoltzmannVariant::general), theorem_rhs(mu, n, TheoremClass::P)};
    }
    case IdentityId::cor3_gtp: {
      const auto [mu, n] = mu_n(s);
      Polynomial lhs;
      for (const auto& g : enumerate_gtp(shape_for(mu, n, Offset::delta))) lhs += weight_gtp(g);
      return {lhs, theorem_rhs(mu, n, TheoremClass::P)};
    }
    case IdentityId::cor4_tokuyama: {
      const auto [mu, n] = mu_n(s);
      Polynomial lhs;
      for (const auto& g : enumerate_gtp(shape_for(mu, n, Offset::rho))) {
        const auto c = count_triples(g);
        Polynomial term = pow(t(), static_cast<unsigned>(c.R)) * pow(1 + t(), static_cast<unsigned>(c.B));
        for (int i = 1; i <= n; ++i) term *= pow(x(i), static_cast<unsigned>(g.row_sum(i) - g.row_sum(i - 1)));
        lhs += term;
      }
      Substitution deform;
      deform.set_family(Family::a, [](int) { return Polynomial{}; });
      deform.set_family(Family::y, [](int i) { return t() * x(i); });
      const Polynomial rhs =
          deform.apply(vandermonde_like(n, [](int i, int j) { return x(i) + y(j); }) * factorial_schur(mu, n));
      return {lhs, rhs};
    }
    case IdentityId::cor5_bmn: {
      const auto [mu, n] = mu_n(s);
      return {partition_function(mu, n, BoltzmannVariant::bmn),
              vandermonde_like(n, [](int i, int j) { return t() * z(i) + z(j); }) *
                  to_z_alpha().apply(factorial_schur(mu, n))};
    }
    case IdentityId::cor6_lascoux: {
      const auto [mu, n] = mu_n(s);
      const auto kappa = shape_for(mu, n, Offset::rho);
      const auto kc = conjugate(kappa);
      Polynomial rhs = factorial_schur(mu, n);
      for (int i = 1; i <= n; ++i) rhs *= pow(x(i), static_cast<unsigned>(n - i));
      for (int j = 1; j <= kc.length(); ++j) rhs *= power(Variable::a(j), -kc.part(j));
      if (kappa.weight() % 2) rhs = -rhs;
      return {partition_function(mu, n, BoltzmannVariant::lascoux), rhs};
    }
    case IdentityId::pathsLemma1: {
      const auto [mu, n] = mu_n(s);
      Polynomial lhs;
      for (const auto& f : nonintersecting_families(PathKind::sst, mu, n)) lhs += paths_weight(f);
      return {lhs, det_formula(DetKind::lemma1, mu, n)};
    }
    case IdentityId::pathsLemma2: {
      const auto [lambda, n] = lambda_n(s);
      Polynomial lhs;
      for (const auto& f : nonintersecting_families(PathKind::pst, lambda, n)) lhs += paths_weight(f);
      return {lhs, det_formula(DetKind::lemma2, lambda, n)};
    }
  }
  throw Error(Errc::bad_params, "unhandled identity");
}

}  // namespace detail

/// Throws bad_params when the parameters do not fit the id.
inline void validate_spec(const IdentitySpec& s) {
  switch (s.id) {
    case IdentityId::lemma2:
    case IdentityId::pathsLemma2:
      detail::lambda_n(s);
      break;
    case IdentityId::lemma3a:
    case IdentityId::lemma3b:
      detail::check_lemma3(s);
      break;
    default:
      detail::mu_n(s);
  }
}

inline IdentityReport verify_identity(const IdentitySpec& spec, const Cache* cache = nullptr) {
  validate_spec(spec);
  const auto start = std::chrono::steady_clock::now();
  IdentityReport r;
  r.spec = spec;
  try {
    const auto [lhs, rhs] = detail::compute(spec, cache);
    r.lhs = canonical(lhs);
    r.rhs = canonical(rhs);
    r.diff = canonical(lhs - rhs);
  } catch (const Error& e) {
    if (e.code() == Errc::mu_too_long || e.code() == Errc::invalid_shape || e.code() == Errc::invalid_shape_for_kind)
      throw Error(Errc::bad_params, e.what());
    throw;
  }
  r.pass = r.diff == "0";
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

// ---------------------------------------------------------------------------
// Suites.

/// Every spec in the acceptance ranges.
inline std::vector<IdentitySpec> default_suite() {
  std::vector<IdentitySpec> out;
  auto add_mu = [&](IdentityId id, int max_weight, int max_n) {
    for (int n = 1; n <= max_n; ++n)
      for (const auto& mu : partitions_up_to(max_weight, n)) out.push_back({id, mu, std::nullopt, n, {}, {}, {}});
  };
  for (auto id : {IdentityId::theorem1P, IdentityId::theorem1Q, IdentityId::lemma1, IdentityId::lemma2,
                  IdentityId::cor1_ikeda, IdentityId::cor2_asm, IdentityId::cor3_gtp}) {
    add_mu(id, 4, 3);
    out.push_back({id, Partition{}, std::nullopt, 4, {}, {}, {}});
    out.push_back({id, Partition{1}, std::nullopt, 4, {}, {}, {}});
  }
  for (auto id : {IdentityId::lemma4, IdentityId::cor4_tokuyama, IdentityId::cor5_bmn, IdentityId::cor6_lascoux})
    add_mu(id, 3, 3);
  for (int n = 2; n <= 4; ++n)
    for (int p = 1; p < n; ++p)
      for (int m = 0; m <= 3; ++m) {
        out.push_back({IdentityId::lemma3a, std::nullopt, std::nullopt, n, m, p, {}});
        for (int q = p + 1; q <= n; ++q) out.push_back({IdentityId::lemma3b, std::nullopt, std::nullopt, n, m, p, q});
      }
  add_mu(IdentityId::pathsLemma1, 5, 3);
  add_mu(IdentityId::pathsLemma2, 3, 3);
  return out;
}

inline IdentitySpec spec_from_json(const nlohmann::json& j) {
  try {
    IdentitySpec s;
    s.id = parse_identity(j.at("id").get<std::string>());
    auto part = [](const nlohmann::json& v) {
      return v.is_string() ? Partition::parse(v.get<std::string>()) : Partition(v.get<std::vector<int>>());
    };
    if (j.contains("mu")) s.mu = part(j.at("mu"));
    if (j.contains("lambda")) s.lambda = part(j.at("lambda"));
    for (auto [key, slot] : {std::pair{"n", &s.n}, {"m", &s.m}, {"p", &s.p}, {"q", &s.q}})
      if (j.contains(key)) *slot = j.at(key).get<int>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::bad_config, std::string("bad identity entry: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::bad_params) throw;
    throw Error(Errc::bad_config, e.what());
  }
}

/// {"default": true} runs the default suite; "identities" lists extra specs.
inline std::vector<IdentitySpec> load_suite_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::bad_config, "cannot read suite config " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::bad_config, path + ": " + e.what());
  }
  if (!j.is_object()) throw Error(Errc::bad_config, "suite config must be an object");
  std::vector<IdentitySpec> specs;
  if (j.value("default", false)) specs = default_suite();
  if (j.contains("identities")) {
    if (!j.at("identities").is_array()) throw Error(Errc::bad_config, "identities must be an array");
    for (const auto& e : j.at("identities")) specs.push_back(spec_from_json(e));
  }
  return specs;
}

/// Runs the specs on `jobs` threads; reports come back in spec order.
inline std::vector<IdentityReport> run_suite(const std::vector<IdentitySpec>& specs, unsigned jobs = 1,
                                             const Cache* cache = nullptr) {
  for (const auto& s : specs) validate_spec(s);
  std::vector<IdentityReport> reports(specs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < specs.size();) {
      try {
        reports[i] = verify_identity(specs[i], cache);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(specs.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return reports;
}

inline nlohmann::json report_json(const IdentityReport& r, bool with_elapsed = true) {
  nlohmann::json j = {{"id", identity_name(r.spec.id)}, {"spec", r.spec.to_string()}, {"lhs", r.lhs},
                      {"rhs", r.rhs},                   {"diff", r.diff},            {"pass", r.pass}};
  if (with_elapsed) j["elapsed_s"] = r.elapsed.count();
  return j;
}

}  // namespace ftok
