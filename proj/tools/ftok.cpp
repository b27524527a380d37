// Command-line front end. Exit codes: 0 ok, 1 identity failure, 2 error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ftok/ftok.hpp"

using namespace ftok;
using json = nlohmann::json;

namespace {

struct Common {
  bool as_json = false;
};

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.as_json) std::cout << j.dump(2) << '\n';
  else std::cout << text << '\n';
}

int cmd_enumerate(const Common& c, const std::string& kind, const std::string& shape_text, int n, bool count_only) {
  const auto shape = Partition::parse(shape_text);
  if (kind == "gtp" || kind == "asm") {
    if (static_cast<int>(shape.size()) != n) throw Error(Errc::bad_params, "top row must have n = " + std::to_string(n) + " parts");
    json items = json::array();
    std::string text;
    std::size_t count = 0;
    if (kind == "gtp") {
      const auto all = enumerate_gtp(shape);
      count = all.size();
      if (!count_only)
        for (const auto& g : all) {
          items.push_back(io::to_json(g));
          text += g.to_string() + '\n';
        }
    } else {
      const auto all = enumerate_asm(shape);
      count = all.size();
      if (!count_only)
        for (const auto& a : all) {
          items.push_back(io::to_json(a));
          for (const auto& row : a.entries) {
            for (std::size_t j = 0; j < row.size(); ++j) text += (j ? " " : "") + std::to_string(row[j]);
            text += '\n';
          }
          text += '\n';
        }
    }
    json out = {{"kind", kind}, {"shape", io::to_json(shape)}, {"n", n}, {"count", count}};
    if (!count_only) out["items"] = items;
    emit(c, out, count_only ? std::to_string(count) : text + "count " + std::to_string(count));
    return 0;
  }
  const auto k = parse_tableau_kind(kind);
  if (count_only) {
    const auto count = count_tableaux(k, shape, n);
    emit(c, {{"kind", kind_name(k)}, {"shape", io::to_json(shape)}, {"n", n}, {"count", count}}, std::to_string(count));
    return 0;
  }
  const auto all = enumerate(k, shape, n);
  json items = json::array();
  std::string text;
  for (const auto& t : all) {
    items.push_back(io::to_json(t));
    text += t.to_string() + '\n';
  }
  emit(c, {{"kind", kind_name(k)}, {"shape", io::to_json(shape)}, {"n", n}, {"count", all.size()}, {"items", items}},
       text + "count " + std::to_string(all.size()));
  return 0;
}

int cmd_sf(const Common& c, const std::string& kind, const std::string& shape_text, int n) {
  const auto shape = Partition::parse(shape_text);
  Polynomial p;
  if (kind == "lemma1-det") p = det_formula(DetKind::lemma1, shape, n);
  else if (kind == "lemma2-det") p = det_formula(DetKind::lemma2, shape, n);
  else p = tableau_sum(parse_sym_kind(kind), shape, n);
  emit(c, {{"kind", kind}, {"shape", io::to_json(shape)}, {"n", n}, {"polynomial", canonical(p)}}, canonical(p));
  return 0;
}

int cmd_bijection(const Common& c, const std::string& from, const std::string& to, const std::string& input) {
  const auto in = io::read_json_file(input);
  json out;
  std::string text;
  auto finish_asm = [&](const ASM& a) {
    if (to == "asm") {
      out = io::to_json(a);
      text = out.at("asm").dump();
    } else if (to == "cpm") {
      out = io::to_json(cpm_from_asm(a));
      text = out.at("cpm").dump();
    } else if (to == "sic") {
      text = render_sic(cpm_from_asm(a));
      out = {{"sic", text}};
    } else if (to == "gtp") {
      const auto g = gtp_from_asm(a);
      out = io::to_json(g);
      text = g.to_string();
    } else if (to == "shifted") {
      const auto s = shifted_from_asm(a);
      out = io::to_json(s);
      text = s.to_string();
    } else {
      throw Error(Errc::bad_params, "cannot map " + from + " to " + to);
    }
  };
  if (from == "shifted" || from == "gtp" || from == "asm") {
    if (from == "shifted") {
      const auto s = io::tableau_from_json(in);
      if (to == "gtp") {
        const auto g = gtp_from_shifted(s);
        out = io::to_json(g);
        text = g.to_string();
      } else {
        finish_asm(asm_from_shifted(s));
      }
    } else if (from == "gtp") {
      const auto g = io::gtp_from_json(in);
      if (to == "shifted") {
        const auto s = shifted_from_gtp(g);
        out = io::to_json(s);
        text = s.to_string();
      } else {
        finish_asm(asm_from_gtp(g));
      }
    } else {
      const auto a = io::asm_from_json(in);
      validate_asm(a, a.shape());
      finish_asm(a);
    }
  } else if (from == "sst" || from == "primed-p") {
    if (to != "paths") throw Error(Errc::bad_params, "tableaux map to paths only");
    const auto t = io::tableau_from_json(in);
    const auto f = tableau_to_paths(t);
    out = io::to_json(f);
    for (const auto& p : f.paths) text += "(" + std::to_string(p.start.first) + "," + std::to_string(p.start.second) + ") " + p.steps + '\n';
    text += "weight " + canonical(paths_weight(f));
  } else if (from == "paths") {
    if (to != "tableau") throw Error(Errc::bad_params, "paths map to tableau only");
    const auto t = paths_to_tableau(io::paths_from_json(in));
    out = io::to_json(t);
    text = t.to_string();
  } else {
    throw Error(Errc::bad_params, "unknown source '" + from + "'");
  }
  emit(c, out, text);
  return 0;
}

int cmd_zfunc(const Common& c, const std::string& variant, const std::string& mu_text, int n) {
  const auto v = parse_variant(variant);
  const auto mu = Partition::parse(mu_text);
  const auto z = partition_function(mu, n, v);
  emit(c, {{"variant", variant_name(v)}, {"mu", io::to_json(mu)}, {"n", n}, {"polynomial", canonical(z)}}, canonical(z));
  return 0;
}

void print_report(const Common& c, const IdentityReport& r) {
  if (c.as_json) return;
  std::cout << (r.pass ? "PASS " : "FAIL ") << r.spec.to_string() << "\n  lhs  " << r.lhs << "\n  rhs  " << r.rhs
            << "\n  diff " << r.diff << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorial Schur functions, shifted tableaux and square ice"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.as_json, "JSON output");

  std::string kind, shape, from, to, input, variant, id, mu, lambda, config;
  int n = 0, m = 0, p = 0, q = 0;
  unsigned jobs = 1;
  bool count_only = false;

  auto* en = app.add_subcommand("enumerate", "list tableaux, patterns or matrices");
  en->add_option("--kind", kind)->required()->check(CLI::IsMember({"sst", "shifted", "primed-p", "primed-q", "gtp", "asm"}));
  en->add_option("--shape", shape)->required();
  en->add_option("--n", n)->required();
  en->add_flag("--count-only", count_only);
  en->add_flag("--json", common.as_json);

  auto* sf = app.add_subcommand("sf", "symmetric function or determinant");
  sf->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"schur", "factorial-schur", "p", "q", "factorial-p", "factorial-q", "lemma1-det", "lemma2-det"}));
  sf->add_option("--shape", shape)->required();
  sf->add_option("--n", n)->required();
  sf->add_flag("--json", common.as_json);

  auto* bj = app.add_subcommand("bijection", "map between tableaux, patterns, matrices, ice and paths");
  bj->add_option("--from", from)->required()->check(CLI::IsMember({"shifted", "gtp", "asm", "sst", "primed-p", "paths"}));
  bj->add_option("--to", to)->required()->check(CLI::IsMember({"gtp", "asm", "cpm", "sic", "shifted", "paths", "tableau"}));
  bj->add_option("--input", input)->required();
  bj->add_flag("--json", common.as_json);

  auto* zf = app.add_subcommand("zfunc", "six-vertex partition function");
  zf->add_option("--variant", variant)->required()->check(CLI::IsMember({"general", "bmn", "lascoux"}));
  zf->add_option("--mu", mu)->required();
  zf->add_option("--n", n)->required();
  zf->add_flag("--json", common.as_json);

  auto* vf = app.add_subcommand("verify", "check one identity");
  vf->add_option("--id", id)->required();
  auto* o_mu = vf->add_option("--mu", mu);
  auto* o_lambda = vf->add_option("--lambda", lambda);
  auto* o_n = vf->add_option("--n", n);
  auto* o_m = vf->add_option("--m", m);
  auto* o_p = vf->add_option("--p", p);
  auto* o_q = vf->add_option("--q", q);
  vf->add_flag("--json", common.as_json);

  auto* su = app.add_subcommand("suite", "run a list of identity checks");
  su->add_option("--config", config);
  su->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  su->add_flag("--json", common.as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*en) return cmd_enumerate(common, kind, shape, n, count_only);
    if (*sf) return cmd_sf(common, kind, shape, n);
    if (*bj) return cmd_bijection(common, from, to, input);
    if (*zf) return cmd_zfunc(common, variant, mu, n);
    const Cache cache = Cache::from_env();
    if (*vf) {
      IdentitySpec s;
      s.id = parse_identity(id);
      if (*o_mu) s.mu = Partition::parse(mu);
      if (*o_lambda) s.lambda = Partition::parse(lambda);
      if (*o_n) s.n = n;
      if (*o_m) s.m = m;
      if (*o_p) s.p = p;
      if (*o_q) s.q = q;
      const auto r = verify_identity(s, &cache);
      if (common.as_json) std::cout << report_json(r).dump(2) << '\n';
      print_report(common, r);
      return r.pass ? 0 : 1;
    }
    if (*su) {
      const auto specs = config.empty() ? default_suite() : load_suite_config(config);
      const auto reports = run_suite(specs, jobs, &cache);
      std::size_t failed = 0;
      json all = json::array();
      for (const auto& r : reports) {
        failed += !r.pass;
        all.push_back(report_json(r));
        if (!common.as_json) std::cout << (r.pass ? "PASS " : "FAIL ") << r.spec.to_string() << '\n';
      }
      if (common.as_json) std::cout << json{{"reports", all}, {"failed", failed}, {"total", reports.size()}}.dump(2) << '\n';
      else std::cout << reports.size() - failed << "/" << reports.size() << " passed\n";
      return failed ? 1 : 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
