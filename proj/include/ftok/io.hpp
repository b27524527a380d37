#pragma once

// JSON forms of tableaux, path families, patterns, matrices and
// polynomials. Polynomials travel as canonical text.

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "ftok/algebra.hpp"
#include "ftok/combin.hpp"
#include "ftok/error.hpp"
#include "ftok/paths.hpp"
#include "ftok/shapes.hpp"
#include "ftok/tableaux.hpp"

namespace ftok::io {

using json = nlohmann::json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
}

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("malformed ") + what + ": " + e.what());
  }
}

inline json to_json(const Partition& p) { return p.parts(); }

/// Accepts [6,4,3,1] or "6,4,3,1".
inline Partition partition_from_json(const json& j) {
  if (j.is_string()) return Partition::parse(j.get<std::string>());
  return guarded("partition", [&] { return Partition(j.get<std::vector<int>>()); });
}

inline json to_json(const Tableau& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const Entry& e : row) r.push_back(e.to_string());
    rows.push_back(r);
  }
  return {{"kind", kind_name(t.kind)}, {"shape", to_json(t.shape)}, {"n", t.n}, {"rows", rows}};
}

inline Tableau tableau_from_json(const json& j) {
  return guarded("tableau", [&] {
    std::vector<std::vector<Entry>> rows;
    for (const auto& r : j.at("rows")) {
      rows.emplace_back();
      for (const auto& e : r)
        rows.back().push_back(e.is_number() ? Entry{e.get<int>(), false} : Entry::parse(e.get<std::string>()));
    }
    return Tableau(parse_tableau_kind(j.at("kind").get<std::string>()), partition_from_json(j.at("shape")),
                   j.at("n").get<int>(), std::move(rows));
  });
}

inline json to_json(const PathFamily& f) {
  json paths = json::array();
  for (const auto& p : f.paths) paths.push_back({{"start", {p.start.first, p.start.second}}, {"steps", p.steps}});
  return {{"kind", path_kind_name(f.kind)}, {"n", f.n}, {"shape", to_json(f.shape)}, {"paths", paths}};
}

inline PathFamily paths_from_json(const json& j) {
  return guarded("path family", [&] {
    PathFamily f;
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "sst" && kind != "pst") throw Error(Errc::parse_error, "unknown path kind '" + kind + "'");
    f.kind = kind == "sst" ? PathKind::sst : PathKind::pst;
    f.n = j.at("n").get<int>();
    f.shape = partition_from_json(j.at("shape"));
    for (const auto& p : j.at("paths")) {
      const auto s = p.at("start");
      f.paths.push_back({{s.at(0).get<int>(), s.at(1).get<int>()}, p.at("steps").get<std::string>()});
    }
    return f;
  });
}

/// Rows bottom-up.
inline json to_json(const GTPattern& g) { return {{"rows", g.rows}}; }

inline GTPattern gtp_from_json(const json& j) {
  return guarded("pattern", [&] { return GTPattern{(j.is_object() ? j.at("rows") : j).get<std::vector<std::vector<int>>>()}; });
}

inline json to_json(const ASM& a) { return {{"asm", a.entries}}; }

inline ASM asm_from_json(const json& j) {
  return guarded("matrix", [&] { return ASM{(j.is_object() ? j.at("asm") : j).get<IntMatrix>()}; });
}

inline json to_json(const CPM& c) {
  json rows = json::array();
  for (const auto& row : c) {
    json r = json::array();
    for (Compass x : row) r.push_back(compass_name(x));
    rows.push_back(r);
  }
  return {{"cpm", rows}};
}

inline CPM cpm_from_json(const json& j) {
  return guarded("compass matrix", [&] {
    CPM c;
    for (const auto& row : (j.is_object() ? j.at("cpm") : j)) {
      c.emplace_back();
      for (const auto& x : row) c.back().push_back(parse_compass(x.get<std::string>()));
    }
    return c;
  });
}

inline json to_json(const Polynomial& p) { return canonical(p); }

}  // namespace ftok::io
