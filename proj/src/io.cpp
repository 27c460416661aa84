#include "bicolor/io.hpp"

#include <fstream>
#include <sstream>

#include "bicolor/errors.hpp"

namespace bicolor {

namespace {

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(where + ": missing field '" + name + "'");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

Spin spin_from(const Json& j, const std::string& where) {
  try {
    return Spin::parse(as_string(j, where));
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Perm perm_from(const Json& j, int r, const std::string& where) {
  if (j.is_array()) {
    std::vector<int> w;
    for (std::size_t k = 0; k < j.size(); ++k) w.push_back(as_int(j[k], where + "[" + std::to_string(k) + "]"));
    try {
      Perm p(w);
      if (p.degree() != r) throw ParseError("degree " + std::to_string(p.degree()) + ", expected " + std::to_string(r));
      return p;
    } catch (const Error& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  try {
    return parse_perm(as_string(j, where), r);
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Json polys(const LaurentPoly& p) { return p.to_string(); }

}  // namespace

SystemSpec system_from_json(const Json& j) {
  const std::string w = "system";
  SystemSpec s;
  s.r = as_int(field(j, "r", w), w + ".r");
  s.N = as_int(field(j, "N", w), w + ".N");
  const Json& lam = field(j, "lambda", w);
  if (!lam.is_array()) throw ParseError(w + ".lambda: expected an array");
  s.lambda.clear();
  for (std::size_t k = 0; k < lam.size(); ++k) s.lambda.push_back(as_int(lam[k], w + ".lambda[" + std::to_string(k) + "]"));
  if (s.r < 1) throw ParseError(w + ".r: must be positive");
  s.w1 = perm_from(field(j, "w1", w), s.r, w + ".w1");
  s.w2 = perm_from(field(j, "w2", w), s.r, w + ".w2");
  s.w3 = perm_from(field(j, "w3", w), s.r, w + ".w3");
  s.w4 = perm_from(field(j, "w4", w), s.r, w + ".w4");
  s.validate();
  return s;
}

Json to_json(const SystemSpec& spec) {
  return Json{{"r", spec.r},
              {"N", spec.N},
              {"lambda", spec.lambda},
              {"w1", spec.w1.to_cycle_string()},
              {"w2", spec.w2.to_cycle_string()},
              {"w3", spec.w3.to_cycle_string()},
              {"w4", spec.w4.to_cycle_string()}};
}

Json to_json(const EdgeContent& v) {
  Json out = Json::object();
  for (auto& [key, n] : v.entries()) out[key] = n;
  return out;
}

EdgeContent content_from_json(const Json& j, int s, int r) {
  if (!j.is_object()) throw ParseError("content: expected an object of \"cI.dJ\": count");
  EdgeContent v(s, r);
  for (auto& [key, n] : j.items()) {
    const std::string where = "content." + key;
    const auto dot = key.find('.');
    if (dot == std::string::npos) throw ParseError(where + ": key must look like cI.dJ");
    const Spin c = Spin::parse(key.substr(0, dot));
    const Spin d = Spin::parse(key.substr(dot + 1));
    if (!c.is_color() || !d.is_dolor()) throw ParseError(where + ": key must look like cI.dJ");
    if (c.index > s || d.index > r) throw ParseError(where + ": index out of range");
    const int count = as_int(n, where);
    if (count < 0) throw ParseError(where + ": negative count");
    v.add({c.index, d.index}, count);
  }
  return v;
}

Json to_json(const State& st) {
  Json vc = Json::array();
  for (auto& layer : st.vcontent) {
    Json row = Json::array();
    for (auto& v : layer) row.push_back(to_json(v));
    vc.push_back(std::move(row));
  }
  Json hs = Json::array();
  for (auto& spins : st.hspin) {
    Json row = Json::array();
    for (Spin x : spins) row.push_back(x.to_string());
    hs.push_back(std::move(row));
  }
  return Json{{"vcontent", std::move(vc)}, {"hspin", std::move(hs)}};
}

State state_from_json(const Json& j, int s, int r) {
  State st;
  const Json& vc = field(j, "vcontent", "state");
  const Json& hs = field(j, "hspin", "state");
  if (!vc.is_array() || !hs.is_array()) throw ParseError("state: vcontent and hspin must be arrays");
  for (auto& layer : vc) {
    if (!layer.is_array()) throw ParseError("state.vcontent: expected arrays of contents");
    auto& row = st.vcontent.emplace_back();
    for (auto& v : layer) row.push_back(content_from_json(v, s, r));
  }
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (!hs[i].is_array()) throw ParseError("state.hspin: expected arrays of spins");
    auto& row = st.hspin.emplace_back();
    for (std::size_t k = 0; k < hs[i].size(); ++k) {
      row.push_back(spin_from(hs[i][k], "state.hspin[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    }
  }
  return st;
}

Json to_json(const TwoColoredGT& g) {
  Json rows = Json::array();
  for (auto& row : g.rows) {
    Json r = Json::array();
    for (auto& e : row) r.push_back(Json::array({e.value, Spin::color(e.color).to_string(), Spin::dolor(e.dolor).to_string()}));
    rows.push_back(std::move(r));
  }
  return Json{{"rows", std::move(rows)}};
}

TwoColoredGT pattern_from_json(const Json& j) {
  const Json& rows = j.is_array() ? j : field(j, "rows", "pattern");
  if (!rows.is_array()) throw ParseError("pattern.rows: expected an array");
  TwoColoredGT g;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string wr = "pattern.rows[" + std::to_string(i) + "]";
    if (!rows[i].is_array()) throw ParseError(wr + ": expected an array");
    auto& row = g.rows.emplace_back();
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      const std::string we = wr + "[" + std::to_string(k) + "]";
      const Json& e = rows[i][k];
      if (!e.is_array() || e.size() != 3) throw ParseError(we + ": expected [value, \"cI\", \"dJ\"]");
      const Spin c = spin_from(e[1], we + "[1]");
      const Spin d = spin_from(e[2], we + "[2]");
      if (!c.is_color() || !d.is_dolor()) throw ParseError(we + ": expected a color then a dolor");
      row.push_back({as_int(e[0], we + "[0]"), c.index, d.index});
    }
  }
  return g;
}

Json to_json(const ClassificationResult& c) {
  return Json{{"wc", c.wc.to_cycle_string()},
              {"wd", c.wd.to_cycle_string()},
              {"category", to_string(c.category)},
              {"relation", to_string(c.relation)}};
}

Json to_json(const YbeReport& rep) {
  Json failures = Json::array();
  for (auto& f : rep.failures) failures.push_back(Json{{"boundary", f.boundary}, {"lhs", polys(f.lhs)}, {"rhs", polys(f.rhs)}});
  return Json{{"mode", rep.mode},       {"colors", rep.colors},
              {"dolors", rep.dolors},   {"nmax", rep.nmax},
              {"checked", rep.total_boundaries}, {"failures", std::move(failures)},
              {"passed", rep.passed()}};
}

Json to_json(const TrainReport& rep) {
  return Json{{"left", polys(rep.left)}, {"right", polys(rep.right)}, {"passed", rep.passed}};
}

Json to_json(const MergeReport& rep) {
  Json cases = Json::object();
  for (auto& [k, v] : rep.cases) cases[k] = v;
  return Json{{"scope", to_string(rep.scope)},
              {"checked", rep.checked},
              {"cases", std::move(cases)},
              {"failures", rep.failures},
              {"passed", rep.passed()}};
}

Json to_json(const SolveStats& st) {
  return Json{{"divisions", st.divisions},
              {"zero_cases", st.zero_cases},
              {"monostatic_cases", st.monostatic_cases},
              {"memo_hits", st.memo_hits},
              {"max_depth", st.max_depth}};
}

Json to_json(const SweepReport& rep) {
  Json counts = Json::object();
  for (auto& [k, v] : rep.counts) counts[k] = v;
  return Json{{"kind", rep.kind},
              {"checked", rep.checked},
              {"counts", std::move(counts)},
              {"failures", rep.failures},
              {"examples", rep.examples},
              {"passed", rep.passed()}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace bicolor
