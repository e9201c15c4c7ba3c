#include "codec.hpp"

#include <fstream>
#include <sstream>

#include "qadm/error.hpp"

namespace qadm::cli {

namespace {

[[noreturn]] void bad_tree(const std::string& msg) { fail(ErrorKind::InvalidTree, "tree JSON: " + msg); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Json encode(const Rational& r) { return r.str(); }
Json encode(const MPoly& p) { return p.str(); }

Json encode(SingType t) { return Json{{"kind", t.kind == SingKind::A ? "A" : "D"}, {"index", t.index}}; }

Json encode(const WeightAssignment& w) {
  Json j = Json::object();
  for (const auto& [k, v] : w) j[k] = v;
  return j;
}

Json encode(const VersalFamily& f) {
  return Json{{"equation", f.equation.str()},
              {"curve_vars", {f.curve_vars[0], f.curve_vars[1]}},
              {"params", f.params},
              {"weights", encode(f.weights)}};
}

Json encode(const TypeBounds& b) {
  Json j{{"k", b.a_bound}, {"k_raw", b.a_bound_raw}, {"k_out_of_range", b.a_out_of_range}};
  if (b.d_bound) {
    j["l"] = *b.d_bound;
    j["l_raw"] = *b.d_bound_raw;
    j["l_out_of_range"] = b.d_out_of_range;
  }
  return j;
}

Json encode(const MarkedTree& t) {
  Json comps = Json::array();
  for (const auto& c : t.components) {
    Json pts = Json::array();
    for (const auto& p : c.points) pts.push_back({{"mult", p.mult}, {"tau", p.tau}, {"chi", p.chi}});
    comps.push_back({{"points", pts}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : t.edges) edges.push_back({a, b});
  return Json{{"components", comps}, {"edges", edges}};
}

Json encode(const StabilityReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json e{{"component", x.component}, {"value", x.value.str()}, {"message", x.str()}};
    if (x.point >= 0) e["point"] = x.point;
    e["condition"] = x.point >= 0 ? "point_weight" : "component_degree";
    v.push_back(e);
  }
  return Json{{"stable", r.stable}, {"violations", v}};
}

Json encode(const StratumLabel& l) {
  Json s = Json::array();
  for (auto t : l.singularities) s.push_back(t.str());
  return Json{{"in_delta_irr", l.in_delta_irr}, {"in_delta_red", l.in_delta_red}, {"in_delta_W", l.in_delta_w},
              {"codim", l.codim},               {"singularities", s}};
}

Json encode(const DivClass& d) {
  Json j = Json::object();
  for (const auto& name : basis_symbols()) {
    const MPoly c = d.coefficient(name);
    if (!c.is_zero()) j[name] = c.str();
  }
  return j;
}

Json encode(const HDivisor& h) {
  Json j = Json::object();
  for (const auto& name : hdivisor_symbols()) {
    auto it = h.coefficients().find(name);
    if (it != h.coefficients().end()) j[name] = it->second.str();
  }
  return j;
}

Json encode(const TailFamily& t) {
  return Json{{"equation", t.equation.str()}, {"weights", encode(t.weights)}, {"degree", t.degree}, {"params", t.params}};
}

Json encode(const AStableReduction& r) {
  Json base{{"substitution", Json::object()}, {"equation", r.base.equation.str()}, {"weights", encode(r.base.weights)}};
  for (const auto& [k, v] : r.base.substitution) base["substitution"][k] = v.str();
  Json charts = Json::array();
  for (const auto& c : r.charts) {
    Json j{{"chart", c.chart.j},
           {"equation", c.chart.equation.str()},
           {"exceptional", c.chart.exceptional},
           {"params", c.chart.params},
           {"strict_transform", c.fiber.strict_transform.str()},
           {"strict_transform_is_normal_form", c.fiber.matches_normal_form},
           {"tail", encode(c.fiber.tail)},
           {"attaching_points", c.fiber.attaching},
           {"leading_form_certificate", c.certificate.holds()}};
    if (c.label) j["tail_label"] = encode(*c.label);
    charts.push_back(j);
  }
  return Json{{"type", "A"},
              {"k", r.k},
              {"base_change", base},
              {"charts", charts},
              {"transitions_agree", r.transitions_agree},
              {"attaching_points", attaching_points(r.k)}};
}

Json encode(const DStableReduction& r) {
  Json charts = Json::array();
  for (const auto& c : r.charts) {
    Json sections = Json::array();
    for (const auto& s : c.sections) sections.push_back({{"x", s.x.str()}, {"y", s.y.str()}});
    Json refinement = Json::array();
    for (const auto& t : c.refinement) refinement.push_back(encode(t));
    Json j{{"param", c.param},
           {"equation", c.equation.str()},
           {"sections", sections},
           {"sections_on_curve", c.sections_on_curve},
           {"tail_weights", encode(c.tail_weights)},
           {"tail_quasi_homogeneous", c.tail_quasi_homogeneous},
           {"central_branch", c.central_branch.str()},
           {"central_tail", encode(c.central_tail)},
           {"central_label", encode(c.central_label)},
           {"refinement", refinement}};
    if (c.tail_degree) j["tail_degree"] = *c.tail_degree;
    charts.push_back(j);
  }
  Json exps = Json::object();
  for (const auto& [k, v] : r.base_change_exponents) exps[k] = v;
  return Json{{"type", "D"},
              {"n", r.n},
              {"k", r.k},
              {"l", r.l},
              {"with_section", r.with_section.str()},
              {"d_family", r.d_family.str()},
              {"transform_matches", r.transform_matches},
              {"base_change_exponents", exps},
              {"charts", charts},
              {"identity", r.identity}};
}

SingType decode_type(const std::string& kind, int index) {
  if (index < 1) fail(ErrorKind::UnsupportedIndex, "index must be at least 1");
  if (kind == "A") return SingType::A(index);
  if (kind == "D") return SingType::D(index);
  fail(ErrorKind::ParseError, "type must be A or D, got '" + kind + "'");
}

VersalFamily decode_versal(const Json& j) {
  try {
    VersalFamily f;
    f.equation = MPoly::parse(j.at("equation").get<std::string>());
    if (j.contains("curve_vars")) {
      auto v = j.at("curve_vars").get<std::vector<std::string>>();
      if (v.size() != 2) fail(ErrorKind::ParseError, "curve_vars needs two names");
      f.curve_vars = {v[0], v[1]};
    }
    if (j.contains("params")) f.params = j.at("params").get<std::vector<std::string>>();
    if (j.contains("weights"))
      for (const auto& [k, v] : j.at("weights").items()) f.weights[k] = v.get<std::int64_t>();
    return f;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("versal family JSON: ") + e.what());
  }
}

MarkedTree decode_tree(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("components")) bad_tree("expected an object with 'components'");
    MarkedTree t;
    for (const auto& c : j.at("components")) {
      Component comp;
      const Json& pts = c.is_array() ? c : c.at("points");
      for (const auto& p : pts) {
        MarkedPoint mp;
        mp.mult = p.value("mult", 0);
        mp.tau = p.value("tau", false);
        mp.chi = p.value("chi", false);
        comp.points.push_back(mp);
      }
      t.components.push_back(std::move(comp));
    }
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) bad_tree("edges must be pairs");
        t.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    validate_tree(t);
    return t;
  } catch (const nlohmann::json::exception& e) {
    bad_tree(e.what());
  }
}

DivClass decode_divclass(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "divisor class must be an object");
  DivClass d;
  for (const auto& [name, v] : j.items()) {
    const MPoly c = v.is_string() ? MPoly::parse(v.get<std::string>()) : MPoly(Rational::parse(v.dump()));
    d += DivClass::symbol(name, c);
  }
  return d;
}

HDivisor decode_hdivisor(const Json& j, bool pointed) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "divisor must be an object");
  HDivisor h(pointed);
  for (const auto& [name, v] : j.items())
    h.add(name, v.is_string() ? MPoly::parse(v.get<std::string>()) : MPoly(Rational::parse(v.dump())));
  return h;
}

std::map<std::string, std::string> parse_bindings(const std::string& text) {
  std::map<std::string, std::string> out;
  for (const auto& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError(0, "expected name=value in '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

std::map<std::string, Rational> parse_rational_bindings(const std::string& text) {
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : parse_bindings(text)) out.emplace(k, Rational::parse(v));
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(Rational::parse(item));
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& r : parse_rational_list(text)) {
    if (!r.is_integer()) throw ParseError(0, "expected integers, got " + r.str());
    out.push_back(r.to_int64());
  }
  return out;
}

}  // namespace qadm::cli
