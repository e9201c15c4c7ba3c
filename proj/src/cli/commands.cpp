#include "commands.hpp"

#include <cstdlib>
#include <memory>
#include <optional>

#include "qadm/error.hpp"

namespace qadm::cli {

namespace {

using Action = std::function<Json()>;

CLI::App* add(CLI::App& app, Invocation& inv, const std::string& name, const std::string& desc, Action action) {
  auto* s = app.add_subcommand(name, desc);
  s->add_flag("--json", "accepted for symmetry; output is always JSON");
  s->callback([&inv, name, action] {
    inv.subcommand = name;
    inv.action = action;
  });
  return s;
}

Rational rat(const std::string& s) { return Rational::parse(s); }

std::optional<Rational> opt_rat(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return rat(*s);
}

int size_limit() {
  const char* env = std::getenv("QUASIADM_MAX_N");
  if (!env) return 10;
  const Rational r = Rational::parse(env);
  if (!r.is_integer() || r.sign() < 0) throw ParseError(0, "QUASIADM_MAX_N must be a non-negative integer");
  return static_cast<int>(r.to_int64());
}

struct TreeInput {
  std::optional<std::string> tree;
  std::optional<std::string> file;

  void attach(CLI::App* s) {
    s->add_option("--tree", tree, "marked tree as inline JSON");
    s->add_option("--json-in", file, "file holding the marked tree JSON");
  }
  MarkedTree load() const {
    if (tree) return decode_tree(parse_json(*tree));
    if (file) return decode_tree(read_json_file(*file));
    fail(ErrorKind::ParseError, "a tree is required (--tree or --json-in)");
  }
};

WeightVector weights_for(int branch_degree, const std::string& alpha, const std::optional<std::string>& beta) {
  WeightVector w;
  w.branch_weight = rat(alpha);
  w.chi_weight = opt_rat(beta);
  w.branch_degree = branch_degree;
  return w;
}

void cmd_poly(CLI::App& app, Invocation& inv) {
  struct O {
    std::string op, f;
    std::optional<std::string> g, set, weights, coeffs;
    unsigned pow = 1;
  };
  auto o = std::make_shared<O>();
  auto* s = add(app, inv, "poly", "polynomial kernel operations", [o]() -> Json {
    if (o->op == "center-of-mass") {
      if (!o->coeffs) fail(ErrorKind::ParseError, "center-of-mass needs --coeffs a_d,...,a_0");
      return Json{{"result", center_of_mass_section(parse_rational_list(*o->coeffs)).str()}};
    }
    const MPoly f = MPoly::parse(o->f);
    auto need_g = [&] {
      if (!o->g) fail(ErrorKind::ParseError, "operation " + o->op + " needs --g");
      return MPoly::parse(*o->g);
    };
    if (o->op == "normalize") return Json{{"result", f.str()}};
    if (o->op == "add") return Json{{"result", (f + need_g()).str()}};
    if (o->op == "mul") return Json{{"result", (f * need_g()).str()}};
    if (o->op == "neg") return Json{{"result", (-f).str()}};
    if (o->op == "pow") return Json{{"result", f.pow(o->pow).str()}};
    if (o->op == "exact-div") return Json{{"result", exact_div(f, need_g()).str()}};
    if (o->op == "substitute") {
      std::map<std::string, MPoly> b;
      for (const auto& [k, v] : parse_bindings(o->set.value_or(""))) b.emplace(k, MPoly::parse(v));
      return Json{{"result", f.substitute(b).str()}};
    }
    if (o->op == "weighted-degree") {
      WeightAssignment w;
      for (const auto& [k, v] : parse_bindings(o->weights.value_or(""))) {
        const Rational r = Rational::parse(v);
        if (!r.is_integer()) throw ParseError(0, "weights must be integers");
        w[k] = r.to_int64();
      }
      auto d = weighted_degree(f, w);
      return Json{{"degree", d ? Json(*d) : Json(nullptr)}};
    }
    if (o->op == "squarefree") {
      const auto sq = squarefree_decomposition(f);
      Json factors = Json::array();
      for (const auto& x : sq.factors) factors.push_back({{"factor", x.factor.str()}, {"multiplicity", x.multiplicity}});
      return Json{{"variable", sq.variable}, {"leading_coefficient", sq.leading_coefficient.str()}, {"factors", factors}};
    }
    fail(ErrorKind::ParseError, "unknown poly operation " + o->op);
  });
  s->add_option("--op", o->op, "normalize|add|mul|neg|pow|exact-div|substitute|weighted-degree|squarefree|center-of-mass")
      ->required();
  s->add_option("--f", o->f, "first polynomial");
  s->add_option("--g", o->g, "second polynomial");
  s->add_option("--pow", o->pow, "exponent for pow");
  s->add_option("--set", o->set, "bindings name=poly,... for substitute");
  s->add_option("--weights", o->weights, "weights name=w,... for weighted-degree");
  s->add_option("--coeffs", o->coeffs, "coefficients a_d,...,a_0 for center-of-mass");
}

void cmd_classify(CLI::App& app, Invocation& inv) {
  struct O {
    std::string f;
    std::optional<std::string> marked;
  };
  auto o = std::make_shared<O>();
  auto* s = add(app, inv, "classify", "singularity profile of a branch polynomial", [o]() -> Json {
    Json out = Json::array();
    for (const auto& e : classify_branch_profile(MPoly::parse(o->f), opt_rat(o->marked)))
      out.push_back({{"type", encode(e.type)}, {"name", e.type.str()}, {"multiplicity", e.multiplicity}, {"witness", e.witness.str()}});
    return Json{{"profile", out}};
  });
  s->add_option("--f", o->f, "univariate branch polynomial")->required();
  s->add_option("--marked", o->marked, "x-coordinate of the marked point");
}

struct TypeOpts {
  std::string type;
  int index = 0;
  void attach(CLI::App* s, bool required = true) {
    auto* t = s->add_option("--type", type, "A or D");
    auto* i = s->add_option("--index", index, "index of the singularity");
    if (required) {
      t->required();
      i->required();
    }
  }
};

void cmd_versal(CLI::App& app, Invocation& inv) {
  struct O {
    TypeOpts t;
    bool with_section = false;
  };
  auto o = std::make_shared<O>();
  auto* s = add(app, inv, "versal", "versal family with its G_m weights", [o]() -> Json {
    const VersalFamily fam = o->with_section ? versal_with_section(o->t.index) : versal(decode_type(o->t.type, o->t.index));
    Json j = encode(fam);
    auto d = weighted_degree(fam.equation, fam.weights);
    j["weighted_degree"] = d ? Json(*d) : Json(nullptr);
    return j;
  });
  o->t.attach(s);
  s->add_flag("--with-section", o->with_section, "A_(index-1) family with the section x = y = 0");
}

void cmd_tjurina(CLI::App& app, Invocation& inv) {
  auto o = std::make_shared<TypeOpts>();
  auto* s = add(app, inv, "tjurina", "monomial basis of the Tjurina algebra", [o]() -> Json {
    Json basis = Json::array();
    for (const auto& m : tjurina_basis(decode_type(o->type, o->index))) basis.push_back(m.str());
    return Json{{"basis", basis}, {"dimension", basis.size()}};
  });
  o->attach(s);
}

void cmd_lct(CLI::App& app, Invocation& inv) {
  struct O {
    TypeOpts t;
    std::optional<int> window;
  };
  auto o = std::make_shared<O>();
  auto* s = add(app, inv, "lct", "log canonical threshold", [o]() -> Json {
    if (o->window) {
      const Rational v = lct_window_check(*o->window), l = lct(SingType::A(*o->window));
      return Json{{"value", v.str()}, {"lct", l.str()}, {"equal", v == l}};
    }
    if (o->t.type.empty()) fail(ErrorKind::ParseError, "--type and --index are required");
    return Json{{"value", lct(decode_type(o->t.type, o->t.index)).str()}};
  });
  o->t.attach(s, false);
  s->add_option("--window-check", o->window, "compare 1/2 + 1/(k+1) with lct(A_k)");
}

void cmd_thresholds(CLI::App& app, Invocation& inv) {
  struct O {
    std::string alpha;
    std::optional<std::string> beta;
    int n = 0;
  };
  auto o = std::make_shared<O>();
  auto* s = add(app, inv, "thresholds", "window indices of weights", [o, &inv]() -> Json {
    const TypeBounds b = thresholds_to_types(rat(o->alpha), opt_rat(o->beta), o->n);
    if (b.a_out_of_range) inv.diagnostics.push_back("k clamped from " + std::to_string(b.a_bound_raw));
    if (b.d_out_of_range) inv.diagnostics.push_back("l clamped from " + std::to_string(*b.d_bound_raw));
    return encode(b);
  });
  s->add_option("--alpha", o->alpha, "branch weight")->required();
  s->add_option("--beta", o->beta, "chi weight");
  s->add_option("--n", o->n, "index n")->required();
}

void cmd_a2d(CLI::App& app, Invocation& inv) {
  struct O {
    std::optional<int> n;
    std::optional<std::string> file;
  };
  auto o = std::make_shared<O>();
  auto* s = add(app, inv, "a2d", "A_(n-1) family with section to the D_n family", [o]() -> Json {
    VersalFamily in;
    if (o->file)
      in = decode_versal(read_json_file(*o->file));
    else if (o->n)
      in = versal_with_section(*o->n);
    else
      fail(ErrorKind::ParseError, "a2d needs --n or --json-in");
    const VersalFamily out = a_to_d_transform(in);
    std::map<std::string, MPoly> zero;
    for (const auto& p : out.params) zero[p] = MPoly(0);
    Json j = encode(out);
    j["input"] = encode(in);
    j["central_fiber"] = out.equation.substitute(zero).str();
    return j;
  });
  s->add_option("--n", o->n, "build the with-section family of A_(n-1)");
  s->add_option("--json-in", o->file, "versal family JSON file");
}

void cmd_normal_form(CLI::App& app, Invocation& inv) {
  auto f = std::make_shared<std::string>();
  auto* s = add(app, inv, "normal-form", "translate away the subleading coefficient", [f]() -> Json {
    const NormalForm nf = normal_form(MPoly::parse(*f));
    Json c = Json::array();
    for (const auto& r : nf.coeffs) c.push_back(r.str());
    return Json{{"coeffs", c}, {"all_zero", nf.all_zero}};
  });
  s->add_option("--f", *f, "monic univariate polynomial")->required();
}

void cmd_wps(CLI::App& app, Invocation& inv) {
  struct O {
    std::optional<int> n;
    bool pointed = false;
    std::optional<std::string> p, q, weights;
  };
  auto o = std::make_shared<O>();
  auto* s = add(app, inv, "wps", "weighted projective space weights and point equality", [o]() -> Json {
    if (o->p || o->q || o->weights) {
      if (!o->p || !o->q || !o->weights) fail(ErrorKind::ParseError, "--p, --q and --weights go together");
      return Json{{"equal", wps_equal(parse_rational_list(*o->p), parse_rational_list(*o->q), parse_int_list(*o->weights))}};
    }
    if (!o->n) fail(ErrorKind::ParseError, "wps needs --n or --p/--q/--weights");
    return Json{{"weights", wps_weights(*o->n, o->pointed)}};
  });
  s->add_option("--n", o->n, "index n");
  s->add_flag("--pointed", o->pointed, "pointed moduli");
  s->add_option("--p", o->p, "first point, comma separated");
  s->add_option("--q", o->q, "second point, comma separated");
  s->add_option("--weights", o->weights, "weights, comma separated");
}

void cmd_stability(CLI::App& app, Invocation& inv) {
  struct O {
    TreeInput in;
    std::string alpha;
    std::optional<std::string> beta;
    bool label = false;
  };
  auto o = std::make_shared<O>();
  auto* s = add(app, inv, "stability", "stability report and stratum label", [o]() -> Json {
    const MarkedTree t = o->in.load();
    const WeightVector w = weights_for(t.branch_degree(), o->alpha, o->beta);
    Json j = encode(is_stable(t, w));
    if (o->label) j["label"] = encode(stratum_label(t, w));
    return j;
  });
  o->in.attach(s);
  s->add_option("--alpha", o->alpha, "branch weight")->required();
  s->add_option("--beta", o->beta, "chi weight");
  s->add_flag("--label", o->label, "also compute the stratum label (fails if unstable)");
}

void cmd_parity(CLI::App& app, Invocation& inv) {
  auto o = std::make_shared<TreeInput>();
  auto* s = add(app, inv, "parity", "odd points and parity certificate", [o]() -> Json {
    const MarkedTree t = o->load();
    const OddPoints odd = odd_points(t);
    return Json{{"odd_edges", odd.odd_edges}, {"tau_odd", odd.tau_odd}, {"certificate", parity_certificate(t)}};
  });
  o->attach(s);
}

void cmd_genus(CLI::App& app, Invocation& inv) {
  auto o = std::make_shared<TreeInput>();
  auto* s = add(app, inv, "genus", "arithmetic genus of the cover", [o]() -> Json {
    return Json{{"genus", arithmetic_genus(o->load())}};
  });
  o->attach(s);
}

void cmd_strata(CLI::App& app, Invocation& inv) {
  struct O {
    int n = 0;
    std::optional<std::string> alpha, beta;
    std::optional<int> k, l, max_codim;
    unsigned threads = 1;
    bool dot = false;
  };
  auto o = std::make_shared<O>();
  auto* s = add(app, inv, "strata", "enumerate stable marked trees", [o]() -> Json {
    const bool pointed = o->beta.has_value() || o->l.has_value();
    const int degree = pointed ? o->n : o->n + 1;
    WeightVector w;
    if (o->alpha) {
      w = weights_for(degree, *o->alpha, o->beta);
    } else if (o->k) {
      w = WeightVector::for_window(*o->k, o->l, degree);
    } else {
      fail(ErrorKind::ParseError, "strata needs --alpha or --k");
    }
    EnumerateOptions opts;
    opts.max_codim = o->max_codim;
    opts.size_limit = size_limit();
    opts.threads = o->threads;
    const auto trees = enumerate_strata(o->n, w, opts);
    Json list = Json::array();
    for (const auto& t : trees) {
      Json e{{"canonical", canonical_form(t)}, {"tree", encode(t)}, {"label", encode(label_of(t))}};
      if (o->dot) e["dot"] = to_dot(t);
      list.push_back(e);
    }
    return Json{{"n", o->n},
                {"alpha", w.branch_weight.str()},
                {"beta", w.chi_weight ? Json(w.chi_weight->str()) : Json(nullptr)},
                {"count", trees.size()},
                {"strata", list}};
  });
  s->add_option("--n", o->n, "index n")->required();
  s->add_option("--alpha", o->alpha, "branch weight");
  s->add_option("--beta", o->beta, "chi weight");
  s->add_option("--k", o->k, "A-window (alternative to --alpha)");
  s->add_option("--l", o->l, "D-window (alternative to --beta)");
  s->add_option("--max-codim", o->max_codim, "largest codimension to report");
  s->add_option("--threads", o->threads, "worker threads");
  s->add_flag("--dot", o->dot, "include DOT renderings");
}

void cmd_contract(CLI::App& app, Invocation& inv) {
  struct O {
    TreeInput in;
    std::string from_alpha, to_alpha;
    std::optional<std::string> from_beta, to_beta;
  };
  auto o = std::make_shared<O>();
  auto* s = add(app, inv, "contract", "apply a reduction morphism to a tree", [o]() -> Json {
    const MarkedTree t = o->in.load();
    const MarkedTree r = contract(t, weights_for(t.branch_degree(), o->from_alpha, o->from_beta),
                                  weights_for(t.branch_degree(), o->to_alpha, o->to_beta));
    return Json{{"tree", encode(r)}, {"canonical", canonical_form(r)}};
  });
  o->in.attach(s);
  s->add_option("--from-alpha", o->from_alpha, "source branch weight")->required();
  s->add_option("--from-beta", o->from_beta, "source chi weight");
  s->add_option("--to-alpha", o->to_alpha, "target branch weight")->required();
  s->add_option("--to-beta", o->to_beta, "target chi weight");
}

Json identity_payload(Invocation& inv) {
  Json list = Json::array();
  bool all = true;
  for (const auto& c : identity_suite()) {
    list.push_back({{"name", c.name}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}, {"holds", c.holds}});
    all = all && c.holds;
  }
  if (!all) inv.exit_code = 1;
  return Json{{"identities", list}, {"all_hold", all}};
}

void cmd_divclass(CLI::App& app, Invocation& inv) {
  struct O {
    std::optional<std::string> op, cls, divisor, alpha, beta;
    bool pointed = false, verify = false;
  };
  auto o = std::make_shared<O>();
  auto* s = add(app, inv, "divclass", "divisor classes on the moduli of weighted pointed curves", [o, &inv]() -> Json {
    if (o->verify) return identity_payload(inv);
    if (!o->op) fail(ErrorKind::ParseError, "divclass needs --op or --verify-identities");
    const std::string& op = *o->op;
    if (op == "canonical") return Json{{"class", encode(canonical_class(o->pointed))}, {"text", canonical_class(o->pointed).str()}};
    if (op == "k-m0a") return Json{{"class", encode(k_M0A(o->pointed))}, {"text", k_M0A(o->pointed).str()}};
    auto hdiv = [&] {
      if (o->divisor) return decode_hdivisor(parse_json(*o->divisor), o->pointed);
      inv.diagnostics.push_back("no --divisor given; using the log canonical divisor");
      return log_canonical_divisor(o->pointed);
    };
    if (op == "transport") {
      const HDivisor h = hdiv();
      const DivClass d = transport(h);
      return Json{{"divisor", encode(h)}, {"class", encode(d)}, {"text", d.str()}};
    }
    if (op == "ample-check") {
      if (!o->alpha) fail(ErrorKind::ParseError, "ample-check needs --alpha");
      const DivClass c = o->cls ? decode_divclass(parse_json(*o->cls)) : transport(hdiv());
      return Json{{"class", encode(c)}, {"ample_form", ample_form_check(c, rat(*o->alpha), opt_rat(o->beta))}};
    }
    fail(ErrorKind::ParseError, "unknown divclass operation " + op);
  });
  s->add_option("--op", o->op, "canonical|k-m0a|transport|ample-check");
  s->add_flag("--pointed", o->pointed, "pointed moduli");
  s->add_option("--class", o->cls, "divisor class JSON {symbol: coefficient}");
  s->add_option("--divisor", o->divisor, "cover-stack divisor JSON {K_H|delta_irr|delta_red|delta_W: coefficient}");
  s->add_option("--alpha", o->alpha, "branch weight");
  s->add_option("--beta", o->beta, "chi weight");
  s->add_flag("--verify-identities", o->verify, "run the identity suite");
}

void cmd_verify_identities(CLI::App& app, Invocation& inv) {
  add(app, inv, "verify-identities", "symbolic divisor identity suite", [&inv]() -> Json { return identity_payload(inv); });
}

void cmd_discrepancy(CLI::App& app, Invocation& inv) {
  struct O {
    std::string direction, alpha;
    std::optional<std::string> beta;
    int k = 1, l = 1;
  };
  auto o = std::make_shared<O>();
  auto* s = add(app, inv, "discrepancy", "discrepancy of the exceptional divisor", [o]() -> Json {
    Direction d;
    if (o->direction == "grow_k")
      d = Direction::GrowK;
    else if (o->direction == "grow_l")
      d = Direction::GrowL;
    else
      fail(ErrorKind::ParseError, "direction must be grow_k or grow_l");
    const Discrepancy r = discrepancy(d, o->k, o->l, rat(o->alpha), opt_rat(o->beta));
    return Json{{"value", r.value.str()}, {"sign", r.sign}, {"nonnegative", r.sign >= 0}};
  });
  s->add_option("--direction", o->direction, "grow_k|grow_l")->required();
  s->add_option("--k", o->k, "A-window");
  s->add_option("--l", o->l, "D-window");
  s->add_option("--alpha", o->alpha, "branch weight")->required();
  s->add_option("--beta", o->beta, "chi weight");
}

void cmd_log_mmp(CLI::App& app, Invocation& inv) {
  struct O {
    int n = 0;
    std::string alpha;
    std::optional<std::string> beta;
  };
  auto o = std::make_shared<O>();
  auto* s = add(app, inv, "log-mmp", "log canonical model for given coefficients", [o, &inv]() -> Json {
    const LogMmpModel m = log_mmp_model(o->n, rat(o->alpha), opt_rat(o->beta));
    if (m.k_out_of_range) inv.diagnostics.push_back("k clamped to n-1");
    if (m.l_out_of_range) inv.diagnostics.push_back("l clamped");
    Json j{{"k", m.k}};
    if (m.l) j["l"] = *m.l;
    j["k_out_of_range"] = m.k_out_of_range;
    j["l_out_of_range"] = m.l_out_of_range;
    j["on_half_line"] = m.on_half_line;
    j["description"] = m.description;
    return j;
  });
  s->add_option("--n", o->n, "index n")->required();
  s->add_option("--alpha", o->alpha, "delta_irr coefficient (unpointed) or branch weight (pointed)")->required();
  s->add_option("--beta", o->beta, "chi weight");
}

void cmd_stable_reduce(CLI::App& app, Invocation& inv) {
  struct O {
    std::string type;
    std::optional<int> n, chart;
    int k = 0;
    std::optional<int> l;
    std::optional<std::string> spec;
  };
  auto o = std::make_shared<O>();
  auto* s = add(app, inv, "stable-reduce", "explicit stable reduction charts", [o, &inv]() -> Json {
    if (o->type == "A") {
      std::optional<std::map<std::string, Rational>> spec;
      if (o->spec) spec = parse_rational_bindings(*o->spec);
      return encode(a_stable_reduction(o->k, o->chart, spec));
    }
    if (o->type == "D") {
      if (!o->n || !o->l) fail(ErrorKind::ParseError, "type D needs --n, --k and --l");
      const DStableReduction r = d_stable_reduction(*o->n, o->k, *o->l);
      inv.diagnostics.insert(inv.diagnostics.end(), r.notes.begin(), r.notes.end());
      return encode(r);
    }
    fail(ErrorKind::ParseError, "type must be A or D");
  });
  s->add_option("--type", o->type, "A or D")->required();
  s->add_option("--k", o->k, "A index (type A) or A-window (type D)")->required();
  s->add_option("--n", o->n, "D index (type D)");
  s->add_option("--l", o->l, "D-window (type D)");
  s->add_option("--chart", o->chart, "only this chart (type A)");
  s->add_option("--spec", o->spec, "c-parameter specialization name=value,... (type A)");
}

}  // namespace

void add_commands(CLI::App& app, Invocation& inv) {
  cmd_poly(app, inv);
  cmd_classify(app, inv);
  cmd_versal(app, inv);
  cmd_tjurina(app, inv);
  cmd_lct(app, inv);
  cmd_thresholds(app, inv);
  cmd_a2d(app, inv);
  cmd_normal_form(app, inv);
  cmd_wps(app, inv);
  cmd_stability(app, inv);
  cmd_parity(app, inv);
  cmd_genus(app, inv);
  cmd_strata(app, inv);
  cmd_contract(app, inv);
  cmd_divclass(app, inv);
  cmd_verify_identities(app, inv);
  cmd_discrepancy(app, inv);
  cmd_log_mmp(app, inv);
  cmd_stable_reduce(app, inv);
}

}  // namespace qadm::cli
