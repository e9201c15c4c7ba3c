#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "qadm/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string text;
  json body;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  const int code = qadm::cli::run(args, out);
  Result r{code, out.str(), json()};
  if (!r.text.empty() && r.text[0] == '{') r.body = json::parse(r.text);
  return r;
}

const std::string kTree =
    R"({"components":[{"points":[{"tau":true},{"mult":1},{"mult":1}]},{"points":[{"mult":1},{"mult":1},{"mult":1}]}],"edges":[[0,1]]})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("every operation is routed exactly once") {
    std::map<std::string, int> seen;
    std::set<std::string> subs;
    for (const auto& r : qadm::cli::routing_table()) {
      subs.insert(r.subcommand);
      for (const auto& op : r.operations) ++seen[op];
    }
    const std::vector<std::string> ops{
        "poly_arith", "substitute", "squarefree_decomposition", "weighted_degree", "center_of_mass_section",
        "classify_branch_profile", "versal", "tjurina_basis", "lct", "lct_window_check", "thresholds_to_types",
        "a_to_d_transform", "normal_form", "wps_weights", "wps_equal", "is_stable", "stratum_label", "odd_points",
        "parity_certificate", "arithmetic_genus", "enumerate_strata", "contract", "canonical_class", "k_M0A",
        "transport", "ample_form_check", "identity_suite", "discrepancy", "log_mmp_model", "base_change", "chart",
        "tail_family", "attaching_points", "verify_tail_membership", "d_stable_reduction"};
    for (const auto& op : ops) {
      CAPTURE(op);
      CHECK(seen[op] == 1);
    }
    CHECK(seen.size() == ops.size());
    const auto registered = qadm::cli::registered_subcommands();
    CHECK(std::set<std::string>(registered.begin(), registered.end()) == subs);
    CHECK(registered.size() == subs.size());
    for (const char* required : {"classify", "versal", "tjurina", "lct", "thresholds", "a2d", "normal-form", "wps",
                                 "stability", "parity", "genus", "strata", "contract", "divclass", "verify-identities",
                                 "discrepancy", "log-mmp", "stable-reduce"})
      CHECK(subs.count(required) == 1);
  }

  TEST_CASE("envelope and values") {
    const Result r = call({"lct", "--type", "A", "--index", "2"});
    CHECK(r.code == 0);
    CHECK(r.body["subcommand"] == "lct");
    CHECK(r.body["version"] == qadm::cli::kVersion);
    CHECK(r.body["payload"]["value"] == "5/6");
    CHECK(r.body["diagnostics"].is_array());
    CHECK(r.text.find("\"value\":\"5/6\"") != std::string::npos);

    const Result t = call({"thresholds", "--alpha", "1/3", "--n", "6", "--json"});
    CHECK(t.code == 0);
    CHECK(t.body["payload"]["k"] == 2);
  }

  TEST_CASE("exit codes") {
    const Result bad = call({"classify", "--f", "x^^2"});
    CHECK(bad.code == 2);
    CHECK(bad.body["error"]["type"] == "ParseError");
    CHECK(bad.body["error"]["position"] == 2);

    const Result domain = call({"lct", "--type", "D", "--index", "1"});
    CHECK(domain.code == 1);
    CHECK(domain.body["error"]["type"] == "UnsupportedIndex");

    const Result chart = call({"stable-reduce", "--type", "A", "--k", "3", "--chart", "5"});
    CHECK(chart.code == 1);
    CHECK(chart.body["error"]["type"] == "ChartOutOfRange");

    const Result usage = call({"no-such-command"});
    CHECK(usage.code == 2);
    CHECK(usage.body["error"]["type"] == "UsageError");

    const Result tree = call({"genus", "--tree", R"({"components":[{"points":[{"mult":1}]}]})"});
    CHECK(tree.code == 2);
    CHECK(tree.body["error"]["type"] == "InvalidTree");

    CHECK(call({"--help"}).code == 0);
    CHECK(call({"--version"}).code == 0);
  }

  TEST_CASE("tree subcommands") {
    const Result st = call({"stability", "--tree", kTree, "--alpha", "1/2", "--label"});
    CHECK(st.code == 0);
    CHECK(st.body["payload"]["stable"] == true);
    const Result g = call({"genus", "--tree", kTree});
    CHECK(g.body["payload"]["genus"] == 2);
    const Result p = call({"parity", "--tree", kTree});
    CHECK(p.code == 0);
    const Result c = call({"contract", "--tree", kTree, "--from-alpha", "1/2", "--to-alpha", "1/3"});
    CHECK(c.code == 0);
    CHECK(c.body["payload"]["tree"]["components"].size() == 1);

    const std::string path = "cli_tree_input.json";
    std::ofstream(path) << kTree;
    const Result viafile = call({"genus", "--json-in", path});
    CHECK(viafile.text == g.text);
  }

  TEST_CASE("output is deterministic across runs and thread counts") {
    const Result a = call({"strata", "--n", "6", "--k", "2", "--l", "2", "--threads", "1"});
    const Result b = call({"strata", "--n", "6", "--k", "2", "--l", "2", "--threads", "3"});
    const Result c = call({"strata", "--n", "6", "--k", "2", "--l", "2", "--threads", "1"});
    CHECK(a.code == 0);
    CHECK(a.text == b.text);
    CHECK(a.text == c.text);
    const Result d = call({"strata", "--n", "4", "--alpha", "1/2", "--dot"});
    CHECK(d.text.find("graph") != std::string::npos);
  }

  TEST_CASE("identity suite and divisor classes") {
    const Result v = call({"verify-identities"});
    CHECK(v.code == 0);
    const Result alias = call({"divclass", "--verify-identities"});
    CHECK(alias.code == 0);
    CHECK(alias.body["payload"] == v.body["payload"]);
    const Result k = call({"divclass", "--op", "canonical"});
    CHECK(k.body["payload"]["class"]["Delta_odd"] == "-3/2");
    const Result tr = call({"divclass", "--op", "transport", "--divisor", R"({"delta_irr":"1"})"});
    CHECK(tr.body["payload"]["class"]["Delta_s"] == "2");
  }

  TEST_CASE("stable reduction subcommand") {
    const Result a = call({"stable-reduce", "--type", "A", "--k", "4", "--chart", "1", "--spec", "c0=1,c2=2,c3=-1/2"});
    CHECK(a.code == 0);
    CHECK(a.body["payload"]["charts"].size() == 1);
    const Result d = call({"stable-reduce", "--type", "D", "--n", "4", "--k", "3", "--l", "3"});
    CHECK(d.code == 0);
    CHECK(d.body["payload"]["identity"] == true);
  }

  TEST_CASE("polynomial subcommand") {
    const Result r = call({"poly", "--op", "mul", "--f", "x+1", "--g", "x-1"});
    CHECK(r.body["payload"]["result"] == "x^2 - 1");
    const Result sq = call({"poly", "--op", "squarefree", "--f", "x^5 + 2*x^4 + x^3"});
    CHECK(sq.code == 0);
    const Result wd = call({"poly", "--op", "weighted-degree", "--f", "x+y", "--weights", "x=1,y=2"});
    CHECK(wd.code == 0);
    CHECK(wd.body["payload"]["degree"].is_null());
  }
}
