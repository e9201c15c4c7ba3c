#include <sstream>

#include "commands.hpp"
#include "qadm/cli.hpp"
#include "qadm/error.hpp"

namespace qadm::cli {

const std::vector<Route>& routing_table() {
  static const std::vector<Route> table{
      {"poly", {"poly_arith", "substitute", "squarefree_decomposition", "weighted_degree", "center_of_mass_section"}},
      {"classify", {"classify_branch_profile"}},
      {"versal", {"versal"}},
      {"tjurina", {"tjurina_basis"}},
      {"lct", {"lct", "lct_window_check"}},
      {"thresholds", {"thresholds_to_types"}},
      {"a2d", {"a_to_d_transform"}},
      {"normal-form", {"normal_form"}},
      {"wps", {"wps_weights", "wps_equal"}},
      {"stability", {"is_stable", "stratum_label"}},
      {"parity", {"odd_points", "parity_certificate"}},
      {"genus", {"arithmetic_genus"}},
      {"strata", {"enumerate_strata"}},
      {"contract", {"contract"}},
      {"divclass", {"canonical_class", "k_M0A", "transport", "ample_form_check"}},
      {"verify-identities", {"identity_suite"}},
      {"discrepancy", {"discrepancy"}},
      {"log-mmp", {"log_mmp_model"}},
      {"stable-reduce",
       {"base_change", "chart", "tail_family", "attaching_points", "verify_tail_membership", "d_stable_reduction"}},
  };
  return table;
}

std::vector<std::string> registered_subcommands() {
  CLI::App app;
  Invocation inv;
  add_commands(app, inv);
  std::vector<std::string> out;
  for (const auto* s : app.get_subcommands([](CLI::App*) { return true; })) out.push_back(s->get_name());
  return out;
}

namespace {

Json envelope(const std::string& sub) {
  return Json{{"subcommand", sub}, {"version", kVersion}};
}

int emit_error(std::ostream& out, const Invocation& inv, const std::string& type, const std::string& message,
               std::optional<std::size_t> position, int code) {
  Json err{{"type", type}, {"message", message}};
  if (position) err["position"] = *position;
  Json j = envelope(inv.subcommand);
  j["error"] = err;
  j["diagnostics"] = inv.diagnostics;
  out << j.dump() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact computations with quasi-admissible hyperelliptic covers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Invocation inv;
  add_commands(app, inv);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    // Help for a subcommand arrives as CallForHelp too; everything else is usage.
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    return emit_error(out, inv, "UsageError", e.what(), std::nullopt, 2);
  }

  try {
    Json payload = inv.action();
    Json j = envelope(inv.subcommand);
    j["payload"] = std::move(payload);
    j["diagnostics"] = inv.diagnostics;
    out << j.dump() << '\n';
    return inv.exit_code;
  } catch (const ParseError& e) {
    return emit_error(out, inv, e.name(), e.what(), e.position(), 2);
  } catch (const Error& e) {
    return emit_error(out, inv, e.name(), e.what(), std::nullopt, e.malformed_input() ? 2 : 1);
  } catch (const std::exception& e) {
    return emit_error(out, inv, "InternalError", e.what(), std::nullopt, 1);
  }
}

int run(int argc, const char* const* argv, std::ostream& out) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out);
}

}  // namespace qadm::cli
