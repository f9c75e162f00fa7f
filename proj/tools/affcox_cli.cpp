// Command-line front end; talks to the library only through affcox.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "affcox/affcox.h"

namespace {

enum ExitCode { kPass = 0, kChecksFailed = 1, kUsage = 2, kPartial = 3 };

struct Args {
  std::string type, twist, tau, rep, fixture, output;
  int rank = 0;
  std::optional<int> delta_pow;
  int conjugates = 10;
  int conj_length = 6;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  int max_rank = 7;
  bool json = false, edges = false, write_fixture = false, cross_check = false;
};

using Runner = affcox_status (*)(const affcox_run_options*, affcox_format, char**, int*);

int execute(Runner run, const Args& a) {
  affcox_run_options o;
  affcox_run_options_init(&o);
  o.type = a.type.empty() ? nullptr : a.type.c_str();
  o.rank = a.rank;
  o.twist = a.twist.empty() ? nullptr : a.twist.c_str();
  o.delta_pow = a.delta_pow.value_or(-1);
  o.tau = a.tau.empty() ? nullptr : a.tau.c_str();
  o.rep = a.rep.empty() ? nullptr : a.rep.c_str();
  o.conjugates = a.conjugates;
  o.conj_length = a.conj_length;
  o.seed = a.seed;
  o.node_budget = a.budget;
  o.edges = a.edges;
  o.max_rank = a.max_rank;
  o.fixture = a.fixture.empty() ? nullptr : a.fixture.c_str();
  o.write_fixture = a.write_fixture;
  o.cross_check = a.cross_check;

  char* report = nullptr;
  int all_passed = 0;
  const affcox_status s = run(&o, a.json ? AFFCOX_FORMAT_JSON : AFFCOX_FORMAT_TEXT, &report, &all_passed);
  if (s != AFFCOX_OK && s != AFFCOX_BUDGET_EXCEEDED) {
    std::cerr << "affcox: " << affcox_status_string(s) << ": " << affcox_last_error_message() << "\n";
    return kUsage;
  }
  if (a.output.empty()) {
    std::fputs(report, stdout);
  } else {
    std::ofstream out(a.output);
    if (!out) {
      std::cerr << "affcox: cannot write " << a.output << "\n";
      affcox_string_free(report);
      return kUsage;
    }
    out << report;
  }
  affcox_string_free(report);
  if (s == AFFCOX_BUDGET_EXCEEDED) {
    std::cerr << "affcox: " << affcox_last_error_message() << "\n";
    return kPartial;
  }
  return all_passed ? kPass : kChecksFailed;
}

void add_group_options(CLI::App* cmd, Args& a, bool type_required) {
  auto* t = cmd->add_option("--type", a.type, "Root system type letter (A-G)");
  auto* r = cmd->add_option("--rank", a.rank, "Rank")->check(CLI::Range(1, 8));
  if (type_required) {
    t->required();
    r->required();
  }
  cmd->add_option("--twist", a.twist, "Diagram automorphism: id, flip, triality, triality-inverse or cycles like \"(1 3)\"");
  cmd->add_option("--delta-pow", a.delta_pow, "Restrict to one power of the twist (default: all)")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--json", a.json, "Emit JSON instead of text");
  cmd->add_option("--output,-o", a.output, "Write the report to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal-length elements and Coxeter elements in twisted extended affine Weyl groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(affcox_version()));
  Args a;

  auto* verify = app.add_subcommand("verify", "Verify minimal elements = parabolic Coxeter elements for classes with finite Coxeter part");
  add_group_options(verify, a, true);
  verify->add_option("--tau", a.tau, "all (default), identity, or a minuscule node index");
  verify->add_option("--rep", a.rep, "Class representative as element text, or from-table");
  verify->add_option("--conjugates", a.conjugates, "Random conjugates per class")->check(CLI::NonNegativeNumber);
  verify->add_option("--conj-length", a.conj_length, "Maximal conjugator length")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", a.seed, "Seed for random conjugates");
  verify->add_option("--budget", a.budget, "Node budget per closure (default: $AFFCOX_NODE_BUDGET or 1000000)");
  verify->add_flag("--edges", a.edges, "Include descent edge logs (JSON)");

  auto* mins = app.add_subcommand("min-elements", "List the minimal-length elements reached by descent");
  add_group_options(mins, a, true);
  mins->add_option("--tau", a.tau, "Table witness selector when --rep is from-table");
  mins->add_option("--rep", a.rep, "Start element text, or from-table (default)");
  mins->add_option("--budget", a.budget, "Node budget (default: $AFFCOX_NODE_BUDGET or 1000000)");

  auto* tables = app.add_subcommand("tables", "Audit the case tables");
  add_group_options(tables, a, false);
  tables->add_option("--max-rank", a.max_rank, "Largest rank when --rank is not given")->check(CLI::Range(1, 8));
  tables->add_option("--fixture", a.fixture, "Type-A fixture to compare derived entries against");
  tables->add_flag("--write-fixture", a.write_fixture, "Regenerate the type-A fixture at --fixture");
  tables->add_flag("--cross-check", a.cross_check, "Re-find tabulated witnesses by search");

  auto* classify = app.add_subcommand("classify", "Coinvariants, lattice identity certificates and class representatives");
  add_group_options(classify, a, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  try {
    if (*verify) return execute(affcox_run_verify, a);
    if (*mins) return execute(affcox_run_min_elements, a);
    if (*tables) return execute(affcox_run_tables, a);
    if (*classify) return execute(affcox_run_classify, a);
  } catch (const std::exception& e) {
    std::cerr << "affcox: " << e.what() << "\n";
  }
  return kUsage;
}
