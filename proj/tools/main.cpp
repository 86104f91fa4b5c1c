#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "camcom/model.hpp"
#include "camcom/report.hpp"

namespace {

struct CommonFlags {
  std::string roster_path;
  std::string builtin;
  std::string format = "text";
  int precision = 4;
  int house = 751;
  int base = 5;
  int cap = 96;
};

void add_common(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("--roster", flags.roster_path, "roster file (code,name,population)");
  cmd.add_option("--builtin", flags.builtin, "builtin dataset (eu27)");
  cmd.add_option("--format", flags.format, "output format: text, csv or records");
  cmd.add_option("--precision", flags.precision, "decimal places for exponents and divisors")
      ->check(CLI::Range(1, 12));
  cmd.add_option("--house", flags.house, "total house size");
  cmd.add_option("--base", flags.base, "base seats per state");
}

camcom::Roster resolve_roster(const CommonFlags& flags) {
  if (!flags.builtin.empty()) {
    if (flags.builtin != "eu27")
      throw camcom::DomainError("unknown builtin dataset '" + flags.builtin + "'");
    if (!flags.roster_path.empty())
      throw camcom::DomainError("--roster and --builtin are mutually exclusive");
    return camcom::builtin_eu27();
  }
  if (flags.roster_path.empty())
    throw camcom::DomainError("either --roster or --builtin eu27 is required");
  return camcom::load_roster_file(flags.roster_path);
}

camcom::ReportOptions report_options(const CommonFlags& flags) {
  return {camcom::parse_format(flags.format), flags.precision};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"European-Parliament-style seat apportionment"};
  app.require_subcommand(1);

  CommonFlags apportion_flags;
  double exponent = 1.0;
  std::string rule = "up";
  CLI::App* apportion_cmd =
      app.add_subcommand("apportion", "composite apportionment at a fixed exponent");
  add_common(*apportion_cmd, apportion_flags);
  apportion_cmd->add_option("--exponent", exponent, "population weighting exponent");
  apportion_cmd->add_option("--rule", rule, "rounding rule: up, std or down");
  apportion_cmd->add_option("--cap", apportion_flags.cap,
                            "accepted for flag compatibility; this subcommand never caps");

  CommonFlags solve_flags;
  std::string pick = "all";
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "power-weighted variant: cap the largest state exactly");
  add_common(*solve_cmd, solve_flags);
  solve_cmd->add_option("--cap", solve_flags.cap, "maximum seats per state");
  solve_cmd->add_option("--pick", pick, "which solutions to show: all, smallest or largest");

  CommonFlags table_flags;
  std::string columns = "camcom";
  CLI::App* table_cmd = app.add_subcommand("table", "side-by-side comparison of compositions");
  add_common(*table_cmd, table_flags);
  table_cmd->add_option("--cap", table_flags.cap, "maximum seats per state (camcom column)");
  table_cmd->add_option("--columns", columns,
                        "comma list of camcom, power:<E>, raw:<E>, now, parabolic");

  CLI11_PARSE(app, argc, argv);

  try {
    if (apportion_cmd->parsed()) {
      const auto roster = resolve_roster(apportion_flags);
      if (!(exponent > 0.0)) throw camcom::DomainError("exponent must be positive");
      const auto run =
          camcom::run_apportion(roster, exponent, apportion_flags.house,
                                   apportion_flags.base, camcom::parse_rule(rule));
      std::cout << camcom::render_apportion(run, report_options(apportion_flags));
    } else if (solve_cmd->parsed()) {
      camcom::ApportionmentProblem problem{resolve_roster(solve_flags), solve_flags.house,
                                              solve_flags.base, solve_flags.cap};
      const auto run = camcom::run_solve(problem);
      std::cout << camcom::render_solve(run, camcom::parse_pick(pick),
                                           report_options(solve_flags));
    } else if (table_cmd->parsed()) {
      camcom::ApportionmentProblem problem{resolve_roster(table_flags), table_flags.house,
                                              table_flags.base, table_flags.cap};
      const auto run = camcom::run_table(problem, camcom::parse_columns(columns));
      std::cout << camcom::render_table(run, report_options(table_flags));
    }
  } catch (const camcom::TieError& e) {
    std::cerr << "error: tie: " << e.what() << "\n";
    return 1;
  } catch (const camcom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
