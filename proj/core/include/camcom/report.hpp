#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "camcom/camcom.hpp"
#include "camcom/divisor.hpp"
#include "camcom/model.hpp"
#include "camcom/powerlaw.hpp"

namespace camcom {

enum class OutputFormat { Text, Csv, Records };
enum class SolutionPick { All, Smallest, Largest };

OutputFormat parse_format(const std::string& name);  // text | csv | records
RoundingRule parse_rule(const std::string& name);    // up | std | down
SolutionPick parse_pick(const std::string& name);    // all | smallest | largest

/// One column of a comparison table: a computed method or a static
/// reference composition.
struct ColumnRequest {
  enum class Kind { CamCom, Power, Raw, StatusQuo, Parabolic };
  Kind kind = Kind::CamCom;
  double exponent = 1.0;  // Power and Raw only
};

/// "camcom,power:0.9,raw:1,now,parabolic" and the like.
std::vector<ColumnRequest> parse_columns(const std::string& spec);

struct ReportOptions {
  OutputFormat format = OutputFormat::Text;
  int precision = 4;  // decimal places for exponents and divisors
};

/// A single composite apportionment prepared for rendering.
struct ApportionRun {
  Roster roster;
  double exponent = 1.0;
  int house_size = 751;
  int base_seats = 5;
  RoundingRule rule = RoundingRule::Upward;
  SeatVector seats;                    // totals per state
  std::vector<double> indices;         // population^exponent
  std::vector<double> quotients;       // base + w_i / nice divisor
  DivisorInterval divisor;             // of the remaining-seat vector
  std::optional<ExponentRange> range;  // upward rule only
};

ApportionRun run_apportion(const Roster& roster, double exponent, int house_size,
                           int base_seats, RoundingRule rule);
std::string render_apportion(const ApportionRun& run, const ReportOptions& options);

/// The two-step power-variant protocol with per-solution degressivity.
struct SolveRun {
  ApportionmentProblem problem;
  PowerVariantResult result;
  std::vector<DegressivityReport> degressivity;  // aligned with compositions
};

SolveRun run_solve(const ApportionmentProblem& problem);
std::string render_solve(const SolveRun& run, SolutionPick pick, const ReportOptions& options);

/// Side-by-side comparison of several compositions.
struct TableRun {
  Roster roster;
  std::vector<std::string> headers;                // one per requested column
  std::vector<std::vector<int>> seat_columns;      // [column][state]
  std::vector<double> index_exponents;             // distinct exponents != 1
  std::vector<std::vector<double>> index_columns;  // aligned with index_exponents
};

TableRun run_table(const ApportionmentProblem& problem,
                   const std::vector<ColumnRequest>& columns);
std::string render_table(const TableRun& run, const ReportOptions& options);

/// Static reference compositions, keyed by EU27 state code.
const std::vector<std::pair<std::string, int>>& status_quo_seats();
const std::vector<std::pair<std::string, int>>& parabolic_seats();

/// One seat cell recovered from comma-separated report output.
struct ParsedSeats {
  std::string code;
  std::string column;
  int seats = 0;
};

/// Parses the seat numbers back out of any comma-separated report.
/// Sum rows and summary comment lines are skipped.
std::vector<ParsedSeats> parse_csv_seats(const std::string& csv);

}  // namespace camcom
