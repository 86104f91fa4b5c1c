#include "camcom/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "camcom/decimal.hpp"

namespace camcom {

namespace {

using nlohmann::json;

std::string fmt_fixed(double v, int places) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

// Weighted population indices: one decimal place, scientific once fixed
// notation stops being readable.
std::string fmt_index(double v) {
  if (std::fabs(v) < 1e15) return fmt_fixed(v, 1);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}

// Interval endpoints; switches to scientific for magnitudes fixed
// notation cannot present sensibly.
std::string fmt_endpoint(double v, int places) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::fabs(v) >= 1e15 || (v != 0.0 && std::fabs(v) < 1e-4)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", places, v);
    return buf;
  }
  return fmt_fixed(v, places);
}

std::string fmt_int(long long v) { return std::to_string(v); }

// Nice exponents are short decimals except on half-open extreme ranges,
// where the closed boundary itself is reported; show those rounded.
std::string fmt_nice_exponent(double nice, double lower, double upper, int places) {
  if (nice == lower || nice == upper) return fmt_fixed(nice, places);
  return shortest_decimal(nice);
}

// Display convention: lower endpoints round up, upper endpoints round
// down, so abutting ranges print without overlap. Exponents live on the
// positive axis, so a nonpositive lower bound shows as 0.
std::string fmt_range(double lower, double upper, int places) {
  double lo = round_up(std::max(lower, 0.0), places);
  double hi = round_down(upper, places);
  return "[" + fmt_endpoint(lo, places) + ", " + fmt_endpoint(hi, places) + "]";
}

std::string fmt_interval(const DivisorInterval& d, RoundingRule rule, int places) {
  const bool lo_closed = rule == RoundingRule::Upward;
  return std::string(lo_closed ? "[" : "(") + fmt_endpoint(d.d_min, places) + ", " +
         fmt_endpoint(d.d_max, places) + (lo_closed ? ")" : "]");
}

const char* rule_name(RoundingRule rule) {
  switch (rule) {
    case RoundingRule::Upward: return "up";
    case RoundingRule::Standard: return "std";
    case RoundingRule::Downward: return "down";
  }
  return "?";
}

json json_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

struct TextTable {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;

  std::string str() const {
    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += "  ";
        out += row[c];
        if (c + 1 < row.size()) out.append(width[c] - row[c].size(), ' ');
      }
      out += '\n';
    };
    emit(headers);
    for (const auto& row : rows) emit(row);
    return out;
  }

  std::string csv() const {
    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += ',';
        out += row[c];
      }
      out += '\n';
    };
    emit(headers);
    for (const auto& row : rows) emit(row);
    return out;
  }
};

double parse_positive_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("cannot parse " + what + " '" + text + "'");
  }
  if (used != text.size() || !(v > 0.0))
    throw DomainError(what + " must be a positive number, got '" + text + "'");
  return v;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "records") return OutputFormat::Records;
  throw DomainError("unknown format '" + name + "' (expected text, csv or records)");
}

RoundingRule parse_rule(const std::string& name) {
  if (name == "up") return RoundingRule::Upward;
  if (name == "std") return RoundingRule::Standard;
  if (name == "down") return RoundingRule::Downward;
  throw DomainError("unknown rounding rule '" + name + "' (expected up, std or down)");
}

SolutionPick parse_pick(const std::string& name) {
  if (name == "all") return SolutionPick::All;
  if (name == "smallest") return SolutionPick::Smallest;
  if (name == "largest") return SolutionPick::Largest;
  throw DomainError("unknown pick '" + name + "' (expected all, smallest or largest)");
}

std::vector<ColumnRequest> parse_columns(const std::string& spec) {
  std::vector<ColumnRequest> out;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    if (token == "camcom" || token == "cc") {
      out.push_back({ColumnRequest::Kind::CamCom, 1.0});
    } else if (token == "now" || token == "statusquo") {
      out.push_back({ColumnRequest::Kind::StatusQuo, 1.0});
    } else if (token == "parabolic" || token == "par") {
      out.push_back({ColumnRequest::Kind::Parabolic, 1.0});
    } else if (token.starts_with("power:")) {
      out.push_back({ColumnRequest::Kind::Power,
                     parse_positive_double(token.substr(6), "power column exponent")});
    } else if (token.starts_with("raw:")) {
      out.push_back({ColumnRequest::Kind::Raw,
                     parse_positive_double(token.substr(4), "raw column exponent")});
    } else {
      throw DomainError("unknown column '" + token +
                        "' (expected camcom, power:<E>, raw:<E>, now or parabolic)");
    }
  }
  if (out.empty()) throw DomainError("at least one table column is required");
  return out;
}

ApportionRun run_apportion(const Roster& roster, double exponent, int house_size,
                           int base_seats, RoundingRule rule) {
  if (base_seats < 0) throw DomainError("base seats must be nonnegative");
  const std::size_t n = roster.size();
  const auto weights = log_weights(roster, exponent);

  ApportionRun run{.roster = roster,
                   .exponent = exponent,
                   .house_size = house_size,
                   .base_seats = base_seats,
                   .rule = rule};
  run.seats = composite(weights, house_size, static_cast<double>(base_seats), rule);

  std::vector<int> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = run.seats[i] - base_seats;
  SeatVector y(std::move(remaining));
  run.divisor = divisor_interval(weights, y, rule);
  for (std::size_t i = 0; i < n; ++i) {
    run.indices.push_back(std::exp(weights[i].log_value));
    run.quotients.push_back(base_seats +
                            std::exp(weights[i].log_value - std::log(run.divisor.nice)));
  }
  if (rule == RoundingRule::Upward) run.range = exponent_range(roster, y);
  return run;
}

std::string render_apportion(const ApportionRun& run, const ReportOptions& options) {
  const int p = options.precision;
  const std::string index_header = "popn^" + shortest_decimal(run.exponent);

  if (options.format == OutputFormat::Records) {
    std::string out;
    for (std::size_t i = 0; i < run.roster.size(); ++i) {
      json j{{"type", "state"},
             {"code", run.roster[i].code},
             {"name", run.roster[i].name},
             {"population", run.roster[i].population},
             {"index", run.indices[i]},
             {"quotient", run.quotients[i]},
             {"seats", run.seats[i]}};
      out += j.dump() + "\n";
    }
    json summary{{"type", "summary"},
                 {"house", run.house_size},
                 {"base", run.base_seats},
                 {"rule", rule_name(run.rule)},
                 {"exponent", run.exponent},
                 {"seats_total", run.seats.total()},
                 {"divisor",
                  {{"nice", json_or_null(run.divisor.nice)},
                   {"min", json_or_null(run.divisor.d_min)},
                   {"max", json_or_null(run.divisor.d_max)}}}};
    if (run.range)
      summary["exponent_range"] = {{"lower", json_or_null(run.range->lower)},
                                   {"upper", json_or_null(run.range->upper)},
                                   {"nice", json_or_null(nice_exponent(*run.range))}};
    out += summary.dump() + "\n";
    return out;
  }

  TextTable table;
  table.headers = {"code", "name", "population", index_header, "quotient", "seats"};
  for (std::size_t i = 0; i < run.roster.size(); ++i) {
    table.rows.push_back({run.roster[i].code, run.roster[i].name,
                          fmt_int(run.roster[i].population), fmt_index(run.indices[i]),
                          fmt_fixed(run.quotients[i], p), fmt_int(run.seats[i])});
  }
  table.rows.push_back(
      {"sum", "", fmt_int(run.roster.total_population()), "", "", fmt_int(run.seats.total())});

  std::string summary;
  summary += "# house=" + fmt_int(run.house_size) + " base=" + fmt_int(run.base_seats) +
             " rule=" + rule_name(run.rule) + " exponent=" + shortest_decimal(run.exponent) +
             "\n";
  summary += "# divisor_nice=" + shortest_decimal(run.divisor.nice) +
             " divisor_min=" + fmt_endpoint(run.divisor.d_min, p) +
             " divisor_max=" + fmt_endpoint(run.divisor.d_max, p) + "\n";
  if (run.range)
    summary += "# range_lower=" +
               fmt_endpoint(round_up(std::max(run.range->lower, 0.0), p), p) +
               " range_upper=" + fmt_endpoint(round_down(run.range->upper, p), p) +
               " range_nice=" +
               fmt_nice_exponent(nice_exponent(*run.range), run.range->lower,
                                 run.range->upper, p) +
               "\n";

  if (options.format == OutputFormat::Csv) return table.csv() + summary;

  std::string out = table.str();
  out += "\nhouse " + fmt_int(run.house_size) + "  base " + fmt_int(run.base_seats) +
         "  rule " + rule_name(run.rule) + "  exponent " + shortest_decimal(run.exponent) +
         "\n";
  out += "divisor " + shortest_decimal(run.divisor.nice) + "  interval " +
         fmt_interval(run.divisor, run.rule, p) + "\n";
  if (run.range)
    out += "exponent range " + fmt_range(run.range->lower, run.range->upper, p) + "  nice " +
           fmt_nice_exponent(nice_exponent(*run.range), run.range->lower,
                             run.range->upper, p) +
           "\n";
  return out;
}

SolveRun run_solve(const ApportionmentProblem& problem) {
  SolveRun run{.problem = problem, .result = power_variant_detailed(problem)};
  for (const Composition& comp : run.result.compositions)
    run.degressivity.push_back(check_degressive(comp));
  return run;
}

namespace {

std::vector<std::size_t> picked_indices(const SolveRun& run, SolutionPick pick) {
  const std::size_t count = run.result.compositions.size();
  if (count == 0) return {};
  if (pick == SolutionPick::Smallest) return {0};
  if (pick == SolutionPick::Largest) return {count - 1};
  std::vector<std::size_t> all(count);
  for (std::size_t i = 0; i < count; ++i) all[i] = i;
  return all;
}

ExponentRange solution_range(const SolveRun& run, std::size_t k) {
  if (run.result.trace) return run.result.trace->solutions[k].range;
  const Composition& comp = run.result.compositions[k];
  std::vector<int> remaining(comp.seats.size());
  for (std::size_t i = 0; i < remaining.size(); ++i)
    remaining[i] = comp.seats[i] - comp.problem.base_seats;
  return exponent_range(comp.problem.roster, SeatVector(std::move(remaining)));
}

}  // namespace

std::string render_solve(const SolveRun& run, SolutionPick pick, const ReportOptions& options) {
  const int p = options.precision;
  const Roster& roster = run.problem.roster;
  const auto indices = picked_indices(run, pick);
  const std::string headline =
      run.result.cap_binding
          ? "cap binding: largest state exceeds " + fmt_int(run.problem.cap) +
                " seats in the plain composition; power weighting engaged"
          : "cap not binding: the plain composition respects the cap";

  if (options.format == OutputFormat::Records) {
    std::string out;
    for (std::size_t k : indices) {
      const Composition& comp = run.result.compositions[k];
      const ExponentRange range = solution_range(run, k);
      json seats = json::array();
      for (std::size_t i = 0; i < roster.size(); ++i)
        seats.push_back({{"code", roster[i].code}, {"seats", comp.seats[i]}});
      json j{{"type", "solution"},
             {"index", k + 1},
             {"exponent", *comp.exponent_used},
             {"exponent_range",
              {{"lower", json_or_null(range.lower)}, {"upper", json_or_null(range.upper)}}},
             {"divisor",
              {{"nice", json_or_null(comp.divisor.nice)},
               {"min", json_or_null(comp.divisor.d_min)},
               {"max", json_or_null(comp.divisor.d_max)}}},
             {"degressive",
              {{"seats", run.degressivity[k].holds_on_seats},
               {"quotients", run.degressivity[k].holds_on_quotients}}},
             {"seats", seats}};
      out += j.dump() + "\n";
    }
    json summary{{"type", "summary"},
                 {"cap_binding", run.result.cap_binding},
                 {"house", run.problem.house_size},
                 {"base", run.problem.base_seats},
                 {"cap", run.problem.cap},
                 {"solutions", run.result.compositions.size()}};
    if (run.result.trace) summary["init_exponent"] = run.result.trace->init_exponent;
    out += summary.dump() + "\n";
    return out;
  }

  if (options.format == OutputFormat::Csv) {
    TextTable table;
    table.headers = {"solution", "exponent", "code", "name", "population", "seats"};
    for (std::size_t k : indices) {
      const Composition& comp = run.result.compositions[k];
      for (std::size_t i = 0; i < roster.size(); ++i)
        table.rows.push_back({fmt_int(k + 1), shortest_decimal(*comp.exponent_used),
                              roster[i].code, roster[i].name, fmt_int(roster[i].population),
                              fmt_int(comp.seats[i])});
    }
    std::string out = table.csv();
    out += "# " + headline + "\n";
    if (run.result.trace)
      out += "# init_exponent=" + fmt_fixed(run.result.trace->init_exponent, p) + "\n";
    for (std::size_t k : indices) {
      const Composition& comp = run.result.compositions[k];
      const ExponentRange range = solution_range(run, k);
      out += "# solution=" + fmt_int(k + 1) + " exponent=" +
             fmt_nice_exponent(*comp.exponent_used, range.lower, range.upper, p) +
             " range_lower=" +
             fmt_endpoint(round_up(std::max(range.lower, 0.0), p), p) + " range_upper=" +
             fmt_endpoint(round_down(range.upper, p), p) + " divisor=" +
             shortest_decimal(comp.divisor.nice) +
             " degressive_seats=" + (run.degressivity[k].holds_on_seats ? "yes" : "no") +
             " degressive_quotients=" +
             (run.degressivity[k].holds_on_quotients ? "yes" : "no") + "\n";
    }
    return out;
  }

  std::string out = headline + "\n";
  if (run.result.trace)
    out += "init exponent " + fmt_fixed(run.result.trace->init_exponent, p) +
           " (bias-corrected)\n";
  for (std::size_t k : indices) {
    const Composition& comp = run.result.compositions[k];
    const ExponentRange range = solution_range(run, k);
    out += "\nsolution " + fmt_int(k + 1) + " of " +
           fmt_int(run.result.compositions.size()) + ": nice exponent " +
           fmt_nice_exponent(*comp.exponent_used, range.lower, range.upper, p) + "\n";
    out += "  exponent range " + fmt_range(range.lower, range.upper, p) + "\n";
    out += "  divisor " + shortest_decimal(comp.divisor.nice) + "  interval " +
           fmt_interval(comp.divisor, RoundingRule::Upward, p) + "\n";
    out += std::string("  degressive on seats: ") +
           (run.degressivity[k].holds_on_seats ? "yes" : "no") + "   on quotients: " +
           (run.degressivity[k].holds_on_quotients ? "yes" : "no") + "\n";
    out += "  seats:";
    for (std::size_t i = 0; i < roster.size(); ++i)
      out += " " + roster[i].code + "=" + fmt_int(comp.seats[i]);
    out += "\n";
  }
  return out;
}

const std::vector<std::pair<std::string, int>>& status_quo_seats() {
  static const std::vector<std::pair<std::string, int>> kSeats = {
      {"DE", 99}, {"FR", 74}, {"UK", 73}, {"IT", 73}, {"ES", 54}, {"PL", 51}, {"RO", 33},
      {"NL", 26}, {"EL", 22}, {"BE", 22}, {"PT", 22}, {"CZ", 22}, {"HU", 22}, {"SE", 20},
      {"AT", 19}, {"BG", 18}, {"DK", 13}, {"SK", 13}, {"FI", 13}, {"IE", 12}, {"LT", 12},
      {"LV", 9},  {"SI", 8},  {"EE", 6},  {"CY", 6},  {"LU", 6},  {"MT", 6}};
  return kSeats;
}

const std::vector<std::pair<std::string, int>>& parabolic_seats() {
  static const std::vector<std::pair<std::string, int>> kSeats = {
      {"DE", 96}, {"FR", 80}, {"UK", 78}, {"IT", 76}, {"ES", 61}, {"PL", 52}, {"RO", 33},
      {"NL", 27}, {"EL", 20}, {"BE", 20}, {"PT", 19}, {"CZ", 19}, {"HU", 19}, {"SE", 18},
      {"AT", 16}, {"BG", 15}, {"DK", 13}, {"SK", 13}, {"FI", 13}, {"IE", 11}, {"LT", 10},
      {"LV", 8},  {"SI", 8},  {"EE", 7},  {"CY", 7},  {"LU", 6},  {"MT", 6}};
  return kSeats;
}

namespace {

std::vector<int> static_column(const Roster& roster,
                               const std::vector<std::pair<std::string, int>>& data,
                               const std::string& label) {
  std::vector<int> out;
  for (const auto& state : roster.states()) {
    auto it = std::find_if(data.begin(), data.end(),
                           [&](const auto& kv) { return kv.first == state.code; });
    if (it == data.end())
      throw DomainError("no " + label + " data for state '" + state.code + "'");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

TableRun run_table(const ApportionmentProblem& problem,
                   const std::vector<ColumnRequest>& columns) {
  if (columns.empty()) throw DomainError("at least one table column is required");
  const Roster& roster = problem.roster;
  TableRun run{.roster = roster};

  std::optional<PowerVariantResult> power;
  auto power_result = [&]() -> const PowerVariantResult& {
    if (!power) power = power_variant_detailed(problem);
    return *power;
  };

  for (const ColumnRequest& col : columns) {
    switch (col.kind) {
      case ColumnRequest::Kind::CamCom: {
        run.headers.push_back("CC");
        const Composition comp = camcom_apportion(problem);
        run.seat_columns.push_back(comp.seats.seats());
        break;
      }
      case ColumnRequest::Kind::Power: {
        run.headers.push_back("x(" + shortest_decimal(col.exponent) + ")");
        const auto& comps = power_result().compositions;
        auto it = std::find_if(comps.begin(), comps.end(), [&](const Composition& c) {
          return std::fabs(*c.exponent_used - col.exponent) <= 1e-9;
        });
        if (it == comps.end()) {
          std::string available;
          for (const auto& c : comps)
            available += (available.empty() ? "" : ", ") + shortest_decimal(*c.exponent_used);
          throw DomainError("no power-variant solution at exponent " +
                            shortest_decimal(col.exponent) + " (solutions: " + available + ")");
        }
        run.seat_columns.push_back(it->seats.seats());
        break;
      }
      case ColumnRequest::Kind::Raw: {
        run.headers.push_back("raw(" + shortest_decimal(col.exponent) + ")");
        const auto weights = log_weights(roster, col.exponent);
        run.seat_columns.push_back(
            composite(weights, problem.house_size, problem.base_seats, RoundingRule::Upward)
                .seats());
        break;
      }
      case ColumnRequest::Kind::StatusQuo:
        run.headers.push_back("now");
        run.seat_columns.push_back(static_column(roster, status_quo_seats(), "status-quo"));
        break;
      case ColumnRequest::Kind::Parabolic:
        run.headers.push_back("par");
        run.seat_columns.push_back(static_column(roster, parabolic_seats(), "parabolic"));
        break;
    }
    if ((col.kind == ColumnRequest::Kind::Power || col.kind == ColumnRequest::Kind::Raw) &&
        col.exponent != 1.0 &&
        std::find(run.index_exponents.begin(), run.index_exponents.end(), col.exponent) ==
            run.index_exponents.end()) {
      run.index_exponents.push_back(col.exponent);
      const auto weights = log_weights(roster, col.exponent);
      std::vector<double> column;
      for (const LogWeight& w : weights) column.push_back(std::exp(w.log_value));
      run.index_columns.push_back(std::move(column));
    }
  }
  return run;
}

std::string render_table(const TableRun& run, const ReportOptions& options) {
  if (options.format == OutputFormat::Records) {
    std::string out;
    for (std::size_t i = 0; i < run.roster.size(); ++i) {
      json indices = json::object();
      for (std::size_t c = 0; c < run.index_exponents.size(); ++c)
        indices["popn^" + shortest_decimal(run.index_exponents[c])] = run.index_columns[c][i];
      json seats = json::object();
      for (std::size_t c = 0; c < run.headers.size(); ++c)
        seats[run.headers[c]] = run.seat_columns[c][i];
      json j{{"type", "state"},
             {"code", run.roster[i].code},
             {"name", run.roster[i].name},
             {"population", run.roster[i].population},
             {"indices", indices},
             {"seats", seats}};
      out += j.dump() + "\n";
    }
    json sums = json::object();
    for (std::size_t c = 0; c < run.headers.size(); ++c) {
      long long total = 0;
      for (int s : run.seat_columns[c]) total += s;
      sums[run.headers[c]] = total;
    }
    json summary{{"type", "summary"},
                 {"population", run.roster.total_population()},
                 {"sums", sums}};
    out += summary.dump() + "\n";
    return out;
  }

  TextTable table;
  table.headers = {"code", "name", "population"};
  for (std::size_t c = 0; c < run.index_exponents.size(); ++c)
    table.headers.push_back("popn^" + shortest_decimal(run.index_exponents[c]));
  for (const std::string& h : run.headers) table.headers.push_back(h);

  for (std::size_t i = 0; i < run.roster.size(); ++i) {
    std::vector<std::string> row = {run.roster[i].code, run.roster[i].name,
                                    fmt_int(run.roster[i].population)};
    for (std::size_t c = 0; c < run.index_exponents.size(); ++c)
      row.push_back(fmt_index(run.index_columns[c][i]));
    for (std::size_t c = 0; c < run.headers.size(); ++c)
      row.push_back(fmt_int(run.seat_columns[c][i]));
    table.rows.push_back(std::move(row));
  }
  std::vector<std::string> sum_row = {"sum", "", fmt_int(run.roster.total_population())};
  for (std::size_t c = 0; c < run.index_exponents.size(); ++c) sum_row.push_back("");
  for (std::size_t c = 0; c < run.headers.size(); ++c) {
    long long total = 0;
    for (int s : run.seat_columns[c]) total += s;
    sum_row.push_back(fmt_int(total));
  }
  table.rows.push_back(std::move(sum_row));

  return options.format == OutputFormat::Csv ? table.csv() : table.str();
}

std::vector<ParsedSeats> parse_csv_seats(const std::string& csv) {
  std::stringstream ss(csv);
  std::string line;
  std::vector<std::string> header;
  std::vector<ParsedSeats> out;

  auto split = [](const std::string& text) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : text) {
      if (c == ',') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    fields.push_back(cur);
    return fields;
  };

  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line);
    if (header.empty()) {
      header = fields;
      continue;
    }

    if (header[0] == "solution") {
      std::size_t code_col = 0, seat_col = 0;
      for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == "code") code_col = c;
        if (header[c] == "seats") seat_col = c;
      }
      out.push_back({fields[code_col], "solution:" + fields[0], std::stoi(fields[seat_col])});
      continue;
    }

    if (fields[0] == "sum") continue;
    std::size_t population_col = 2;
    for (std::size_t c = population_col + 1; c < header.size(); ++c) {
      const std::string& h = header[c];
      if (h.find('^') != std::string::npos || h == "index" || h == "quotient") continue;
      out.push_back({fields[0], h, std::stoi(fields[c])});
    }
  }
  return out;
}

}  // namespace camcom
