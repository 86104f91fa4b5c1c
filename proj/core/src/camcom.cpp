#include "camcom/camcom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace camcom {

namespace {

std::vector<double> quotients_at(std::span<const LogWeight> weights, double base,
                                 double divisor) {
  std::vector<double> q;
  q.reserve(weights.size());
  for (const LogWeight& w : weights)
    q.push_back(base + std::exp(w.log_value - std::log(divisor)));
  return q;
}

}  // namespace

Composition camcom_apportion(const ApportionmentProblem& problem) {
  problem.validate();
  const std::size_t n = problem.roster.size();
  if (static_cast<long long>(n) * problem.cap < problem.house_size)
    throw DomainError("cap of " + std::to_string(problem.cap) + " cannot fill a house of " +
                      std::to_string(problem.house_size) + " seats");

  const auto weights = log_weights(problem.roster, problem.exponent);
  std::vector<bool> is_capped(n, false);
  std::vector<int> totals(n, 0);
  DivisorInterval divisor{};
  std::vector<double> quotients;

  for (;;) {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < n; ++i)
      if (!is_capped[i]) active.push_back(i);

    long long capped_count = static_cast<long long>(n) - static_cast<long long>(active.size());
    long long remaining = problem.house_size - capped_count * problem.cap -
                          static_cast<long long>(active.size()) * problem.base_seats;

    if (active.empty()) {
      if (remaining != 0)
        throw DomainError("capping every state cannot exhaust the house exactly");
      break;
    }
    if (remaining < static_cast<long long>(active.size()))
      throw DomainError("capping leaves too few seats for the remaining states");

    std::vector<LogWeight> active_weights;
    active_weights.reserve(active.size());
    for (std::size_t i : active) active_weights.push_back(weights[i]);

    SeatVector y = apportion(active_weights, static_cast<int>(remaining), RoundingRule::Upward);
    divisor = divisor_interval(active_weights, y, RoundingRule::Upward);
    quotients = quotients_at(weights, problem.base_seats, divisor.nice);

    std::vector<std::size_t> violators;
    for (std::size_t k = 0; k < active.size(); ++k) {
      totals[active[k]] = problem.base_seats + y[k];
      if (totals[active[k]] > problem.cap) violators.push_back(active[k]);
    }
    if (violators.empty()) break;
    for (std::size_t i : violators) {
      is_capped[i] = true;
      totals[i] = problem.cap;
    }
  }

  Composition out{.problem = problem};
  for (std::size_t i = 0; i < n; ++i) {
    if (is_capped[i]) totals[i] = problem.cap;
    if (is_capped[i]) out.capped.push_back(i);
  }
  out.seats = SeatVector(std::move(totals));
  out.quotients = std::move(quotients);
  out.exponent_used = problem.exponent;
  out.divisor = divisor;
  return out;
}

PowerVariantResult power_variant_detailed(const ApportionmentProblem& problem) {
  problem.validate();
  const std::size_t n = problem.roster.size();
  const int remaining = problem.house_size - static_cast<int>(n) * problem.base_seats;

  PowerVariantResult result;
  const auto unit_weights = log_weights(problem.roster, 1.0);
  SeatVector y1 = apportion(unit_weights, remaining, RoundingRule::Upward);

  int max_total = 0;
  for (std::size_t i = 0; i < n; ++i)
    max_total = std::max(max_total, problem.base_seats + y1[i]);

  if (max_total <= problem.cap) {
    result.cap_binding = false;
    Composition comp{.problem = problem};
    std::vector<int> totals(n);
    for (std::size_t i = 0; i < n; ++i) totals[i] = problem.base_seats + y1[i];
    comp.seats = SeatVector(std::move(totals));
    comp.divisor = divisor_interval(unit_weights, y1, RoundingRule::Upward);
    comp.quotients = quotients_at(unit_weights, problem.base_seats, comp.divisor.nice);
    comp.exponent_used = 1.0;
    result.compositions.push_back(std::move(comp));
    return result;
  }

  result.cap_binding = true;
  result.trace = solve_target(problem.roster, remaining, problem.cap - problem.base_seats);
  for (const SolverSolution& sol : result.trace->solutions) {
    Composition comp{.problem = problem};
    std::vector<int> totals(n);
    for (std::size_t i = 0; i < n; ++i) totals[i] = problem.base_seats + sol.range.vector[i];
    comp.seats = SeatVector(std::move(totals));
    comp.divisor = sol.divisor;
    comp.quotients = quotients_at(log_weights(problem.roster, sol.divisor_exponent),
                                  problem.base_seats, sol.divisor.nice);
    comp.exponent_used = sol.nice_exponent;
    result.compositions.push_back(std::move(comp));
  }
  return result;
}

std::vector<Composition> power_variant(const ApportionmentProblem& problem) {
  return power_variant_detailed(problem).compositions;
}

DegressivityReport check_degressive(const Composition& composition) {
  const Roster& roster = composition.problem.roster;
  const std::size_t n = roster.size();
  DegressivityReport report;

  auto ratio_holds = [](double lhs, double rhs) {
    // lhs >= rhs up to relative floating-point noise
    return lhs >= rhs || rhs - lhs <= 1e-12 * std::max(std::fabs(lhs), std::fabs(rhs));
  };

  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto p_i = roster[i].population;
      const auto p_j = roster[j].population;
      if (p_i <= p_j) continue;  // equal populations impose no ordering
      const long long x_i = composition.seats[i];
      const long long x_j = composition.seats[j];
      if (x_i < x_j)
        report.violations.push_back({i, j, DegressivityViolation::Kind::SeatOrder});
      // p_i/x_i >= p_j/x_j, cross-multiplied to stay in integers
      if (static_cast<double>(p_i) * x_j < static_cast<double>(p_j) * x_i)
        report.violations.push_back({i, j, DegressivityViolation::Kind::SeatRatio});
      const double q_i = composition.quotients[i];
      const double q_j = composition.quotients[j];
      if (!ratio_holds(static_cast<double>(p_i) * q_j, static_cast<double>(p_j) * q_i))
        report.violations.push_back({i, j, DegressivityViolation::Kind::QuotientRatio});
    }
  }
  for (const auto& v : report.violations) {
    if (v.kind == DegressivityViolation::Kind::QuotientRatio)
      report.holds_on_quotients = false;
    else
      report.holds_on_seats = false;
  }
  return report;
}

Majorization majorization_compare(const SeatVector& a, const SeatVector& b) {
  if (a.size() != b.size()) throw DomainError("seat vectors differ in length");
  if (a.total() != b.total()) throw DomainError("seat vectors differ in total");

  bool a_below = true, b_below = true;
  long long sum_a = 0, sum_b = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sum_a += a[k];
    sum_b += b[k];
    if (sum_a > sum_b) a_below = false;
    if (sum_b > sum_a) b_below = false;
  }
  if (a_below && b_below) return Majorization::Equal;
  if (a_below) return Majorization::FirstMajorizedBySecond;
  if (b_below) return Majorization::SecondMajorizedByFirst;
  return Majorization::Incomparable;
}

bool identity_check(const Roster& roster, int house_size, double exponent) {
  const auto weights = log_weights(roster, exponent);
  const SeatVector up = composite(weights, house_size, 5.0, RoundingRule::Upward);
  const SeatVector std_ = composite(weights, house_size, 5.5, RoundingRule::Standard);
  const SeatVector down = composite(weights, house_size, 6.0, RoundingRule::Downward);
  return up == std_ && std_ == down;
}

}  // namespace camcom
