#include "camcom/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "camcom/decimal.hpp"

namespace camcom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double tie_slack(double x) { return kTieTolerance * std::max(1.0, std::fabs(x)); }

bool close(double a, double b) { return std::fabs(a - b) <= tie_slack(std::max(a, b)); }

using IndexPair = std::pair<std::size_t, std::size_t>;

// Raw boundary data of a remaining-seat vector. Pairs are stored as
// (gaining, losing) for the transfer that fires when the boundary is
// crossed: at `upper` a seat moves toward the larger state of the pair,
// at `lower` toward the smaller one.
struct Bounds {
  double lower = -kInf;
  double upper = kInf;
  std::vector<IndexPair> lower_pairs;
  std::vector<IndexPair> upper_pairs;
};

Bounds range_bounds(const Roster& roster, const SeatVector& y) {
  const std::size_t n = roster.size();
  if (y.size() != n) throw DomainError("seat vector does not match the roster");

  std::vector<double> lp(n), ly(n), lym1(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] < 1)
      throw DomainError("not an upward apportionment: state " + std::to_string(i) +
                        " has no seat");
    lp[i] = std::log(static_cast<double>(roster[i].population));
    ly[i] = std::log(static_cast<double>(y[i]));
    lym1[i] = y[i] >= 2 ? std::log(static_cast<double>(y[i] - 1)) : 0.0;
  }

  std::vector<std::pair<double, IndexPair>> upper_cands, lower_cands;
  for (std::size_t a = 0; a + 1 < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (roster[a].population == roster[b].population) {
        // Equal weights at every exponent force equal quotients.
        if (y[a] != y[b])
          throw DomainError("states " + std::to_string(a) + " and " + std::to_string(b) +
                            " have equal population but different seats");
        continue;
      }
      if (y[b] >= 2)
        upper_cands.push_back({(ly[a] - lym1[b]) / (lp[a] - lp[b]), {a, b}});
      if (y[a] >= 2)
        lower_cands.push_back({(ly[b] - lym1[a]) / (lp[b] - lp[a]), {b, a}});
    }
  }

  Bounds out;
  if (!upper_cands.empty()) {
    out.upper = std::min_element(upper_cands.begin(), upper_cands.end())->first;
    for (const auto& [e, pair] : upper_cands)
      if (close(e, out.upper)) out.upper_pairs.push_back(pair);
  }
  if (!lower_cands.empty()) {
    out.lower = std::max_element(lower_cands.begin(), lower_cands.end())->first;
    for (const auto& [e, pair] : lower_cands)
      if (close(e, out.lower)) out.lower_pairs.push_back(pair);
  }
  return out;
}

ExponentRange to_range(const Bounds& b, const SeatVector& y) {
  ExponentRange r;
  r.lower = b.lower;
  r.upper = b.upper;
  r.vector = y;
  if (!b.upper_pairs.empty()) r.boundary_tie = b.upper_pairs.front();
  return r;
}

SeatVector transfer(const SeatVector& y, std::size_t gain, std::size_t lose) {
  auto s = y.seats();
  s[gain] += 1;
  s[lose] -= 1;
  return SeatVector(std::move(s));
}

struct WalkState {
  SeatVector y;
  Bounds bounds;
};

std::string pair_list(const std::vector<IndexPair>& pairs) {
  std::string out;
  for (const auto& [i, j] : pairs)
    out += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
  return out;
}

// Crosses the boundary in one direction. A crossing is legitimate only
// when exactly one tied pair's transfer yields a vector whose range
// actually extends past the boundary; anything else is reported.
std::optional<WalkState> step(const Roster& roster, const WalkState& cur, bool upward) {
  const double boundary = upward ? cur.bounds.upper : cur.bounds.lower;
  if (upward && std::isinf(boundary)) return std::nullopt;
  if (!upward && !(boundary > 0.0)) return std::nullopt;

  const auto& pairs = upward ? cur.bounds.upper_pairs : cur.bounds.lower_pairs;
  std::vector<WalkState> valid;
  for (const auto& [gain, lose] : pairs) {
    WalkState next{transfer(cur.y, gain, lose), {}};
    next.bounds = range_bounds(roster, next.y);
    const bool extends = upward ? next.bounds.upper > boundary + tie_slack(boundary)
                                : next.bounds.lower < boundary - tie_slack(boundary);
    if (extends) valid.push_back(std::move(next));
  }
  if (valid.size() != 1)
    throw AmbiguousTransferError(
        "no unique seat transfer at exponent-range boundary " + std::to_string(boundary) +
            "; tied pairs:" + pair_list(pairs),
        pairs);
  return std::move(valid.front());
}

bool same_range(const WalkState& a, const WalkState& b) { return a.y == b.y; }

}  // namespace

double critical_exponent(std::int64_t p_i, std::int64_t p_j, int y_i, int y_j) {
  if (p_i == p_j) throw DomainError("equal populations admit no finite critical exponent");
  if (p_i < 1 || p_j < 1) throw DomainError("populations must be positive");
  if (y_i < 1) throw DomainError("critical exponent needs y_i >= 1");
  if (y_j < 2) throw DomainError("critical exponent needs y_j >= 2");
  return (std::log(static_cast<double>(y_i)) - std::log(static_cast<double>(y_j - 1))) /
         (std::log(static_cast<double>(p_i)) - std::log(static_cast<double>(p_j)));
}

ExponentRange exponent_range(const Roster& roster, const SeatVector& vector) {
  Bounds b = range_bounds(roster, vector);
  if (!(b.lower < b.upper) || !(b.upper > 0.0))
    throw DomainError("seat vector is not generated by any positive exponent");
  return to_range(b, vector);
}

double nice_exponent(const ExponentRange& range) {
  if (!(range.lower < range.upper)) throw DomainError("invalid exponent range");
  const bool bottom = !(range.lower > 0.0);
  const bool top = std::isinf(range.upper);
  if (bottom && top) return 1.0;  // vector constant in the exponent
  if (top) return range.lower;    // half-open above: report the closed boundary
  if (bottom) return range.upper;
  auto v = nicest_decimal(range.lower, range.upper, true, true);
  return v ? *v : 0.5 * (range.lower + range.upper);
}

double seat_bias_largest(int n) {
  if (n < 1) throw DomainError("need at least one state");
  double harmonic = 0.0;
  for (int k = 1; k <= n; ++k) harmonic += 1.0 / k;
  return -0.5 * (harmonic - 1.0);
}

double init_exponent(const Roster& roster, int seats, int target, bool bias_corrected) {
  const std::size_t n = roster.size();
  if (n < 2) throw DomainError("initialization needs at least two states");
  if (target < 1 || target >= seats)
    throw DomainError("target must satisfy 1 <= target < seats");

  std::vector<double> lp(n);
  for (std::size_t i = 0; i < n; ++i)
    lp[i] = std::log(static_cast<double>(roster[i].population));

  const double goal = target - (bias_corrected ? seat_bias_largest(static_cast<int>(n)) : 0.0);
  // Ideal share of the largest state; increasing in E because lp[0] is maximal.
  auto share = [&](double e) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += std::exp(e * (lp[i] - lp[0]));
    return seats / sum;
  };

  double lo = 0.001, hi = 40.0;
  const double f_lo = share(lo) - goal;
  const double f_hi = share(hi) - goal;
  const double f_tol = 1e-9 * seats;
  if (std::fabs(f_lo) <= f_tol && std::fabs(f_hi) <= f_tol) return 0.5 * (lo + hi);
  if (f_lo > 0.0 || f_hi < 0.0)
    throw DomainError("target share unattainable within the exponent bracket");
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (share(mid) - goal < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SolverTrace solve_target(const Roster& roster, int seats, int target) {
  const std::size_t n = roster.size();
  if (target < 1) throw DomainError("target must be at least 1");
  if (seats < static_cast<int>(n))
    throw DomainError("upward rounding needs at least one seat per state");

  SolverTrace trace;

  if (n == 1) {
    if (seats != target)
      throw DomainError("single state always takes all " + std::to_string(seats) + " seats");
    SeatVector y(std::vector<int>{seats});
    ExponentRange r{-kInf, kInf, y, std::nullopt};
    trace.init_exponent = 1.0;
    trace.steps.push_back({1.0, r, seats});
    trace.solutions.push_back(
        {r, 1.0, 1.0, divisor_interval(log_weights(roster, 1.0), y, RoundingRule::Upward)});
    return trace;
  }

  double e0 = init_exponent(roster, seats, target, /*bias_corrected=*/true);
  SeatVector y0;
  try {
    y0 = apportion(log_weights(roster, e0), seats, RoundingRule::Upward);
  } catch (const TieError&) {
    // The initialization landed on a range boundary; nudge off it.
    e0 *= 1.0 + 1e-7;
    y0 = apportion(log_weights(roster, e0), seats, RoundingRule::Upward);
  }

  WalkState cur{y0, range_bounds(roster, y0)};
  std::vector<WalkState> visited{cur};
  long long guard = 4LL * seats * static_cast<long long>(n) + 64;
  auto count_down = [&guard] {
    if (--guard < 0) throw Error("internal: solver walk did not terminate");
  };

  while (cur.y[0] != target) {
    auto next = step(roster, cur, /*upward=*/cur.y[0] < target);
    if (!next)
      throw DomainError("no exponent allocates " + std::to_string(target) +
                        " seats to the largest state");
    cur = std::move(*next);
    visited.push_back(cur);
    count_down();
  }

  std::vector<WalkState> sols{cur};
  for (bool upward : {false, true}) {
    WalkState probe = upward ? sols.back() : sols.front();
    for (;;) {
      auto next = step(roster, probe, upward);
      if (!next) break;
      probe = std::move(*next);
      if (std::none_of(visited.begin(), visited.end(),
                       [&](const WalkState& v) { return same_range(v, probe); }))
        visited.push_back(probe);
      if (probe.y[0] != target) break;
      sols.insert(upward ? sols.end() : sols.begin(), probe);
      count_down();
    }
  }

  trace.init_exponent = e0;
  std::sort(visited.begin(), visited.end(),
            [](const WalkState& a, const WalkState& b) { return a.bounds.lower < b.bounds.lower; });
  for (const auto& v : visited) {
    ExponentRange r = to_range(v.bounds, v.y);
    const double rep = v.y == y0 ? e0 : nice_exponent(r);
    trace.steps.push_back({rep, std::move(r), v.y[0]});
  }

  for (const auto& s : sols) {
    SolverSolution sol;
    sol.range = to_range(s.bounds, s.y);
    sol.nice_exponent = nice_exponent(sol.range);
    // The divisor interval degenerates at an exact boundary, so extreme
    // ranges get an interior exponent for the divisor computation.
    double dexp = sol.nice_exponent;
    const bool bottom = !(sol.range.lower > 0.0);
    const bool top = std::isinf(sol.range.upper);
    if (bottom && top) dexp = 1.0;
    else if (top) dexp = sol.range.lower * 1.5;
    else if (bottom) dexp = 0.5 * sol.range.upper;
    else if (!(dexp > sol.range.lower && dexp < sol.range.upper))
      dexp = 0.5 * (sol.range.lower + sol.range.upper);
    sol.divisor_exponent = dexp;
    sol.divisor = divisor_interval(log_weights(roster, dexp), s.y, RoundingRule::Upward);
    trace.solutions.push_back(std::move(sol));
  }
  return trace;
}

}  // namespace camcom
