#include "camcom/divisor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "camcom/decimal.hpp"

namespace camcom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double plain_signpost(RoundingRule rule, long long k) {
  switch (rule) {
    case RoundingRule::Upward: return static_cast<double>(k) - 1.0;
    case RoundingRule::Standard: return static_cast<double>(k) - 0.5;
    case RoundingRule::Downward: return static_cast<double>(k);
  }
  return 0.0;
}

// Log-domain priorities are compared by absolute difference, which is
// a relative comparison of the underlying weights.
bool close(double a, double b) { return std::fabs(a - b) <= kTieTolerance; }

struct Candidate {
  double priority;
  std::size_t index;
};

struct CandidateLess {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.priority != b.priority) return a.priority < b.priority;
    return a.index > b.index;  // deterministic pop order among exact ties
  }
};

// Highest-averages allocation with signposts shifted by `base`.
// Seats whose shifted signpost is <= 0 are free; the rest are awarded
// greedily by log-domain priority. A tie matters only when the budget
// runs out inside a group of equal priorities.
SeatVector allocate(std::span<const LogWeight> weights, int seats, RoundingRule rule,
                    double base) {
  const std::size_t n = weights.size();
  if (n == 0) throw DomainError("cannot apportion among zero states");
  if (seats < 0) throw DomainError("seat count must be nonnegative");

  long long free_seats = 0;
  while (plain_signpost(rule, free_seats + 1) - base <= 0.0) ++free_seats;

  if (static_cast<long long>(seats) < free_seats * static_cast<long long>(n)) {
    if (rule == RoundingRule::Upward && base == 0.0)
      throw DomainError("upward rounding needs at least one seat per state (" +
                        std::to_string(seats) + " seats for " + std::to_string(n) + " states)");
    throw DomainError("house of " + std::to_string(seats) + " seats cannot cover " +
                      std::to_string(free_seats) + " guaranteed seats for each of " +
                      std::to_string(n) + " states");
  }

  std::vector<int> counts(n, static_cast<int>(free_seats));
  long long remaining = seats - free_seats * static_cast<long long>(n);
  if (remaining == 0) return SeatVector(std::move(counts));

  auto priority = [&](std::size_t i, int next_count) {
    return weights[i].log_value - std::log(plain_signpost(rule, next_count + 1) - base);
  };

  std::vector<Candidate> heap;
  heap.reserve(n);
  for (std::size_t i = 0; i < n; ++i) heap.push_back({priority(i, counts[i]), i});
  std::make_heap(heap.begin(), heap.end(), CandidateLess{});

  std::vector<Candidate> awarded;
  awarded.reserve(static_cast<std::size_t>(remaining));
  for (long long t = 0; t < remaining; ++t) {
    std::pop_heap(heap.begin(), heap.end(), CandidateLess{});
    Candidate top = heap.back();
    heap.pop_back();
    awarded.push_back(top);
    counts[top.index] += 1;
    heap.push_back({priority(top.index, counts[top.index]), top.index});
    std::push_heap(heap.begin(), heap.end(), CandidateLess{});
  }

  const double last = awarded.back().priority;
  const double next_best =
      std::max_element(heap.begin(), heap.end(), CandidateLess{})->priority;
  if (close(last, next_best)) {
    std::vector<std::size_t> tied;
    for (auto it = awarded.rbegin(); it != awarded.rend() && close(it->priority, last); ++it)
      tied.push_back(it->index);
    for (const Candidate& c : heap)
      if (close(c.priority, last)) tied.push_back(c.index);
    std::sort(tied.begin(), tied.end());
    tied.erase(std::unique(tied.begin(), tied.end()), tied.end());
    std::string msg = "tie at the final seat between states";
    for (std::size_t i : tied) msg += " " + std::to_string(i);
    throw TieError(msg, std::move(tied));
  }

  return SeatVector(std::move(counts));
}

}  // namespace

std::vector<LogWeight> log_weights(const Roster& roster, double exponent) {
  if (!(exponent > 0.0)) throw DomainError("exponent must be positive");
  std::vector<LogWeight> out;
  out.reserve(roster.size());
  for (const auto& s : roster.states())
    out.push_back({exponent * std::log(static_cast<double>(s.population))});
  return out;
}

double weight_value(LogWeight w) { return std::exp(w.log_value); }

SeatVector apportion(std::span<const LogWeight> weights, int seats, RoundingRule rule) {
  return allocate(weights, seats, rule, 0.0);
}

SeatVector composite(std::span<const LogWeight> weights, int house_size, double base,
                     RoundingRule rule) {
  if (base < 0.0) throw DomainError("base seats must be nonnegative");
  return allocate(weights, house_size, rule, base);
}

DivisorInterval divisor_interval(std::span<const LogWeight> weights, const SeatVector& vector,
                                 RoundingRule rule) {
  const std::size_t n = weights.size();
  if (vector.size() != n) throw DomainError("seat vector does not match the weights");

  // State i holds y_i seats exactly when w_i/D clears signpost(y_i) but
  // not signpost(y_i + 1); eliminating D per state gives the bounds.
  double log_min = -kInf, log_max = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    const int y = vector[i];
    if (y < 0 || (rule == RoundingRule::Upward && y == 0))
      throw DomainError("seat vector is not a valid apportionment under this rule");
    const double upper_post = plain_signpost(rule, y + 1);
    log_min = std::max(log_min, weights[i].log_value - std::log(upper_post));
    const double lower_post = plain_signpost(rule, y);
    if (lower_post > 0.0)
      log_max = std::min(log_max, weights[i].log_value - std::log(lower_post));
  }

  if (!(log_min < log_max))
    throw DomainError("no divisor reproduces this seat vector from these weights");

  DivisorInterval out;
  out.d_min = std::exp(log_min);
  out.d_max = std::isinf(log_max) ? kInf : std::exp(log_max);
  const bool lo_closed = rule == RoundingRule::Upward;
  auto nice = nicest_decimal(out.d_min, out.d_max, lo_closed, !lo_closed);
  out.nice = nice ? *nice : 0.5 * (out.d_min + out.d_max);
  return out;
}

}  // namespace camcom
