#pragma once

// Test-only oracles. Each works directly on real-valued weights with
// its own bookkeeping, independent of the library's log-domain
// highest-averages engine.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "camcom/divisor.hpp"
#include "camcom/model.hpp"

namespace oracle {

inline double signpost(camcom::RoundingRule rule, int k) {
  switch (rule) {
    case camcom::RoundingRule::Upward: return k - 1.0;
    case camcom::RoundingRule::Standard: return k - 0.5;
    case camcom::RoundingRule::Downward: return static_cast<double>(k);
  }
  return 0.0;
}

inline int seats_at(double weight, double divisor, camcom::RoundingRule rule) {
  const double q = weight / divisor;
  switch (rule) {
    case camcom::RoundingRule::Upward: return static_cast<int>(std::ceil(q));
    case camcom::RoundingRule::Standard: return static_cast<int>(std::floor(q + 0.5));
    case camcom::RoundingRule::Downward: return static_cast<int>(std::floor(q));
  }
  return 0;
}

// Every allocation is constant between consecutive critical divisors
// w_i / s(k); testing one divisor per gap enumerates them all. Returns
// nothing when no gap hits the seat total or several gaps disagree
// (a tie).
inline std::optional<std::vector<int>> divisor_scan(const std::vector<double>& w, int seats,
                                                    camcom::RoundingRule rule) {
  std::vector<double> crits;
  for (double wi : w) {
    for (int k = 1; k <= seats + 1; ++k) {
      const double s = signpost(rule, k);
      if (s > 0.0) crits.push_back(wi / s);
    }
  }
  const double w_max = *std::max_element(w.begin(), w.end());
  crits.push_back(4.0 * w_max);  // beyond the largest critical divisor
  std::sort(crits.begin(), crits.end());
  crits.erase(std::unique(crits.begin(), crits.end()), crits.end());

  std::optional<std::vector<int>> found;
  auto try_divisor = [&](double d) -> bool {  // false on conflict
    long long total = 0;
    std::vector<int> v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) total += v[i] = seats_at(w[i], d, rule);
    if (total != seats) return true;
    if (found && *found != v) return false;
    found = v;
    return true;
  };
  for (std::size_t i = 0; i + 1 < crits.size(); ++i)
    if (!try_divisor(0.5 * (crits[i] + crits[i + 1]))) return std::nullopt;
  if (!try_divisor(2.0 * crits.back())) return std::nullopt;
  return found;
}

// Bisection on the monotone nonincreasing total(D).
inline std::optional<std::vector<int>> divisor_bisect(const std::vector<double>& w, int seats,
                                                      camcom::RoundingRule rule) {
  auto total = [&](double d) {
    long long t = 0;
    for (double wi : w) t += seats_at(wi, d, rule);
    return t;
  };
  const double w_min = *std::min_element(w.begin(), w.end());
  const double w_max = *std::max_element(w.begin(), w.end());
  double lo = w_min / (seats + 2);  // tiny divisor, huge allocation
  double hi = 8.0 * w_max * (seats + 2);
  if (total(lo) < seats || total(hi) > seats) return std::nullopt;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const long long t = total(mid);
    if (t == seats) {
      std::vector<int> v(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) v[i] = seats_at(w[i], mid, rule);
      return v;
    }
    (t > seats ? lo : hi) = mid;
  }
  return std::nullopt;  // the target count sits in a jump: a tie
}

// Seat-by-seat highest averages with linear scans.
inline std::optional<std::vector<int>> naive_highest_averages(const std::vector<double>& w,
                                                              int seats,
                                                              camcom::RoundingRule rule) {
  const std::size_t n = w.size();
  std::vector<int> counts(n, 0);
  int handed = 0;
  for (std::size_t i = 0; i < n; ++i)
    while (signpost(rule, counts[i] + 1) <= 0.0) ++counts[i], ++handed;
  if (handed > seats) return std::nullopt;

  double last = 0.0;
  bool awarded_any = false;
  for (; handed < seats; ++handed) {
    std::size_t best = 0;
    double best_priority = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double priority = w[i] / signpost(rule, counts[i] + 1);
      if (priority > best_priority) {
        best_priority = priority;
        best = i;
      }
    }
    counts[best] += 1;
    last = best_priority;
    awarded_any = true;
  }
  if (awarded_any) {
    double next_best = -1.0;
    for (std::size_t i = 0; i < n; ++i)
      next_best = std::max(next_best, w[i] / signpost(rule, counts[i] + 1));
    if (std::fabs(next_best - last) <= 1e-12 * std::max(1.0, std::fabs(last)))
      return std::nullopt;  // budget ran out inside a tie group
  }
  return counts;
}

inline camcom::Roster random_roster(std::mt19937_64& rng, int n_min, int n_max) {
  std::uniform_int_distribution<int> size_dist(n_min, n_max);
  std::uniform_real_distribution<double> mag(4.0, 8.0);
  const int n = size_dist(rng);
  std::vector<camcom::MemberState> states;
  std::vector<std::int64_t> used;
  for (int i = 0; i < n; ++i) {
    std::int64_t p;
    do {
      p = static_cast<std::int64_t>(std::pow(10.0, mag(rng)));
    } while (std::find(used.begin(), used.end(), p) != used.end());
    used.push_back(p);
    std::string code = "S" + std::to_string(i / 10) + std::to_string(i % 10);
    states.push_back({code, code, p});
  }
  return camcom::Roster(std::move(states));
}

}  // namespace oracle
