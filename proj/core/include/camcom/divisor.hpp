#pragma once

#include <span>
#include <vector>

#include "camcom/model.hpp"

namespace camcom {

/// Signpost families of the three divisor methods. The k-th seat of a
/// state is earned at threshold k-1 (upward), k-1/2 (standard) or k
/// (downward). Upward rounding makes the first seat free, which is what
/// guarantees the base+1 floor in composite methods.
enum class RoundingRule { Upward, Standard, Downward };

/// A positive weight kept as its natural logarithm. Weighted population
/// indices reach ~10^217 for large exponents, so every comparison of
/// weights or weight ratios happens in the log domain.
struct LogWeight {
  double log_value = 0.0;
};

/// Relative tolerance for declaring two log-domain priorities (or two
/// critical exponents) equal.
inline constexpr double kTieTolerance = 1e-12;

/// w_i = population_i ^ exponent, as log weights.
std::vector<LogWeight> log_weights(const Roster& roster, double exponent);

/// exp(w.log_value); may overflow to +inf for extreme exponents.
double weight_value(LogWeight w);

/// The divisors that reproduce a given seat vector from given weights.
/// Upward rounding admits D in [d_min, d_max); standard and downward
/// admit D in (d_min, d_max]. d_max is +inf when no state sits above the
/// first positive signpost.
struct DivisorInterval {
  double d_min = 0.0;
  double d_max = 0.0;
  double nice = 0.0;  // fewest-significant-digits decimal inside the interval
};

/// Divisor-method apportionment of `seats` among the weights.
///
/// The sum of the result is exactly `seats`, and some divisor D
/// reproduces it by rounding w_i / D under `rule`. Scaling all weights
/// by a common factor leaves the result unchanged.
///
/// Throws DomainError when upward rounding cannot give every state a
/// seat (seats < n), and TieError when states compete for the final
/// seat with equal priority.
SeatVector apportion(std::span<const LogWeight> weights, int seats, RoundingRule rule);

/// Recovers the divisor interval of a seat vector. Throws DomainError
/// when no divisor reproduces the vector.
DivisorInterval divisor_interval(std::span<const LogWeight> weights, const SeatVector& vector,
                                 RoundingRule rule);

/// Joint base-plus-proportional apportionment of a whole house:
/// x_i = round_rule(base + w_i / D) with D chosen to exhaust house_size.
/// For integer base this equals base + apportion(weights, remainder).
/// Half-integer bases make the classic rule-shift identity expressible
/// (base b upward, b+1/2 standard and b+1 downward coincide).
SeatVector composite(std::span<const LogWeight> weights, int house_size, double base,
                     RoundingRule rule);

}  // namespace camcom
