#pragma once

#include <optional>
#include <string>

namespace camcom {

/// Rounds x upward (respectively downward) onto the 10^-places grid.
/// Abutting exponent-ranges print without overlap this way: the shared
/// boundary shows as the upper value of one range and the lower value of
/// the next.
double round_up(double x, int places);
double round_down(double x, int places);

/// The decimal with the fewest significant digits inside the interval.
/// Among candidates of that precision the one closest to the midpoint
/// wins, with a final tie going to the smaller value. Open endpoints
/// exclude the bound itself. An interval unbounded above yields the
/// smallest admissible single-digit decimal. Returns nothing only for
/// degenerate input.
std::optional<double> nicest_decimal(double lo, double hi, bool lo_closed, bool hi_closed);

/// Shortest decimal text that round-trips to x ("0.9", "146960", "6.13e+218").
std::string shortest_decimal(double x);

}  // namespace camcom
