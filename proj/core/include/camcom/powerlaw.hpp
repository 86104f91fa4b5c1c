#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "camcom/divisor.hpp"
#include "camcom/model.hpp"

namespace camcom {

/// Maximal interval of exponents over which a remaining-seat vector is
/// constant. `lower` can be nonpositive (the bottom-most vector) and
/// `upper` can be +inf (the top-most one); only positive exponents are
/// meaningful. `boundary_tie` is the (gaining, losing) pair whose
/// critical exponent realizes `upper`, absent when upper is infinite.
struct ExponentRange {
  double lower = 0.0;
  double upper = 0.0;
  SeatVector vector;
  std::optional<std::pair<std::size_t, std::size_t>> boundary_tie;
};

/// One visited exponent-range of a solver run.
struct SolverStep {
  double exponent;  // representative exponent of the range
  ExponentRange range;
  int largest_seats;
};

/// A range whose vector gives the largest state exactly the target.
struct SolverSolution {
  ExponentRange range;
  double nice_exponent = 0.0;
  /// Exponent at which `divisor` was computed. Equals nice_exponent
  /// unless the nice value sits on a closed extreme boundary, where the
  /// divisor interval would degenerate.
  double divisor_exponent = 0.0;
  DivisorInterval divisor;
};

/// Steps are kept in ascending exponent order, so consecutive ranges
/// abut and the largest state's seats are nondecreasing along them.
struct SolverTrace {
  double init_exponent = 0.0;
  std::vector<SolverStep> steps;
  std::vector<SolverSolution> solutions;  // ascending by exponent
};

/// The exponent at which the allocations (y_i, y_j) and (y_i+1, y_j-1)
/// are equally justified: log(y_i/(y_j-1)) / log(p_i/p_j).
/// Requires p_i != p_j, y_i >= 1 and y_j >= 2.
double critical_exponent(std::int64_t p_i, std::int64_t p_j, int y_i, int y_j);

/// The exponent-range of an upward remaining-seat vector. Throws
/// DomainError when no positive exponent generates the vector.
ExponentRange exponent_range(const Roster& roster, const SeatVector& vector);

/// A deterministic representative exponent: the fewest-significant-digit
/// decimal in [lower, upper], nearest the midpoint, ties toward the
/// smaller value. The bottom-most and top-most ranges are half-open, so
/// their closed boundary value is reported instead.
double nice_exponent(const ExponentRange& range);

/// Expected deviation of the largest state from its ideal share under
/// upward rounding: -(H_n - 1)/2 with H_n the n-th harmonic number.
double seat_bias_largest(int n);

/// Solves p_1^E / sum(p_i^E) * seats = target for E by bisection on
/// [0.001, 40] to 1e-6. With bias correction the target is first raised
/// by the upward rounding method's bias against the largest state.
double init_exponent(const Roster& roster, int seats, int target, bool bias_corrected);

/// Finds every exponent-range whose vector allocates exactly `target`
/// remaining seats to the largest state. Starts from the bias-corrected
/// initialization and walks adjacent ranges by applying the boundary
/// seat transfer, never re-apportioning at a perturbed exponent.
///
/// Throws AmbiguousTransferError when a boundary admits no unique
/// transfer and DomainError when the target is unattainable.
SolverTrace solve_target(const Roster& roster, int seats, int target);

}  // namespace camcom
