#pragma once

#include <optional>
#include <vector>

#include "camcom/divisor.hpp"
#include "camcom/model.hpp"
#include "camcom/powerlaw.hpp"

namespace camcom {

/// A complete base-plus-proportional composition. Every state holds at
/// least base+1 seats and at most `cap`, and the totals exhaust the
/// house. `quotients` are the unrounded base + w_i/D values at the
/// reported nice divisor; for capped states they exceed the cap.
struct Composition {
  ApportionmentProblem problem;
  SeatVector seats;                   // totals x_i
  std::vector<double> quotients;
  std::vector<std::size_t> capped;    // roster indices held at the cap
  std::optional<double> exponent_used;
  DivisorInterval divisor;            // of the final proportional stage
};

struct DegressivityViolation {
  enum class Kind { SeatOrder, SeatRatio, QuotientRatio };
  std::size_t i = 0;  // larger state
  std::size_t j = 0;  // smaller state
  Kind kind = Kind::SeatOrder;
};

/// Degressive proportionality checked two ways: on the rounded seat
/// totals (p_i > p_j implies x_i >= x_j and p_i/x_i >= p_j/x_j) and on
/// the unrounded quotients (p_i/q_i >= p_j/q_j). Both results are
/// always reported; nothing throws.
struct DegressivityReport {
  bool holds_on_seats = true;
  bool holds_on_quotients = true;
  std::vector<DegressivityViolation> violations;
};

enum class Majorization {
  Equal,
  FirstMajorizedBySecond,
  SecondMajorizedByFirst,
  Incomparable,
};

/// Everything the two-step protocol produces, with the solver trace kept
/// for reporting.
struct PowerVariantResult {
  bool cap_binding = false;
  std::vector<Composition> compositions;  // ascending by exponent when solved
  std::optional<SolverTrace> trace;
};

/// Base seats for everyone, the remainder by upward divisor method, and
/// iterative capping: every state above the cap is fixed at exactly the
/// cap and the freed seats are re-apportioned among the rest until no
/// state exceeds it.
Composition camcom_apportion(const ApportionmentProblem& problem);

/// Two-step protocol: when the plain uncapped composition respects the
/// cap it is returned as-is (exponent 1). Otherwise the population
/// weights are power-downweighted until the largest state lands exactly
/// on the cap, and one composition per solution exponent-range is
/// returned, none of them capped.
std::vector<Composition> power_variant(const ApportionmentProblem& problem);
PowerVariantResult power_variant_detailed(const ApportionmentProblem& problem);

DegressivityReport check_degressive(const Composition& composition);

/// Compares partial sums over the k largest states for every k.
/// Vectors must be aligned to the same roster and have equal totals.
Majorization majorization_compare(const SeatVector& a, const SeatVector& b);

/// Whether the three compositions base-5 upward, base-5.5 standard and
/// base-6 downward coincide on this roster at the given exponent.
bool identity_check(const Roster& roster, int house_size, double exponent = 1.0);

}  // namespace camcom
