#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force iteration of the nonlinear system in exact arithmetic.
 *
 * The defining equations are iterated verbatim with exact rationals; this is
 * the ground truth every closed form is certified against. A zero numerator
 * is a legal value and propagates; iteration stops at the first index whose
 * denominator product is zero.
 */

#include <optional>
#include <vector>

#include "tetra/types.hpp"

namespace tetra {

struct CutoffInfo {
  long step = 0;  ///< first orbit index that could not be computed
  Equation equation = Equation::X;
  bool operator==(const CutoffInfo&) const = default;
};

struct TrajectoryReport {
  /// Orbit values; element 0 holds index -2.
  std::vector<Rational> x_values;
  std::vector<Rational> y_values;
  /// Empty when the orbit is complete up to the horizon.
  std::optional<CutoffInfo> cutoff;

  struct ComparisonRow {
    long n = 0;
    Equation track = Equation::X;
    Rational closed_form;
    Rational oracle;
    bool equal = false;
  };
  std::vector<ComparisonRow> comparison;

  std::size_t max_numerator_bits = 0;
  std::size_t max_denominator_bits = 0;

  bool complete() const { return !cutoff.has_value(); }
  long last_index() const { return static_cast<long>(x_values.size()) - 3; }
  const Rational& x_at(long n) const { return x_values.at(static_cast<std::size_t>(n + 2)); }
  const Rational& y_at(long n) const { return y_values.at(static_cast<std::size_t>(n + 2)); }
};

/// Rational bit growth is unbounded; horizons beyond the cap are refused.
inline constexpr long kHorizonCap = 200;

TrajectoryReport iterate_system(const Params& params, const InitialState& init, long horizon,
                                long horizon_cap = kHorizonCap);

/// Single-equation reduction (the y-track mirrors the x-track).
TrajectoryReport iterate_single(const Params& params, const Rational& x_m2, const Rational& x_m1,
                                const Rational& x_0, long horizon, long horizon_cap = kHorizonCap);

struct CompareOutcome {
  TrajectoryReport report;       ///< oracle trajectory with comparison rows filled
  bool values_agree = false;     ///< every defined index matched exactly
  bool cutoff_agrees = false;    ///< forbidden-set prediction matched the oracle cutoff
  std::optional<long> first_divergence;
};

/// Runs the oracle and the closed form side by side.
CompareOutcome compare_closed_vs_oracle(const Params& params, const InitialState& init,
                                        long horizon, long horizon_cap = kHorizonCap);

}  // namespace tetra
