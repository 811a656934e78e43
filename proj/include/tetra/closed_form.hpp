#pragma once

/**
 * @file closed_form.hpp
 * @brief Closed-form orbit values, forbidden-set detection, and the
 *        linearized (u/v) route they are derived from.
 *
 * The orbit closed forms are consecutive ratios of two exact linear
 * sequences A and B: x at odd index 2n+1 is A[2n+1]/A[2n], x at even index
 * 2n+2 is B[2n+2]/B[2n+1], and the y forms swap the roles of A and B. The
 * forbidden set is exactly the zero set of A and B, so every division is
 * guarded by construction. All of this stays in exact rationals; Binet
 * floats never enter here.
 */

#include <vector>

#include "tetra/oracle.hpp"
#include "tetra/sequences.hpp"
#include "tetra/types.hpp"

namespace tetra {

struct ForbiddenHit {
  long n = 0;
  Track which = Track::A;
  bool operator==(const ForbiddenHit&) const = default;
};

struct ForbiddenReport {
  std::vector<ForbiddenHit> hits;
  std::vector<Rational> a_values;  ///< A[0..n_max]
  std::vector<Rational> b_values;  ///< B[0..n_max]

  std::optional<long> first_hit_index() const {
    return hits.empty() ? std::nullopt : std::optional<long>(hits.front().n);
  }
};

class ClosedFormSolution {
 public:
  /// `horizon` is the largest orbit index x_at/y_at will be asked for.
  ClosedFormSolution(Params params, InitialState init, long horizon);

  /// Orbit value at index n in [-2, horizon]; indices -2..0 echo the
  /// initial state. Throws SolverError(ForbiddenSetHit) when the value's
  /// denominator (an A or B term) is zero.
  Rational x_at(long n);
  Rational y_at(long n);

  Rational a_term(long n);  ///< A[n], n >= 0
  Rational b_term(long n);  ///< B[n], n >= 0

  const Params& params() const { return params_; }
  const InitialState& init() const { return init_; }
  long horizon() const { return horizon_; }
  GeneralizedTetranacci& sequence() { return seq_; }

 private:
  Params params_;
  InitialState init_;
  long horizon_;
  GeneralizedTetranacci seq_;
  QuadInit a_init_, b_init_;
};

/// A and B values for n in [0, n_max] with their exact zeros recorded.
ForbiddenReport forbidden_scan(const Params& params, const InitialState& init, long n_max);

/// Closed form of the single (symmetric) equation at index n >= -2.
Rational solve_single_equation(const Params& params, const Rational& x_m2, const Rational& x_m1,
                               const Rational& x_0, long n);

struct TetranacciReport {
  TrajectoryReport trajectory;       ///< oracle vs closed form, comparison filled
  std::vector<Rational> tetranacci;  ///< the T values driving the closed forms
};

/// The a=b=c=d=1 specialization, cross-checked against the oracle.
TetranacciReport tetranacci_report(const InitialState& init, long horizon);

/// Scale freedom in the change of variables x[n] = u[n]/v[n-1],
/// y[n] = v[n]/u[n-1]; any nonzero choice must give the same orbit.
struct Gauge {
  Rational u_m3, v_m3;
};

/// The proof-route solution: reconstructs u and v through the plus/minus
/// tracks and forms the orbit as their ratios. Useful as an independent
/// path to the same values; the orbit must not depend on the gauge.
class LinearizedSolution {
 public:
  LinearizedSolution(Params params, InitialState init, Gauge gauge);

  Rational u_at(long n);  // n >= -3
  Rational v_at(long n);  // n >= -3
  Rational x_at(long n);  // n >= -2; throws DivisionByZeroAtStep on zero v[n-1]
  Rational y_at(long n);  // n >= -2; throws DivisionByZeroAtStep on zero u[n-1]

 private:
  Params params_;
  GeneralizedTetranacci seq_;
  QuadInit plus_init_, minus_init_;
  std::vector<Rational> u_head_, v_head_;  // indices -3..0
};

}  // namespace tetra
