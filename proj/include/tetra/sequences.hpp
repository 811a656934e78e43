#pragma once

/**
 * @file sequences.hpp
 * @brief Exact generation of the fundamental linear-recurrence sequences.
 *
 * GeneralizedTetranacci is the fundamental solution J of
 *
 *     J[n+4] = a*J[n+3] + b*J[n+2] + c*J[n+1] + d*J[n],
 *     J[0] = J[1] = 0, J[2] = 1, J[3] = a.
 *
 * With a=b=c=d=1 this is the Tetranacci sequence. Every other sequence in
 * the solver (the auxiliary plus/minus tracks and the orbit closed forms)
 * is expressed through J, so J values are memoized and extended on demand.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "tetra/types.hpp"

namespace tetra {

class GeneralizedTetranacci {
 public:
  explicit GeneralizedTetranacci(Params params);

  /// J[n]; extends the memo table when needed. Single-writer: extension is
  /// not thread-safe, a fully generated sequence is safe to read and share.
  const Rational& at(std::size_t n);

  /// (-1)^n * J[n] — the fundamental solution of the sign-alternated
  /// recurrence w[n+4] = -a*w[n+3] + b*w[n+2] - c*w[n+1] + d*w[n].
  Rational alternating_at(std::size_t n);

  void extend_to(std::size_t n);
  std::size_t generated() const { return values_.size() - 1; }
  const Params& params() const { return params_; }

 private:
  Params params_;
  std::vector<Rational> values_;
};

/// Initial data for a fourth-order track, values at indices -3, -2, -1, 0.
struct QuadInit {
  Rational m3, m2, m1, z0;
};

/// Iterates the two auxiliary recurrences exactly, indexed from -3:
///   plus:  w[n+1] =  a*w[n] + b*w[n-1] + c*w[n-2] + d*w[n-3]
///   minus: w[n+1] = -a*w[n] + b*w[n-1] - c*w[n-2] + d*w[n-3]
class PlusMinusOrbits {
 public:
  PlusMinusOrbits(Params params, QuadInit plus_init, QuadInit minus_init);

  const Rational& plus_at(long n);   // n >= -3
  const Rational& minus_at(long n);  // n >= -3

 private:
  void extend_to(long n);

  Params params_;
  std::vector<Rational> plus_;   // plus_[i] == value at index i-3
  std::vector<Rational> minus_;
};

/// Closed form of the plus track through J:
///   w[n] = d*J[n+1]*w[-3] + (c*J[n+1]+d*J[n])*w[-2]
///        + (J[n+3]-a*J[n+2])*w[-1] + J[n+2]*w[0]
Rational plus_closed_form(const Params& params, const QuadInit& init, std::size_t n,
                          GeneralizedTetranacci& seq);

/// Closed form of the minus track through J:
///   w[n] = (-1)^(n+1) * [ d*J[n+1]*w[-3] - (c*J[n+1]+d*J[n])*w[-2]
///                       + (J[n+3]-a*J[n+2])*w[-1] - J[n+2]*w[0] ]
Rational minus_closed_form(const Params& params, const QuadInit& init, std::size_t n,
                           GeneralizedTetranacci& seq);

/// Iterates both tracks and checks the closed forms for every n in
/// [0, n_max]; returns the first index of exact disagreement, if any.
std::optional<long> closed_vs_iterated_mismatch(const Params& params, const QuadInit& plus_init,
                                                const QuadInit& minus_init, long n_max);

}  // namespace tetra
