#pragma once

/**
 * @file types.hpp
 * @brief Shared domain types and the error taxonomy.
 *
 * All types here are immutable values; they can be copied and shared across
 * threads freely.
 */

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "tetra/rational.hpp"

namespace tetra {

/// Complex scalar for the characteristic roots and the Binet path.
using Complex = std::complex<double>;

enum class ErrorKind {
  ZeroD,
  ZeroInitialValue,
  ForbiddenSetHit,
  DivisionByZeroAtStep,
  NonFiniteNumeric,
  RootClassificationAmbiguous,
};

/// Which of the two forbidden-set sequences produced a zero.
enum class Track { A, B };

/// Which defining equation of the system failed or is being reported.
enum class Equation { X, Y };

class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind(kind) {}

  static SolverError forbidden(long index, Track which) {
    SolverError e(ErrorKind::ForbiddenSetHit,
                  std::string(which == Track::A ? "A" : "B") + "_" + std::to_string(index) +
                      " = 0 (forbidden set hit)");
    e.index = index;
    e.which = which;
    return e;
  }

  static SolverError division(long index, Equation equation) {
    SolverError e(ErrorKind::DivisionByZeroAtStep,
                  std::string("zero denominator at step ") + std::to_string(index) + " in the " +
                      (equation == Equation::X ? "x" : "y") + " equation");
    e.index = index;
    e.equation = equation;
    return e;
  }

  ErrorKind kind;
  std::optional<long> index;         ///< smallest failing index, when applicable
  std::optional<Track> which;        ///< for ForbiddenSetHit
  std::optional<Equation> equation;  ///< for DivisionByZeroAtStep
};

/// The four coefficients of the system and of its characteristic quartic.
struct Params {
  Params(Rational a, Rational b, Rational c, Rational d)
      : a(std::move(a)), b(std::move(b)), c(std::move(c)), d(std::move(d)) {
    if (this->d.is_zero()) throw SolverError(ErrorKind::ZeroD, "parameter d must be nonzero");
  }

  Rational a, b, c, d;
};

/// The six initial values of the orbit; every one must be nonzero.
struct InitialState {
  InitialState(Rational x_m2, Rational x_m1, Rational x_0,
               Rational y_m2, Rational y_m1, Rational y_0)
      : x_m2(std::move(x_m2)), x_m1(std::move(x_m1)), x_0(std::move(x_0)),
        y_m2(std::move(y_m2)), y_m1(std::move(y_m1)), y_0(std::move(y_0)) {
    for (const Rational* v : {&this->x_m2, &this->x_m1, &this->x_0,
                              &this->y_m2, &this->y_m1, &this->y_0}) {
      if (v->is_zero())
        throw SolverError(ErrorKind::ZeroInitialValue, "initial values must be nonzero");
    }
  }

  /// The single-equation reduction: y-track initialized from the x-track.
  static InitialState symmetric(const Rational& x_m2, const Rational& x_m1, const Rational& x_0) {
    return InitialState(x_m2, x_m1, x_0, x_m2, x_m1, x_0);
  }

  Rational x_m2, x_m1, x_0, y_m2, y_m1, y_0;
};

}  // namespace tetra
