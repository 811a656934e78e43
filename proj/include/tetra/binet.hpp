#pragma once

/**
 * @file binet.hpp
 * @brief Closed-form (Binet-style) evaluation of the fundamental sequence.
 *
 * Dispatches on the nine root-multiplicity cases of the characteristic
 * quartic and evaluates the matching closed form in complex arithmetic.
 * The exact recurrence (GeneralizedTetranacci) is the correctness
 * reference; max_divergence_vs measures the gap.
 */

#include <cstddef>

#include "tetra/quartic.hpp"
#include "tetra/sequences.hpp"
#include "tetra/types.hpp"

namespace tetra {

class BinetEvaluator {
 public:
  /// Binds the case roles (which root is simple, double, ...) from the
  /// classification. Throws RootClassificationAmbiguous if a formula
  /// denominator is too small to evaluate, NonFiniteNumeric on overflow.
  BinetEvaluator(const RootClassification& classification, Params params);

  /// Value of the case formula at index n; the imaginary part is a
  /// diagnostic and stays near zero for real parameters.
  Complex eval(std::size_t n) const;

  /// max over n <= n_max of |binet - exact| / max(1, |exact|).
  double max_divergence_vs(GeneralizedTetranacci& seq, std::size_t n_max) const;

  CaseTag case_tag() const { return tag_; }
  const RootClassification& classification() const { return classification_; }

 private:
  RootClassification classification_;
  Params params_;
  CaseTag tag_;
  // Case roles: the meaning of each slot depends on tag_ (see binet.cpp).
  Complex r1_{}, r2_{}, r3_{}, r4_{};
};

}  // namespace tetra
