#pragma once

/**
 * @file quartic.hpp
 * @brief Roots and multiplicity classification of the characteristic quartic
 *
 *     p(z) = z^4 - a*z^3 - b*z^2 - c*z - d.
 *
 * The multiplicity structure and the real/complex pattern are decided in
 * exact rational arithmetic (gcd chains and a Sturm count on the square-free
 * part), so a true multiple root is never mistaken for a near-degenerate
 * cluster. Root values come from the closed-form resolution (depressed
 * quartic + resolvent cubic) in complex doubles, Newton-polished.
 *
 * Inputs whose numeric roots straddle the clustering tolerance are rejected
 * with RootClassificationAmbiguous instead of guessed at; the recurrence
 * path stays available to callers in that case.
 */

#include <array>
#include <vector>

#include "tetra/types.hpp"

namespace tetra {

/// The nine multiplicity/realness shapes of the quartic's root multiset.
enum class CaseTag {
  C1,  ///< one real root of multiplicity four
  C2,  ///< real simple + real triple
  C3,  ///< two real simple + real double
  C4,  ///< two distinct real double roots
  C5,  ///< four distinct real roots
  C6,  ///< real double + complex conjugate pair
  C7,  ///< two distinct real roots + complex conjugate pair
  C8,  ///< doubled complex conjugate pair
  C9,  ///< two distinct complex conjugate pairs
};

const char* to_string(CaseTag tag);

struct RootGroup {
  Complex value;
  int multiplicity = 1;
  bool is_real = false;
};

struct RootClassification {
  /// Distinct roots; conjugate-pair members appear as separate entries.
  /// Multiplicities sum to 4. Real roots first in ascending order, then
  /// conjugate pairs ordered by real part, positive-imaginary member first.
  std::vector<RootGroup> roots;
  CaseTag case_tag = CaseTag::C5;
  double cluster_tolerance_used = 0.0;

  /// The four roots with each value repeated by its multiplicity.
  std::array<Complex, 4> flat() const;

  std::vector<RootGroup> real_groups() const;
  /// Positive-imaginary representative of each conjugate pair.
  std::vector<RootGroup> pair_representatives() const;
};

inline constexpr double kDefaultClusterTolerance = 1e-7;

/// Solves the characteristic quartic of `params` and classifies the roots.
/// Throws SolverError with RootClassificationAmbiguous when the numeric
/// roots cannot support the exact multiplicity structure at the given
/// tolerance, and with NonFiniteNumeric when polishing diverges.
RootClassification solve_characteristic(const Params& params,
                                        double cluster_tolerance = kDefaultClusterTolerance);

/// Largest relative residual of the four elementary-symmetric-function
/// relations e1=a, e2=-b, e3=c, e4=-d over the classified roots.
double vieta_residual(const RootClassification& rc, const Params& params);

}  // namespace tetra
