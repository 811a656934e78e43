#include "tetra/binet.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace tetra {

namespace {

constexpr double kDenominatorFloor = 1e-9;

Complex pow_int(Complex base, std::size_t n) {
  Complex acc = 1.0;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_denominator(Complex value, const char* what) {
  if (std::abs(value) <= kDenominatorFloor)
    throw SolverError(ErrorKind::RootClassificationAmbiguous,
                      std::string("Binet denominator too small: ") + what);
}

// Shape evaluators; the nine cases are these five with roles bound.

/// One root of multiplicity four.
Complex quadruple_shape(Complex a, double n, Complex an) {
  return ((-n + n * n * n) / (6.0 * a * a)) * an;
}

/// Simple root a, triple root b.
Complex triple_shape(Complex a, Complex b, double n, Complex an, Complex bn) {
  Complex d = b - a;
  Complex ca = -a / (d * d * d);
  Complex cb = a / (d * d * d) - n * (a + b) / (2.0 * b * d * d) + n * n / (2.0 * b * d);
  return ca * an + cb * bn;
}

/// Two double roots a, c.
Complex double_double_shape(Complex a, Complex c, double n, Complex an, Complex cn) {
  Complex d = c - a;
  Complex sym = (c + a) / (d * d * d);
  Complex slope = n / (d * d);
  return (sym + slope) * an + (-sym + slope) * cn;
}

/// Simple roots a, b and a double root c.
Complex double_simple_shape(Complex a, Complex b, Complex c, double n, Complex an, Complex bn,
                            Complex cn) {
  Complex ca = -a / ((c - a) * (c - a) * (b - a));
  Complex cb = b / ((c - b) * (c - b) * (b - a));
  Complex cc = (a * b - c * c) / ((c - a) * (c - a) * (c - b) * (c - b)) +
               n / ((c - a) * (c - b));
  return ca * an + cb * bn + cc * cn;
}

/// Four distinct roots.
Complex distinct_shape(Complex a, Complex b, Complex c, Complex d, double n, Complex an,
                       Complex bn, Complex cn, Complex dn) {
  Complex ca = -a / ((d - a) * (c - a) * (b - a));
  Complex cb = b / ((d - b) * (c - b) * (b - a));
  Complex cc = -c / ((d - c) * (c - b) * (c - a));
  Complex cd = d / ((d - c) * (d - b) * (d - a));
  return ca * an + cb * bn + cc * cn + cd * dn;
}

}  // namespace

BinetEvaluator::BinetEvaluator(const RootClassification& classification, Params params)
    : classification_(classification), params_(std::move(params)), tag_(classification.case_tag) {
  auto reals = classification_.real_groups();
  auto pairs = classification_.pair_representatives();

  switch (tag_) {
    case CaseTag::C1:
      r1_ = reals.at(0).value;
      require_denominator(r1_, "quadruple root");
      break;
    case CaseTag::C2: {
      // r1 = simple, r2 = triple.
      bool first_simple = reals.at(0).multiplicity == 1;
      r1_ = reals.at(first_simple ? 0 : 1).value;
      r2_ = reals.at(first_simple ? 1 : 0).value;
      require_denominator(r2_ - r1_, "triple minus simple root");
      require_denominator(r2_, "triple root");
      break;
    }
    case CaseTag::C3: {
      // r1, r2 = simple, r3 = double.
      std::vector<Complex> simple;
      for (const auto& g : reals) {
        if (g.multiplicity == 1)
          simple.push_back(g.value);
        else
          r3_ = g.value;
      }
      r1_ = simple.at(0);
      r2_ = simple.at(1);
      require_denominator(r2_ - r1_, "simple root gap");
      require_denominator(r3_ - r1_, "double minus simple root");
      require_denominator(r3_ - r2_, "double minus simple root");
      break;
    }
    case CaseTag::C4:
      r1_ = reals.at(0).value;
      r2_ = reals.at(1).value;
      require_denominator(r2_ - r1_, "double root gap");
      break;
    case CaseTag::C5: {
      r1_ = reals.at(0).value;
      r2_ = reals.at(1).value;
      r3_ = reals.at(2).value;
      r4_ = reals.at(3).value;
      Complex all[4] = {r1_, r2_, r3_, r4_};
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) require_denominator(all[j] - all[i], "root gap");
      break;
    }
    case CaseTag::C6:
      // r1 = real double, r3 = pair representative.
      r1_ = reals.at(0).value;
      r3_ = pairs.at(0).value;
      require_denominator(r3_ - r1_, "pair minus double root");
      require_denominator(r3_ - std::conj(r3_), "pair spread");
      break;
    case CaseTag::C7:
      r1_ = reals.at(0).value;
      r2_ = reals.at(1).value;
      r3_ = pairs.at(0).value;
      require_denominator(r2_ - r1_, "real root gap");
      require_denominator(r3_ - r1_, "pair minus real root");
      require_denominator(r3_ - r2_, "pair minus real root");
      require_denominator(r3_ - std::conj(r3_), "pair spread");
      break;
    case CaseTag::C8:
      r1_ = pairs.at(0).value;
      require_denominator(r1_ - std::conj(r1_), "pair spread");
      break;
    case CaseTag::C9:
      r1_ = pairs.at(0).value;
      r3_ = pairs.at(1).value;
      require_denominator(r3_ - r1_, "pair gap");
      require_denominator(r3_ - std::conj(r1_), "pair gap");
      require_denominator(r1_ - std::conj(r1_), "pair spread");
      require_denominator(r3_ - std::conj(r3_), "pair spread");
      break;
  }
}

Complex BinetEvaluator::eval(std::size_t n) const {
  double nd = static_cast<double>(n);
  Complex out;
  switch (tag_) {
    case CaseTag::C1:
      out = quadruple_shape(r1_, nd, pow_int(r1_, n));
      break;
    case CaseTag::C2:
      out = triple_shape(r1_, r2_, nd, pow_int(r1_, n), pow_int(r2_, n));
      break;
    case CaseTag::C3:
      out = double_simple_shape(r1_, r2_, r3_, nd, pow_int(r1_, n), pow_int(r2_, n),
                                pow_int(r3_, n));
      break;
    case CaseTag::C4:
      out = double_double_shape(r1_, r2_, nd, pow_int(r1_, n), pow_int(r2_, n));
      break;
    case CaseTag::C5:
      out = distinct_shape(r1_, r2_, r3_, r4_, nd, pow_int(r1_, n), pow_int(r2_, n),
                           pow_int(r3_, n), pow_int(r4_, n));
      break;
    case CaseTag::C6: {
      Complex g = r3_;
      out = double_simple_shape(g, std::conj(g), r1_, nd, pow_int(g, n), pow_int(std::conj(g), n),
                                pow_int(r1_, n));
      break;
    }
    case CaseTag::C7: {
      Complex g = r3_;
      out = distinct_shape(r1_, r2_, g, std::conj(g), nd, pow_int(r1_, n), pow_int(r2_, n),
                           pow_int(g, n), pow_int(std::conj(g), n));
      break;
    }
    case CaseTag::C8:
      out = double_double_shape(r1_, std::conj(r1_), nd, pow_int(r1_, n),
                                pow_int(std::conj(r1_), n));
      break;
    case CaseTag::C9:
      out = distinct_shape(r1_, std::conj(r1_), r3_, std::conj(r3_), nd, pow_int(r1_, n),
                           pow_int(std::conj(r1_), n), pow_int(r3_, n),
                           pow_int(std::conj(r3_), n));
      break;
  }
  if (!finite(out))
    throw SolverError(ErrorKind::NonFiniteNumeric, "Binet value overflow at n=" + std::to_string(n));
  return out;
}

double BinetEvaluator::max_divergence_vs(GeneralizedTetranacci& seq, std::size_t n_max) const {
  double worst = 0.0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    double exact = seq.at(n).to_double();
    if (!std::isfinite(exact))
      throw SolverError(ErrorKind::NonFiniteNumeric, "exact sequence value overflows double");
    double approx = eval(n).real();
    worst = std::max(worst, std::abs(approx - exact) / std::max(1.0, std::abs(exact)));
  }
  return worst;
}

}  // namespace tetra
