#include "tetra/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "tetra/closed_form.hpp"

namespace tetra {

namespace {

void check_horizon(long horizon, long cap) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  if (horizon > cap)
    throw std::invalid_argument("horizon " + std::to_string(horizon) + " exceeds cap " +
                                std::to_string(cap));
}

void track_bits(TrajectoryReport& report, const Rational& value) {
  report.max_numerator_bits = std::max(report.max_numerator_bits, value.num_bits());
  report.max_denominator_bits = std::max(report.max_denominator_bits, value.den_bits());
}

}  // namespace

TrajectoryReport iterate_system(const Params& params, const InitialState& init, long horizon,
                                long horizon_cap) {
  check_horizon(horizon, horizon_cap);
  TrajectoryReport report;
  report.x_values = {init.x_m2, init.x_m1, init.x_0};
  report.y_values = {init.y_m2, init.y_m1, init.y_0};
  for (const auto& v : report.x_values) track_bits(report, v);
  for (const auto& v : report.y_values) track_bits(report, v);

  for (long n = 0; n + 1 <= horizon; ++n) {
    const auto& x = report.x_values;
    const auto& y = report.y_values;
    std::size_t p = static_cast<std::size_t>(n);  // position of orbit index n-2
    // x equation: denominator y[n-2] * x[n-1] * y[n]
    Rational x_den = y[p] * x[p + 1] * y[p + 2];
    Rational y_den = x[p] * y[p + 1] * x[p + 2];
    if (x_den.is_zero()) {
      report.cutoff = CutoffInfo{n + 1, Equation::X};
      break;
    }
    if (y_den.is_zero()) {
      report.cutoff = CutoffInfo{n + 1, Equation::Y};
      break;
    }
    Rational x_next =
        (params.a * y[p] * x[p + 1] * y[p + 2] + params.b * x[p + 1] * y[p] + params.c * y[p] +
         params.d) /
        x_den;
    Rational y_next =
        (params.a * x[p] * y[p + 1] * x[p + 2] + params.b * y[p + 1] * x[p] + params.c * x[p] +
         params.d) /
        y_den;
    track_bits(report, x_next);
    track_bits(report, y_next);
    report.x_values.push_back(std::move(x_next));
    report.y_values.push_back(std::move(y_next));
  }
  return report;
}

TrajectoryReport iterate_single(const Params& params, const Rational& x_m2, const Rational& x_m1,
                                const Rational& x_0, long horizon, long horizon_cap) {
  check_horizon(horizon, horizon_cap);
  for (const Rational* v : {&x_m2, &x_m1, &x_0})
    if (v->is_zero())
      throw SolverError(ErrorKind::ZeroInitialValue, "initial values must be nonzero");

  TrajectoryReport report;
  report.x_values = {x_m2, x_m1, x_0};
  for (const auto& v : report.x_values) track_bits(report, v);

  for (long n = 0; n + 1 <= horizon; ++n) {
    const auto& x = report.x_values;
    std::size_t p = static_cast<std::size_t>(n);
    Rational den = x[p] * x[p + 1] * x[p + 2];
    if (den.is_zero()) {
      report.cutoff = CutoffInfo{n + 1, Equation::X};
      break;
    }
    Rational next =
        (params.a * x[p] * x[p + 1] * x[p + 2] + params.b * x[p + 1] * x[p] + params.c * x[p] +
         params.d) /
        den;
    track_bits(report, next);
    report.x_values.push_back(std::move(next));
  }
  return report;
}

CompareOutcome compare_closed_vs_oracle(const Params& params, const InitialState& init,
                                        long horizon, long horizon_cap) {
  check_horizon(horizon, horizon_cap);
  CompareOutcome out;
  out.report = iterate_system(params, init, horizon, horizon_cap);

  // Predict the cutoff from the forbidden-set scan. A zero of A at odd n
  // (or B at even n) is a zero x value; a zero of B at odd n (or A at even
  // n) is a zero y value. The oracle fails one step later, in the x
  // equation when the y value vanished, else in the y equation.
  ForbiddenReport scan = forbidden_scan(params, init, horizon - 1);
  std::optional<CutoffInfo> predicted;
  if (auto j = scan.first_hit_index()) {
    bool a_hit = false;
    bool b_hit = false;
    for (const auto& hit : scan.hits) {
      if (hit.n != *j) continue;
      (hit.which == Track::A ? a_hit : b_hit) = true;
    }
    bool y_vanishes = (*j % 2 == 1) ? b_hit : a_hit;
    predicted = CutoffInfo{*j + 1, y_vanishes ? Equation::X : Equation::Y};
  }
  out.cutoff_agrees = (predicted == out.report.cutoff);

  ClosedFormSolution sol(params, init, horizon);
  out.values_agree = true;
  for (long n = 1; n <= out.report.last_index(); ++n) {
    Rational cx = sol.x_at(n);
    Rational cy = sol.y_at(n);
    bool ex = (cx == out.report.x_at(n));
    bool ey = (cy == out.report.y_at(n));
    out.report.comparison.push_back({n, Equation::X, std::move(cx), out.report.x_at(n), ex});
    out.report.comparison.push_back({n, Equation::Y, std::move(cy), out.report.y_at(n), ey});
    if (!(ex && ey)) {
      out.values_agree = false;
      if (!out.first_divergence) out.first_divergence = n;
    }
  }
  return out;
}

}  // namespace tetra
