#include "tetra/closed_form.hpp"

#include <stdexcept>
#include <utility>

namespace tetra {

namespace {

// Initial data turning the A/B sequences into plus-track instances: the
// theorem's numerators and denominators are the plus closed form evaluated
// on the monomials (1, w, w'w, w''w'w) of the initial values.
QuadInit a_track_init(const InitialState& init) {
  return {Rational(1), init.y_m2, init.x_m1 * init.y_m2, init.y_0 * init.x_m1 * init.y_m2};
}

QuadInit b_track_init(const InitialState& init) {
  return {Rational(1), init.x_m2, init.y_m1 * init.x_m2, init.x_0 * init.y_m1 * init.x_m2};
}

}  // namespace

ClosedFormSolution::ClosedFormSolution(Params params, InitialState init, long horizon)
    : params_(std::move(params)),
      init_(std::move(init)),
      horizon_(horizon),
      seq_(params_),
      a_init_(a_track_init(init_)),
      b_init_(b_track_init(init_)) {
  if (horizon_ < 0) throw std::invalid_argument("horizon must be non-negative");
  seq_.extend_to(static_cast<std::size_t>(horizon_) + 3);
}

Rational ClosedFormSolution::a_term(long n) {
  if (n < 0) throw std::out_of_range("A is defined for n >= 0");
  return plus_closed_form(params_, a_init_, static_cast<std::size_t>(n), seq_);
}

Rational ClosedFormSolution::b_term(long n) {
  if (n < 0) throw std::out_of_range("B is defined for n >= 0");
  return plus_closed_form(params_, b_init_, static_cast<std::size_t>(n), seq_);
}

Rational ClosedFormSolution::x_at(long n) {
  if (n < -2 || n > horizon_) throw std::out_of_range("orbit index out of range");
  if (n == -2) return init_.x_m2;
  if (n == -1) return init_.x_m1;
  if (n == 0) return init_.x_0;
  if (n % 2 == 1) {
    Rational den = a_term(n - 1);
    if (den.is_zero()) throw SolverError::forbidden(n - 1, Track::A);
    return a_term(n) / den;
  }
  Rational den = b_term(n - 1);
  if (den.is_zero()) throw SolverError::forbidden(n - 1, Track::B);
  return b_term(n) / den;
}

Rational ClosedFormSolution::y_at(long n) {
  if (n < -2 || n > horizon_) throw std::out_of_range("orbit index out of range");
  if (n == -2) return init_.y_m2;
  if (n == -1) return init_.y_m1;
  if (n == 0) return init_.y_0;
  if (n % 2 == 1) {
    Rational den = b_term(n - 1);
    if (den.is_zero()) throw SolverError::forbidden(n - 1, Track::B);
    return b_term(n) / den;
  }
  Rational den = a_term(n - 1);
  if (den.is_zero()) throw SolverError::forbidden(n - 1, Track::A);
  return a_term(n) / den;
}

ForbiddenReport forbidden_scan(const Params& params, const InitialState& init, long n_max) {
  ForbiddenReport report;
  if (n_max < 0) return report;
  GeneralizedTetranacci seq(params);
  QuadInit a_init = a_track_init(init);
  QuadInit b_init = b_track_init(init);
  for (long n = 0; n <= n_max; ++n) {
    auto un = static_cast<std::size_t>(n);
    Rational a = plus_closed_form(params, a_init, un, seq);
    Rational b = plus_closed_form(params, b_init, un, seq);
    if (a.is_zero()) report.hits.push_back({n, Track::A});
    if (b.is_zero()) report.hits.push_back({n, Track::B});
    report.a_values.push_back(std::move(a));
    report.b_values.push_back(std::move(b));
  }
  return report;
}

Rational solve_single_equation(const Params& params, const Rational& x_m2, const Rational& x_m1,
                               const Rational& x_0, long n) {
  ClosedFormSolution sol(params, InitialState::symmetric(x_m2, x_m1, x_0), n >= 1 ? n : 1);
  return sol.x_at(n);
}

TetranacciReport tetranacci_report(const InitialState& init, long horizon) {
  Params ones(Rational(1), Rational(1), Rational(1), Rational(1));
  TetranacciReport report;
  report.trajectory = compare_closed_vs_oracle(ones, init, horizon).report;
  GeneralizedTetranacci t(ones);
  for (long n = 0; n <= horizon + 4; ++n)
    report.tetranacci.push_back(t.at(static_cast<std::size_t>(n)));
  return report;
}

LinearizedSolution::LinearizedSolution(Params params, InitialState init, Gauge gauge)
    : params_(std::move(params)), seq_(params_) {
  if (gauge.u_m3.is_zero() || gauge.v_m3.is_zero())
    throw SolverError(ErrorKind::ZeroInitialValue, "gauge values must be nonzero");
  u_head_ = {gauge.u_m3};
  v_head_ = {gauge.v_m3};
  u_head_.push_back(init.x_m2 * v_head_[0]);
  v_head_.push_back(init.y_m2 * u_head_[0]);
  u_head_.push_back(init.x_m1 * v_head_[1]);
  v_head_.push_back(init.y_m1 * u_head_[1]);
  u_head_.push_back(init.x_0 * v_head_[2]);
  v_head_.push_back(init.y_0 * u_head_[2]);
  plus_init_ = {u_head_[0] + v_head_[0], u_head_[1] + v_head_[1], u_head_[2] + v_head_[2],
                u_head_[3] + v_head_[3]};
  minus_init_ = {u_head_[0] - v_head_[0], u_head_[1] - v_head_[1], u_head_[2] - v_head_[2],
                 u_head_[3] - v_head_[3]};
}

Rational LinearizedSolution::u_at(long n) {
  if (n < -3) throw std::out_of_range("u is defined for n >= -3");
  if (n <= 0) return u_head_[static_cast<std::size_t>(n + 3)];
  auto un = static_cast<std::size_t>(n);
  return (plus_closed_form(params_, plus_init_, un, seq_) +
          minus_closed_form(params_, minus_init_, un, seq_)) /
         Rational(2);
}

Rational LinearizedSolution::v_at(long n) {
  if (n < -3) throw std::out_of_range("v is defined for n >= -3");
  if (n <= 0) return v_head_[static_cast<std::size_t>(n + 3)];
  auto un = static_cast<std::size_t>(n);
  return (plus_closed_form(params_, plus_init_, un, seq_) -
          minus_closed_form(params_, minus_init_, un, seq_)) /
         Rational(2);
}

Rational LinearizedSolution::x_at(long n) {
  if (n < -2) throw std::out_of_range("orbit index out of range");
  Rational den = v_at(n - 1);
  if (den.is_zero()) throw SolverError::division(n, Equation::X);
  return u_at(n) / den;
}

Rational LinearizedSolution::y_at(long n) {
  if (n < -2) throw std::out_of_range("orbit index out of range");
  Rational den = u_at(n - 1);
  if (den.is_zero()) throw SolverError::division(n, Equation::Y);
  return v_at(n) / den;
}

}  // namespace tetra
