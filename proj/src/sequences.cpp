#include "tetra/sequences.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace tetra {

GeneralizedTetranacci::GeneralizedTetranacci(Params params) : params_(std::move(params)) {
  values_ = {Rational(0), Rational(0), Rational(1), params_.a};
}

void GeneralizedTetranacci::extend_to(std::size_t n) {
  while (values_.size() <= n) {
    std::size_t k = values_.size();
    values_.push_back(params_.a * values_[k - 1] + params_.b * values_[k - 2] +
                      params_.c * values_[k - 3] + params_.d * values_[k - 4]);
  }
}

const Rational& GeneralizedTetranacci::at(std::size_t n) {
  extend_to(n);
  return values_[n];
}

Rational GeneralizedTetranacci::alternating_at(std::size_t n) {
  const Rational& j = at(n);
  return (n % 2 == 0) ? j : -j;
}

PlusMinusOrbits::PlusMinusOrbits(Params params, QuadInit plus_init, QuadInit minus_init)
    : params_(std::move(params)) {
  plus_ = {plus_init.m3, plus_init.m2, plus_init.m1, plus_init.z0};
  minus_ = {minus_init.m3, minus_init.m2, minus_init.m1, minus_init.z0};
}

void PlusMinusOrbits::extend_to(long n) {
  while (static_cast<long>(plus_.size()) - 3 <= n) {
    std::size_t k = plus_.size();
    plus_.push_back(params_.a * plus_[k - 1] + params_.b * plus_[k - 2] +
                    params_.c * plus_[k - 3] + params_.d * plus_[k - 4]);
    minus_.push_back(-params_.a * minus_[k - 1] + params_.b * minus_[k - 2] -
                     params_.c * minus_[k - 3] + params_.d * minus_[k - 4]);
  }
}

const Rational& PlusMinusOrbits::plus_at(long n) {
  if (n < -3) throw std::out_of_range("plus track starts at index -3");
  extend_to(n);
  return plus_[static_cast<std::size_t>(n + 3)];
}

const Rational& PlusMinusOrbits::minus_at(long n) {
  if (n < -3) throw std::out_of_range("minus track starts at index -3");
  extend_to(n);
  return minus_[static_cast<std::size_t>(n + 3)];
}

Rational plus_closed_form(const Params& params, const QuadInit& init, std::size_t n,
                          GeneralizedTetranacci& seq) {
  seq.extend_to(n + 3);
  return params.d * seq.at(n + 1) * init.m3 +
         (params.c * seq.at(n + 1) + params.d * seq.at(n)) * init.m2 +
         (seq.at(n + 3) - params.a * seq.at(n + 2)) * init.m1 + seq.at(n + 2) * init.z0;
}

Rational minus_closed_form(const Params& params, const QuadInit& init, std::size_t n,
                           GeneralizedTetranacci& seq) {
  seq.extend_to(n + 3);
  Rational bracket = params.d * seq.at(n + 1) * init.m3 -
                     (params.c * seq.at(n + 1) + params.d * seq.at(n)) * init.m2 +
                     (seq.at(n + 3) - params.a * seq.at(n + 2)) * init.m1 - seq.at(n + 2) * init.z0;
  return (n % 2 == 0) ? -bracket : bracket;  // (-1)^(n+1)
}

std::optional<long> closed_vs_iterated_mismatch(const Params& params, const QuadInit& plus_init,
                                                const QuadInit& minus_init, long n_max) {
  GeneralizedTetranacci seq(params);
  PlusMinusOrbits orbits(params, plus_init, minus_init);
  for (long n = 0; n <= n_max; ++n) {
    auto un = static_cast<std::size_t>(n);
    if (plus_closed_form(params, plus_init, un, seq) != orbits.plus_at(n)) return n;
    if (minus_closed_form(params, minus_init, un, seq) != orbits.minus_at(n)) return n;
  }
  return std::nullopt;
}

}  // namespace tetra
