#include "tetra/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tetra {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  mpz_class num;
  mpz_class den;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    std::string_view top = rest.substr(0, slash);
    std::string_view bottom = rest.substr(slash + 1);
    if (!all_digits(top) || !all_digits(bottom)) bad(text);
    num = mpz_class(std::string(top), 10);
    den = mpz_class(std::string(bottom), 10);
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    std::string_view whole = rest.substr(0, dot);
    std::string_view frac = rest.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad(text);
    num = mpz_class(std::string(whole) + std::string(frac), 10);
    den = 1;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!all_digits(rest)) bad(text);
    num = mpz_class(std::string(rest), 10);
    den = 1;
  }

  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  mpq_class inv;
  mpq_inv(inv.get_mpq_t(), q_.get_mpq_t());
  return Rational(inv);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace tetra
