#include "tetra/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace tetra {

namespace {

// ---------------------------------------------------------------------------
// Exact polynomial layer. Coefficients ascending, over Rational; the zero
// polynomial is the empty vector. Degrees never exceed 4 here.
// ---------------------------------------------------------------------------

using Poly = std::vector<Rational>;

Poly trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * p[i]);
  return trim(std::move(d));
}

Poly monic(Poly p) {
  p = trim(std::move(p));
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
  if (den.empty()) throw std::logic_error("polynomial division by zero");
  Poly quot(num.size(), Rational(0));
  while (degree(num) >= degree(den)) {
    int shift = degree(num) - degree(den);
    Rational factor = num.back() / den.back();
    quot[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) num[i + shift] -= factor * den[i];
    num = trim(std::move(num));
  }
  return {trim(std::move(quot)), std::move(num)};
}

Poly exact_div(const Poly& num, const Poly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.empty()) throw std::logic_error("polynomial division expected to be exact");
  return q;
}

Poly gcd_monic(Poly u, Poly v) {
  u = monic(std::move(u));
  v = monic(std::move(v));
  while (!v.empty()) {
    auto [q, r] = divmod(u, v);
    (void)q;
    u = std::move(v);
    v = monic(std::move(r));
  }
  return u;
}

/// Distinct real roots of a square-free polynomial, by Sturm's theorem.
int sturm_real_count(const Poly& f) {
  std::vector<Poly> chain{monic(f), monic(derivative(f))};
  while (degree(chain.back()) > 0) {
    auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
    (void)q;
    if (r.empty()) throw std::logic_error("Sturm chain on a non-square-free polynomial");
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  auto variations = [&](bool at_plus_infinity) {
    int count = 0;
    int prev = 0;
    for (const Poly& p : chain) {
      int s = p.back().sign();
      if (!at_plus_infinity && degree(p) % 2 == 1) s = -s;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return variations(false) - variations(true);
}

/// One square-free factor of the quartic and the shared multiplicity of its
/// roots. Factors are monic, pairwise coprime, and multiply (with powers)
/// back to the quartic.
struct SquareFreeFactor {
  Poly f;
  int multiplicity;
};

std::vector<SquareFreeFactor> square_free_structure(const Poly& p) {
  Poly g = gcd_monic(p, derivative(p));
  switch (degree(g)) {
    case 0:
      return {{p, 1}};
    case 1: {
      Poly g2 = exact_div(exact_div(p, g), g);
      return {{g2, 1}, {g, 2}};  // two simple roots + one double
    }
    case 2: {
      Poly h = gcd_monic(g, derivative(g));
      if (degree(h) == 0) return {{g, 2}};  // two distinct double roots
      Poly rest = exact_div(exact_div(exact_div(p, h), h), h);
      return {{rest, 1}, {h, 3}};  // simple + triple
    }
    case 3: {
      // Quadruple root; it is the mean of the roots, -coeff(3)/4.
      Poly lin{p[3] / Rational(4), Rational(1)};
      Poly rest = p;
      for (int i = 0; i < 4; ++i) rest = exact_div(rest, lin);
      if (degree(rest) != 0) throw std::logic_error("expected a quadruple root");
      return {{lin, 4}};
    }
    default:
      throw std::logic_error("unexpected gcd degree for a quartic");
  }
}

// ---------------------------------------------------------------------------
// Numeric layer: closed-form roots in complex doubles + Newton polishing.
// ---------------------------------------------------------------------------

constexpr int kPolishIterations = 3;

std::vector<double> to_doubles(const Poly& p) {
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i].to_double();
  return out;
}

std::vector<double> differentiate(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(static_cast<double>(i) * c[i]);
  return d;
}

Complex horner(const std::vector<double>& c, Complex z) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex polish(const std::vector<double>& c, const std::vector<double>& dc, Complex z) {
  for (int i = 0; i < kPolishIterations; ++i) {
    Complex f = horner(c, z);
    Complex fp = horner(dc, z);
    if (!finite(f) || !finite(fp)) throw SolverError(ErrorKind::NonFiniteNumeric, "root polishing diverged");
    if (std::abs(fp) < 1e-290) break;
    z -= f / fp;
    if (!finite(z)) throw SolverError(ErrorKind::NonFiniteNumeric, "root polishing diverged");
  }
  return z;
}

double polish_real(const std::vector<double>& c, const std::vector<double>& dc, double x) {
  for (int i = 0; i < kPolishIterations; ++i) {
    double f = horner(c, x);
    double fp = horner(dc, x);
    if (!std::isfinite(f) || !std::isfinite(fp)) throw SolverError(ErrorKind::NonFiniteNumeric, "root polishing diverged");
    if (std::abs(fp) < 1e-290) break;
    x -= f / fp;
    if (!std::isfinite(x)) throw SolverError(ErrorKind::NonFiniteNumeric, "root polishing diverged");
  }
  return x;
}

/// Largest real root of t^3 + a2 t^2 + a1 t + a0.
double cubic_largest_real_root(double a2, double a1, double a0) {
  double p = a1 - a2 * a2 / 3.0;
  double q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
  double disc = q * q / 4.0 + p * p * p / 27.0;
  double t;
  if (disc > 0.0) {
    double s = std::sqrt(disc);
    t = std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s);
  } else {
    double m = 2.0 * std::sqrt(std::max(0.0, -p / 3.0));
    if (m == 0.0) {
      t = 0.0;
    } else {
      double cosarg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
      t = m * std::cos(std::acos(cosarg) / 3.0);
    }
  }
  double root = t - a2 / 3.0;
  std::vector<double> c{a0, a1, a2, 1.0};
  return polish_real(c, differentiate(c), root);
}

/// Both roots of y^2 + b y + c with complex b, c.
std::pair<Complex, Complex> complex_quadratic(Complex b, Complex c) {
  Complex s = std::sqrt(b * b - 4.0 * c);
  // Pick the sign that avoids cancellation in -b -/+ s.
  Complex big = (std::norm(b + s) >= std::norm(b - s)) ? -(b + s) * 0.5 : -(b - s) * 0.5;
  if (big == Complex(0.0)) return {Complex(0.0), Complex(0.0)};
  return {big, c / big};
}

/// Closed-form roots of z^4 + A z^3 + B z^2 + C z + D: depressed quartic and
/// resolvent cubic, split into two quadratics.
std::array<Complex, 4> ferrari(double A, double B, double C, double D) {
  double p = B - 3.0 * A * A / 8.0;
  double q = C - A * B / 2.0 + A * A * A / 8.0;
  double r = D - A * C / 4.0 + A * A * B / 16.0 - 3.0 * A * A * A * A / 256.0;

  double scale = std::max({1.0, std::sqrt(std::abs(p)), std::cbrt(std::abs(q)),
                           std::sqrt(std::sqrt(std::abs(r)))});
  std::array<Complex, 4> ys;
  if (std::abs(q) <= 1e-13 * scale * scale * scale) {
    auto [w1, w2] = complex_quadratic(Complex(p), Complex(r));
    Complex s1 = std::sqrt(w1);
    Complex s2 = std::sqrt(w2);
    ys = {s1, -s1, s2, -s2};
  } else {
    // Resolvent: z^3 + 2p z^2 + (p^2 - 4r) z - q^2, positive at its largest
    // real root since the value at 0 is -q^2 < 0.
    double z0 = cubic_largest_real_root(2.0 * p, p * p - 4.0 * r, -q * q);
    Complex s = std::sqrt(Complex(z0));
    Complex u = (Complex(p + z0) - q / s) * 0.5;
    Complex v = (Complex(p + z0) + q / s) * 0.5;
    auto [y1, y2] = complex_quadratic(s, u);
    auto [y3, y4] = complex_quadratic(-s, v);
    ys = {y1, y2, y3, y4};
  }
  double shift = A / 4.0;
  for (auto& y : ys) y -= shift;
  return ys;
}

// ---------------------------------------------------------------------------
// Classification pipeline.
// ---------------------------------------------------------------------------

struct Flat {
  Complex value;
  int group;  // index of the distinct root this copy belongs to
};

std::vector<std::vector<int>> partition_by_distance(const std::vector<Flat>& flat, double tol) {
  std::vector<int> parent(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < flat.size(); ++i)
    for (std::size_t j = i + 1; j < flat.size(); ++j)
      if (std::abs(flat[i].value - flat[j].value) <= tol) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
  std::vector<std::vector<int>> parts;
  std::vector<int> root_of(flat.size(), -1);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (root_of[r] == -1) {
      root_of[r] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[root_of[r]].push_back(static_cast<int>(i));
  }
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

std::vector<std::vector<int>> partition_by_group(const std::vector<Flat>& flat) {
  std::vector<std::vector<int>> parts;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    int g = flat[i].group;
    if (g >= static_cast<int>(parts.size())) parts.resize(g + 1);
    parts[g].push_back(static_cast<int>(i));
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

[[noreturn]] void ambiguous(const std::string& what) {
  throw SolverError(ErrorKind::RootClassificationAmbiguous, what);
}

}  // namespace

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::C1: return "C1";
    case CaseTag::C2: return "C2";
    case CaseTag::C3: return "C3";
    case CaseTag::C4: return "C4";
    case CaseTag::C5: return "C5";
    case CaseTag::C6: return "C6";
    case CaseTag::C7: return "C7";
    case CaseTag::C8: return "C8";
    case CaseTag::C9: return "C9";
  }
  return "?";
}

std::array<Complex, 4> RootClassification::flat() const {
  std::array<Complex, 4> out{};
  std::size_t k = 0;
  for (const auto& g : roots)
    for (int i = 0; i < g.multiplicity; ++i) out[k++] = g.value;
  return out;
}

std::vector<RootGroup> RootClassification::real_groups() const {
  std::vector<RootGroup> out;
  for (const auto& g : roots)
    if (g.is_real) out.push_back(g);
  return out;
}

std::vector<RootGroup> RootClassification::pair_representatives() const {
  std::vector<RootGroup> out;
  for (const auto& g : roots)
    if (!g.is_real && g.value.imag() > 0.0) out.push_back(g);
  return out;
}

RootClassification solve_characteristic(const Params& params, double cluster_tolerance) {
  if (!(cluster_tolerance > 0.0) || cluster_tolerance >= 1.0)
    throw std::invalid_argument("cluster tolerance must lie in (0, 1)");

  // p(z) = z^4 - a z^3 - b z^2 - c z - d, exact coefficients.
  Poly p{-params.d, -params.c, -params.b, -params.a, Rational(1)};
  std::vector<double> pd = to_doubles(p);
  for (double c : pd)
    if (!std::isfinite(c))
      throw SolverError(ErrorKind::NonFiniteNumeric, "coefficients overflow double range");

  // Derivative ladder pd, p', p'', p''' for multiplicity-aware polishing.
  std::vector<std::vector<double>> ladder{pd};
  for (int i = 0; i < 3; ++i) ladder.push_back(differentiate(ladder.back()));

  const auto structure = square_free_structure(p);

  std::vector<RootGroup> reals;
  std::vector<RootGroup> pairs;  // positive-imaginary representatives
  for (const auto& [f, mult] : structure) {
    const auto& target = ladder[mult - 1];
    const auto target_d = differentiate(target);
    switch (degree(f)) {
      case 1: {
        // Root is an exact rational; no polishing needed.
        double r = (-f[0] / f[1]).to_double();
        reals.push_back({Complex(r, 0.0), mult, true});
        break;
      }
      case 2: {
        Rational b1 = f[1];
        Rational b0 = f[0];
        Rational disc = b1 * b1 - Rational(4) * b0;
        if (disc.sign() > 0) {
          double s = std::sqrt(disc.to_double());
          double nb = -b1.to_double();
          double r1 = (nb + (nb >= 0 ? s : -s)) / 2.0;
          // r1 is never 0: a zero root of any factor would force d = 0.
          double r2 = b0.to_double() / r1;
          for (double r : {r1, r2})
            reals.push_back({Complex(polish_real(target, target_d, r), 0.0), mult, true});
        } else {
          // disc < 0: conjugate pair; disc == 0 cannot happen, f is square-free.
          Complex z(-b1.to_double() / 2.0, std::sqrt(-disc.to_double()) / 2.0);
          z = polish(target, target_d, z);
          pairs.push_back({Complex(z.real(), std::abs(z.imag())), mult, false});
        }
        break;
      }
      case 4: {
        auto raw = ferrari(pd[3], pd[2], pd[1], pd[0]);
        std::array<Complex, 4> roots{};
        for (int i = 0; i < 4; ++i) roots[i] = polish(ladder[0], ladder[1], raw[i]);
        int real_count = sturm_real_count(f);
        std::sort(roots.begin(), roots.end(),
                  [](Complex l, Complex r) { return std::abs(l.imag()) < std::abs(r.imag()); });
        for (int i = 0; i < real_count; ++i) {
          Complex z = roots[i];
          if (std::abs(z.imag()) > cluster_tolerance * (1.0 + std::abs(z.real())))
            ambiguous("numeric root contradicts the exact real-root count");
          double r = polish_real(ladder[0], ladder[1], z.real());
          reals.push_back({Complex(r, 0.0), 1, true});
        }
        std::vector<Complex> rest(roots.begin() + real_count, roots.end());
        while (!rest.empty()) {
          Complex z = rest.back();
          rest.pop_back();
          if (rest.empty()) ambiguous("conjugate pairing failed");
          auto best = std::min_element(rest.begin(), rest.end(), [&](Complex l, Complex r) {
            return std::abs(l - std::conj(z)) < std::abs(r - std::conj(z));
          });
          Complex w = (z + std::conj(*best)) * 0.5;
          rest.erase(best);
          pairs.push_back({Complex(w.real(), std::abs(w.imag())), 1, false});
        }
        break;
      }
      default:
        throw std::logic_error("unexpected square-free factor degree");
    }
  }

  // Every designated pair must be supported numerically as non-real.
  for (const auto& g : pairs)
    if (g.value.imag() <= cluster_tolerance * (1.0 + std::abs(g.value.real())))
      ambiguous("conjugate pair indistinguishable from a real root at this tolerance");

  std::sort(reals.begin(), reals.end(),
            [](const RootGroup& l, const RootGroup& r) { return l.value.real() < r.value.real(); });
  std::sort(pairs.begin(), pairs.end(),
            [](const RootGroup& l, const RootGroup& r) { return l.value.real() < r.value.real(); });

  RootClassification rc;
  rc.cluster_tolerance_used = cluster_tolerance;
  for (const auto& g : reals) rc.roots.push_back(g);
  for (const auto& g : pairs) {
    rc.roots.push_back(g);
    rc.roots.push_back({std::conj(g.value), g.multiplicity, false});
  }

  // Case tag from the exact multiplicity structure and realness pattern.
  int n_real = static_cast<int>(reals.size());
  int n_pairs = static_cast<int>(pairs.size());
  std::vector<int> mults;
  for (const auto& g : reals) mults.push_back(g.multiplicity);
  for (const auto& g : pairs) mults.push_back(g.multiplicity);
  std::sort(mults.begin(), mults.end());
  if (mults == std::vector<int>{4}) {
    rc.case_tag = CaseTag::C1;
  } else if (mults == std::vector<int>{1, 3}) {
    rc.case_tag = CaseTag::C2;
  } else if (mults == std::vector<int>{1, 1, 2}) {
    rc.case_tag = (n_pairs == 0) ? CaseTag::C3 : CaseTag::C6;
  } else if (mults == std::vector<int>{2, 2}) {
    rc.case_tag = (n_pairs == 0) ? CaseTag::C4 : CaseTag::C8;
  } else {
    rc.case_tag = (n_real == 4) ? CaseTag::C5 : (n_real == 2 ? CaseTag::C7 : CaseTag::C9);
  }

  // Residual check against the original quartic.
  for (const auto& g : rc.roots) {
    Complex val = horner(pd, g.value);
    if (!finite(val)) throw SolverError(ErrorKind::NonFiniteNumeric, "non-finite root residual");
    double mag = std::abs(g.value);
    if (std::abs(val) > 1e-10 * std::max(1.0, mag * mag * mag * mag))
      throw SolverError(ErrorKind::NonFiniteNumeric, "root residual above tolerance");
  }

  // Two-tolerance clustering guard: the coarse and fine partitions of the
  // numeric multiset must both agree with the exact structure.
  std::vector<Flat> flat;
  double max_mag = 0.0;
  for (std::size_t gi = 0; gi < rc.roots.size(); ++gi) {
    for (int i = 0; i < rc.roots[gi].multiplicity; ++i)
      flat.push_back({rc.roots[gi].value, static_cast<int>(gi)});
    max_mag = std::max(max_mag, std::abs(rc.roots[gi].value));
  }
  auto exact_parts = partition_by_group(flat);
  double coarse = cluster_tolerance * (1.0 + max_mag);
  double fine = cluster_tolerance * 1e-2 * (1.0 + max_mag);
  if (partition_by_distance(flat, coarse) != exact_parts ||
      partition_by_distance(flat, fine) != exact_parts)
    ambiguous("root clusterings at the coarse and fine tolerances disagree");

  if (vieta_residual(rc, params) > 1e-8)
    throw SolverError(ErrorKind::NonFiniteNumeric, "Vieta residual above tolerance");

  return rc;
}

double vieta_residual(const RootClassification& rc, const Params& params) {
  auto roots = rc.flat();
  Complex e1 = 0.0, e2 = 0.0, e3 = 0.0, e4 = 1.0;
  for (int i = 0; i < 4; ++i) e1 += roots[i];
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) e2 += roots[i] * roots[j];
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) e3 += roots[i] * roots[j] * roots[k];
  for (int i = 0; i < 4; ++i) e4 *= roots[i];

  double res = 0.0;
  auto rel = [](Complex e, double target) {
    return std::abs(e - Complex(target)) / std::max(1.0, std::abs(target));
  };
  res = std::max(res, rel(e1, params.a.to_double()));
  res = std::max(res, rel(e2, -params.b.to_double()));
  res = std::max(res, rel(e3, params.c.to_double()));
  res = std::max(res, rel(e4, -params.d.to_double()));
  return res;
}

}  // namespace tetra
