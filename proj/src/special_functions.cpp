#include "boostcap/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "boostcap/errors.hpp"

namespace boostcap::sf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) throw DomainError(std::string(who) + ": non-finite argument");
}

// Minimal double-double arithmetic for the hypergeometric series. Only the
// operations the term recurrence needs.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DoubleDouble add(DoubleDouble x, DoubleDouble y) {
  DoubleDouble s = two_sum(x.hi, y.hi);
  DoubleDouble t = two_sum(x.lo, y.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

DoubleDouble mul(DoubleDouble x, double d) {
  const double p = x.hi * d;
  const double e = std::fma(x.hi, d, -p) + x.lo * d;
  return quick_two_sum(p, e);
}

DoubleDouble div(DoubleDouble x, double d) {
  const double q1 = x.hi / d;
  const double p = q1 * d;
  const double pe = std::fma(q1, d, -p);
  DoubleDouble r = two_sum(x.hi, -p);
  r.lo += x.lo - pe;
  const double q2 = (r.hi + r.lo) / d;
  return quick_two_sum(q1, q2);
}

// Arithmetic-geometric mean evaluation for 0 ≤ m < 1 given both m and 1 − m.
EllipticPair agm_elliptic(double m, double mc) {
  double a = 1.0;
  double b = std::sqrt(mc);
  double weight = 0.5;
  double sum = 0.5 * m;
  for (int it = 0; it < 64 && std::abs(a - b) > 4.0 * kEps * a; ++it) {
    const double c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    weight *= 2.0;
    sum += weight * c * c;
  }
  const double K = std::numbers::pi / (a + b);
  return {K, K * (1.0 - sum)};
}

}  // namespace

namespace detail {

double erf_series(double x) {
  // erf(x) = 2x/√π · exp(−x²) · Σ (2x²)^n / (2n+1)!!, all terms positive.
  const double z = 2.0 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 500; ++n) {
    term *= z / (2.0 * n + 1.0);
    sum += term;
    if (term < kEps * 0.25 * sum) break;
  }
  return 2.0 * x * std::exp(-x * x) * sum / std::sqrt(std::numbers::pi);
}

double erfcx_continued_fraction(double x) {
  // erfcx(x) = 1 / (√π · (x + (1/2)/(x + (2/2)/(x + (3/2)/(x + ...))))),
  // modified Lentz.
  constexpr double tiny = 1e-300;
  double f = x;
  double C = f;
  double D = 0.0;
  for (int n = 1; n < 20000; ++n) {
    const double a = 0.5 * n;
    D = x + a * D;
    if (D == 0.0) D = tiny;
    C = x + a / C;
    if (C == 0.0) C = tiny;
    D = 1.0 / D;
    const double delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 0.5 * kEps) break;
  }
  return 1.0 / (std::sqrt(std::numbers::pi) * f);
}

}  // namespace detail

ErfTriple erf_family(double x) {
  require_finite(x, "erf_family");
  const double ax = std::abs(x);
  double e, ec, ecx;
  if (ax < detail::kErfcxSwitch) {
    e = detail::erf_series(ax);
    ec = 1.0 - e;
    ecx = std::exp(ax * ax) * ec;
  } else {
    ecx = detail::erfcx_continued_fraction(ax);
    ec = ecx * std::exp(-ax * ax);
    e = 1.0 - ec;
  }
  if (x >= 0.0) return {e, ec, ecx};
  return {-e, 2.0 - ec, 2.0 * std::exp(ax * ax) - ecx};
}

double erfcx(double x) { return erf_family(x).erfcx; }

double erfi(double x) {
  require_finite(x, "erfi");
  if (std::abs(x) > 26.0) throw RangeError("erfi: |x| > 26 overflows");
  // 2/√π · Σ x^(2n+1) / (n! (2n+1))
  const double x2 = x * x;
  double power = x;
  double sum = x;
  for (int n = 1; n < 5000; ++n) {
    power *= x2 / n;
    const double term = power / (2.0 * n + 1.0);
    sum += term;
    if (std::abs(term) < 0.25 * kEps * std::abs(sum)) break;
  }
  return 2.0 * sum / std::sqrt(std::numbers::pi);
}

EllipticPair elliptic_from_complement(double mc) {
  require_finite(mc, "elliptic");
  if (mc < 0.0) throw DomainError("elliptic: parameter above 1");
  if (mc == 0.0) return {std::numeric_limits<double>::infinity(), 1.0};
  if (mc <= 1.0) return agm_elliptic(1.0 - mc, mc);
  // m < 0: imaginary-modulus transformation to m' = −m/(1 − m) ∈ (0, 1),
  // 1 − m' = 1/(1 − m).
  const double mc_t = 1.0 / mc;
  const EllipticPair t = agm_elliptic((mc - 1.0) / mc, mc_t);
  const double root = std::sqrt(mc);
  return {t.K / root, t.E * root};
}

EllipticPair elliptic(double m) {
  require_finite(m, "elliptic");
  if (m > 1.0) throw DomainError("elliptic: parameter m > 1");
  if (m == 1.0) return {std::numeric_limits<double>::infinity(), 1.0};
  if (m >= 0.0) return agm_elliptic(m, 1.0 - m);
  const double mc = 1.0 - m;
  const EllipticPair t = agm_elliptic(-m / mc, 1.0 / mc);
  const double root = std::sqrt(mc);
  return {t.K / root, t.E * root};
}

double hyp2f2_11_52_3(double p) {
  require_finite(p, "hyp2f2");
  if (std::abs(p) > kHyp2F2MaxArgument)
    throw RangeError("hyp2f2: |p| outside the validated range");
  // t_{n+1} = t_n · (n + 1) p / ((n + 5/2)(n + 3))
  DoubleDouble term{1.0, 0.0};
  DoubleDouble sum{1.0, 0.0};
  for (int n = 0; n < 4000; ++n) {
    term = mul(term, static_cast<double>(n + 1));
    term = mul(term, p);
    term = div(term, n + 2.5);
    term = div(term, n + 3.0);
    sum = add(sum, term);
    if (n > std::abs(p) && std::abs(term.hi) < 1e-20 * std::abs(sum.hi)) break;
  }
  return sum.hi + sum.lo;
}

double entropy_bits(std::span<const double> p) {
  double total = 0.0;
  for (double v : p) {
    if (!std::isfinite(v)) throw DomainError("entropy: non-finite component");
    if (v < -1e-9) throw DomainError("entropy: negative probability");
    total += std::max(v, 0.0);
  }
  if (std::abs(total - 1.0) > 1e-9) throw DomainError("entropy: components do not sum to 1");
  double h = 0.0;
  for (double v : p) {
    const double q = std::max(v, 0.0) / total;
    if (q > 0.0) h -= q * std::log2(q);
  }
  return h;
}

double binary_entropy_bits(double x) {
  const std::array<double, 2> p{x, 1.0 - x};
  return entropy_bits(p);
}

}  // namespace boostcap::sf
