#pragma once

#include <span>

// Real special functions needed by the channel integrals.
//
// ELLIPTIC CONVENTION: every elliptic integral here takes the *parameter* m,
//
//     K(m) = ∫_0^{π/2} dθ / sqrt(1 − m sin²θ),
//     E(m) = ∫_0^{π/2} sqrt(1 − m sin²θ) dθ,
//
// not the modulus k (m = k²). Passing a modulus silently produces wrong
// channel eigenvalues. Negative m is valid and common here.

namespace boostcap::sf {

struct ErfTriple {
  double erf;
  double erfc;
  double erfcx;  // exp(x²)·erfc(x)
};

ErfTriple erf_family(double x);

// Scaled complementary error function exp(x²)·erfc(x). Finite for all x ≥ 0.
double erfcx(double x);

// Imaginary error function erfi(x) = −i·erf(ix), |x| ≤ 26.
double erfi(double x);

struct EllipticPair {
  double K;
  double E;
};

// m ≤ 1. m = 1 gives K = +inf, E = 1.
EllipticPair elliptic(double m);

// Same pair from the complementary parameter mc = 1 − m > 0. Use when 1 − m
// is known exactly and tiny, or when m is hugely negative.
EllipticPair elliptic_from_complement(double mc);

// Arguments with |p| above this are rejected by hyp2f2_11_52_3.
inline constexpr double kHyp2F2MaxArgument = 50.0;

// 2F2(1, 1; 5/2, 3; p) by its ascending series, summed in double-double.
double hyp2f2_11_52_3(double p);

// Shannon entropy in bits. Components must be ≥ −1e-9 and sum to 1 within
// 1e-9; small violations are clamped and renormalized.
double entropy_bits(std::span<const double> p);

// H({x, 1 − x}).
double binary_entropy_bits(double x);

namespace detail {
// Exposed for the overlap tests between the two erfcx branches.
double erf_series(double x);
double erfcx_continued_fraction(double x);
inline constexpr double kErfcxSwitch = 2.0;
}  // namespace detail

}  // namespace boostcap::sf
