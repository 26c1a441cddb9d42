#pragma once
#include "capform/orders.hpp"
#include "capform/thetacoeff.hpp"

#include <array>
#include <map>

namespace capform {

// Floating-point layer. Everything here consumes the exact layer; nothing in
// the exact layer may include this header.

// K_{ir}(x) = int_0^inf exp(-x cosh t) cos(rt) dt, by double-exponential
// quadrature on t = exp((pi/2) sinh u), truncated where cosh t > 700/x (the
// integrand is below 1e-304 there). The step is halved until the result moves
// by less than 1e-10 relative to max(|K|, e^-x); throws domain_error when
// that never happens.
double bessel_K_imag(double r, double x);

// A single fixed-step pass of the same rule, exposed so the step-halving
// behaviour itself can be tested.
double bessel_K_imag_step(double r, double x, double h);

// Independent oracle for moderate x: the power series
//   K_{ir}(x) = -pi Im(I_{ir}(x)) / sinh(pi r),
//   I_{ir}(x) = sum_k (x/2)^{2k+ir} / (k! Gamma(k+1+ir)),
// with the classical log series for K_0 at r = 0. Cancellation grows like
// e^{2x}, so arguments are capped at 12. Never used by the quadrature path.
double bessel_K_imag_series(double r, double x);

// W_{0, ir/2}(z) = sqrt(z/pi) K_{ir/2}(z/2), via the quadrature path.
double whittaker_w0(double r, double z);

// Relative error in
//   int_0^inf exp(-pt - a/(2t)) W_{0, ir/2}(a/t) dt = 2 sqrt(a/p) K_{ir}(2 sqrt(ap)),
// the left side by an outer double-exponential pass with the Whittaker value
// quadratured afresh at every node, the right side by a single Bessel call.
double laplace_identity_check(double a, double p, double r);

// A Maass datum with literal numbers attached: spectral parameter r (Laplace
// eigenvalue (r^2+1)/4) and Fourier coefficients c(n) for 0 < |n| <= n_max.
struct NumericMaass {
    long level = 0;
    std::map<long, int> al_signs;
    double r = 0.0;
    std::map<long, double> coeffs;
    long n_max = 0;

    MaassDatum exact() const { return MaassDatum::make(level, al_signs); }
    // c(n); throws domain_error when n = 0, |n| > n_max, or n is absent
    double coefficient(const Int& n) const;
};

// A point nu(x, y) of the upper half-space model: x in order-basis
// coordinates, y > 0.
struct EvalPoint {
    std::array<double, 4> x{};
    double y = 1.0;
};

struct LiftValue {
    double value = 0.0;       // the truncated Fourier sum
    double tail_bound = 0.0;  // decay scale of the first omitted shell
    long pairs = 0;           // folded {beta, -beta} pairs summed
};

// Truncation of the lift's Fourier expansion at the point nu(x, y):
//   sum over beta in O', 0 < Nrd(beta) <= q_max, of
//     A(beta) y^2 K_{ir}(4 pi sqrt(Nrd beta) y) e(t^beta A0 x),
// with A(beta) instantiated from the closed coefficient formula and the
// datum's c(n). The dual coordinates of beta are exactly the pairing integers
// tr(beta conj(e_t)), so the phase at x is sum_t coords[t] x_t; opposite
// vectors carry equal coefficients and are folded into cosine pairs. The
// reported tail bound is max|A| y^2 sqrt(pi/2X) e^-X at X = 4 pi sqrt(q_max) y,
// the K-decay scale of the first omitted shell.
LiftValue evaluate_lift(const DualPtr& L, const NumericMaass& f, const EvalPoint& pt,
                        const Rat& q_max);

} // namespace capform
