#include "capform/numeval.hpp"

#include "capform/check.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>

namespace capform {

namespace {

constexpr double kPi = 3.14159265358979323846;

// exp(-x cosh t) cos(rt); identically zero past the cosh t > 700/x truncation
double k_integrand(double r, double x, double t) {
    double xc = x * std::cosh(t);
    if (!(xc <= 700.0)) return 0.0;
    return std::exp(-xc) * std::cos(r * t);
}

// one double-exponential pass of int_0^inf g(t) dt on t = exp((pi/2) sinh u);
// g must vanish for all t past some threshold (reported by `dead`), and be
// bounded near t = 0 so the left tail can be cut once the node weight is
// negligible.
template <typename G, typename Dead>
double exp_sinh_pass(double h, G g, Dead dead) {
    double sum = g(1.0) * (kPi / 2);
    for (int dir : {+1, -1}) {
        for (long k = 1; k < 2000000; ++k) {
            double u = dir * k * h;
            double t = std::exp((kPi / 2) * std::sinh(u));
            double w = (kPi / 2) * std::cosh(u) * t;
            if (dir > 0 && dead(t)) break;
            if (dir < 0 && w < 1e-16) break;
            sum += g(t) * w;
        }
    }
    return h * sum;
}

template <typename Pass>
double halve_until_stable(Pass pass, double tol, double floor, const char* what) {
    double h = 0.5;
    double prev = pass(h);
    for (int i = 0; i < 14; ++i) {
        h /= 2;
        double cur = pass(h);
        if (std::abs(cur - prev) <= tol * (std::abs(cur) + floor)) return cur;
        prev = cur;
    }
    CF_DOMAIN_CHECK(false, what);
    return 0.0;
}

// Lanczos (g = 7, 9 terms), for Re z >= 1; plenty for Gamma(1 + ir)
std::complex<double> lanczos_gamma(std::complex<double> z) {
    static const double c[9] = {0.99999999999980993,     676.5203681218851,
                                -1259.1392167224028,     771.32342877765313,
                                -176.61502916214059,     12.507343278686905,
                                -0.13857109526572012,    9.9843695780195716e-6,
                                1.5056327351493116e-7};
    z -= 1.0;
    std::complex<double> x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + double(i));
    std::complex<double> t = z + 7.5;
    return std::sqrt(2 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// K_0 by its log series: -(log(x/2) + gamma) I_0(x) + sum_k (x^2/4)^k H_k / (k!)^2
double k0_series(double x) {
    const double euler = 0.57721566490153286;
    double q = x * x / 4;
    double i0 = 1.0, term = 1.0;
    double tail = 0.0, harmonic = 0.0;
    for (int k = 1; k < 400; ++k) {
        term *= q / (double(k) * k);
        harmonic += 1.0 / k;
        i0 += term;
        tail += term * harmonic;
        if (term < 1e-20 * i0) break;
    }
    return -(std::log(x / 2) + euler) * i0 + tail;
}

} // namespace

double bessel_K_imag_step(double r, double x, double h) {
    CF_DOMAIN_CHECK(x > 0, "bessel argument must be positive");
    CF_DOMAIN_CHECK(h > 0, "quadrature step must be positive");
    auto g = [r, x](double t) { return k_integrand(r, x, t); };
    auto dead = [x](double t) { return !(x * std::cosh(t) <= 700.0); };
    return exp_sinh_pass(h, g, dead);
}

double bessel_K_imag(double r, double x) {
    CF_DOMAIN_CHECK(x > 0, "bessel argument must be positive");
    if (x >= 700.0) return 0.0;  // every node is past the truncation bound
    auto pass = [r, x](double h) { return bessel_K_imag_step(r, x, h); };
    return halve_until_stable(pass, 1e-11, std::exp(-x),
                              "bessel quadrature did not converge");
}

double bessel_K_imag_series(double r, double x) {
    CF_DOMAIN_CHECK(x > 0, "bessel argument must be positive");
    CF_DOMAIN_CHECK(x <= 12.0, "series oracle loses precision past x = 12");
    if (r == 0.0) return k0_series(x);
    r = std::abs(r);
    std::complex<double> ir(0.0, r);
    std::complex<double> gk = lanczos_gamma(1.0 + ir);  // Gamma(k + 1 + ir), k = 0
    double q = x * x / 4;
    double fk = 1.0;  // k! q^{-k} accumulated inversely: term = q^k / (k! gk)
    std::complex<double> sum = 1.0 / gk;
    std::complex<double> term;
    for (int k = 1; k < 400; ++k) {
        gk *= double(k) + ir;
        fk *= q / k;
        term = fk / gk;
        sum += term;
        if (std::abs(term) < 1e-20 * std::abs(sum)) break;
    }
    // I_{ir}(x) = (x/2)^{ir} sum; (x/2)^{ir} = e(r log(x/2) / 2 pi)
    std::complex<double> phase = std::exp(std::complex<double>(0.0, r * std::log(x / 2)));
    double im = (phase * sum).imag();
    return -kPi * im / std::sinh(kPi * r);
}

double whittaker_w0(double r, double z) {
    CF_DOMAIN_CHECK(z > 0, "whittaker argument must be positive");
    return std::sqrt(z / kPi) * bessel_K_imag(r / 2, z / 2);
}

double laplace_identity_check(double a, double p, double r) {
    CF_DOMAIN_CHECK(a > 0, "laplace parameter a must be positive");
    CF_DOMAIN_CHECK(p > 0, "laplace parameter p must be positive");
    double rhs = 2 * std::sqrt(a / p) * bessel_K_imag(r, 2 * std::sqrt(a * p));
    CF_DOMAIN_CHECK(rhs != 0, "comparison value underflowed");
    // exponent budget: contributions with pt + a/2t past the saddle value
    // 2 sqrt(ap) by 80 are below 1e-34 of the result
    double cut = 2 * std::sqrt(a * p) + 80.0;
    auto g = [a, p, r, cut](double t) {
        double e = p * t + a / (2 * t);
        if (e > cut) return 0.0;
        return std::exp(-e) * whittaker_w0(r, a / t);
    };
    auto dead = [p, cut](double t) { return p * t > cut; };
    double scale = std::exp(-2 * std::sqrt(a * p));
    auto pass = [&](double h) { return exp_sinh_pass(h, g, dead); };
    double lhs = halve_until_stable(pass, 1e-9, scale,
                                    "laplace quadrature did not converge");
    return std::abs(lhs - rhs) / std::abs(rhs);
}

double NumericMaass::coefficient(const Int& n) const {
    CF_DOMAIN_CHECK(n != 0, "coefficient index must be nonzero");
    CF_DOMAIN_CHECK(n.fits_slong_p(), "coefficient index out of range");
    long k = n.get_si();
    CF_DOMAIN_CHECK(std::labs(k) <= n_max, "coefficient index past n_max");
    auto it = coeffs.find(k);
    CF_DOMAIN_CHECK(it != coeffs.end(), "missing Fourier coefficient");
    return it->second;
}

LiftValue evaluate_lift(const DualPtr& L, const NumericMaass& f, const EvalPoint& pt,
                        const Rat& q_max) {
    CF_DOMAIN_CHECK(L != nullptr, "lattice required");
    CF_DOMAIN_CHECK(sgn(q_max) > 0, "truncation bound must be positive");
    CF_DOMAIN_CHECK(pt.y > 0, "y must be positive");
    CF_DOMAIN_CHECK(f.n_max >= 1, "n_max must be at least 1");
    CF_DOMAIN_CHECK(f.level == L->order()->disc(), "datum level must match the order");
    for (const auto& [n, c] : f.coeffs)
        CF_DOMAIN_CHECK(std::isfinite(c), "coefficients must be finite");
    MaassDatum datum = f.exact();

    double y2 = pt.y * pt.y;
    std::map<Rat, double> shell_k;  // Nrd -> K_{ir}(4 pi sqrt(Nrd) y)
    LiftValue out;
    double a_max = 0.0;
    for (const auto& [beta, q] : short_vectors(L, q_max)) {
        // fold beta with -beta: keep the sign whose leading coordinate is positive
        int lead = 0;
        for (const auto& c : beta.coords)
            if (c != 0) {
                lead = sgn(c);
                break;
            }
        if (lead < 0) continue;

        FormalCoeffSum sum = a_closed_form(beta, datum);
        double a_beta = 0.0;
        for (const auto& [m, coeff] : sum.terms()) a_beta += coeff.get_d() * f.coefficient(m);
        a_beta *= std::sqrt(sum.norm().get_d());

        auto it = shell_k.find(q);
        if (it == shell_k.end())
            it = shell_k.emplace(q, bessel_K_imag(f.r, 4 * kPi * std::sqrt(q.get_d()) * pt.y))
                     .first;

        double theta = 0.0;
        for (int t = 0; t < 4; ++t) theta += beta.coords[t].get_d() * pt.x[t];
        out.value += 2 * a_beta * y2 * it->second * std::cos(2 * kPi * theta);
        a_max = std::max(a_max, std::abs(a_beta));
        ++out.pairs;
    }
    double X = 4 * kPi * std::sqrt(q_max.get_d()) * pt.y;
    out.tail_bound = (out.pairs ? a_max : 1.0) * y2 * std::sqrt(kPi / (2 * X)) * std::exp(-X);
    return out;
}

} // namespace capform
