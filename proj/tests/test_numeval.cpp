#include <doctest.h>

#include "capform/check.hpp"
#include "capform/numeval.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <vector>

using namespace capform;

namespace {

constexpr double kPi = 3.14159265358979323846;

Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

DualPtr dual_of(long n) {
    static std::map<long, DualPtr> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, DualLattice::of(catalog_order(n))).first;
    return it->second;
}

NumericMaass sample_datum(long n_max) {
    NumericMaass f;
    f.level = 2;
    f.al_signs = {{2, 1}};
    f.r = 1.0;
    f.n_max = n_max;
    for (long n = 1; n <= n_max; ++n) {
        f.coeffs[-n] = 1.0 / n;
        f.coeffs[n] = 0.3 / n;
    }
    return f;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST_CASE("bessel quadrature matches classical values at order zero") {
    CHECK(rel(bessel_K_imag(0.0, 0.5), 0.9244190712276659) < 1e-11);
    CHECK(rel(bessel_K_imag(0.0, 1.0), 0.4210244382407083) < 1e-11);
    CHECK(rel(bessel_K_imag(0.0, 2.0), 0.1138938727495334) < 1e-11);
    for (double x : {0.5, 1.0, 2.0, 5.0})
        CHECK(rel(bessel_K_imag(0.0, x), bessel_K_imag_series(0.0, x)) < 1e-9);
    CHECK_THROWS_AS(bessel_K_imag(0.0, 0.0), domain_error);
    CHECK_THROWS_AS(bessel_K_imag(1.0, -1.0), domain_error);
    CHECK_THROWS_AS(bessel_K_imag_step(0.0, 1.0, 0.0), domain_error);
}

TEST_CASE("quadrature agrees with the power series at imaginary order") {
    CHECK(rel(bessel_K_imag(1.0, 1.0), 0.2894280370259921) < 1e-11);
    CHECK(rel(bessel_K_imag(2.5, 1.0), 0.0227635316886270) < 1e-10);
    for (double r : {1.0, 2.5})
        for (double x : {0.5, 1.0, 2.0, 4.0})
            CHECK(rel(bessel_K_imag(r, x), bessel_K_imag_series(r, x)) < 1e-9);
    CHECK_THROWS_AS(bessel_K_imag_series(1.0, 20.0), domain_error);
    CHECK_THROWS_AS(bessel_K_imag_series(1.0, 0.0), domain_error);
}

TEST_CASE("symmetry and monotone decay of the kernel") {
    for (double x : {0.7, 1.0, 3.0})
        CHECK(std::abs(bessel_K_imag(1.3, x) - bessel_K_imag(-1.3, x)) < 1e-14);
    double k1 = bessel_K_imag(1.0, 1.0);
    double k2 = bessel_K_imag(1.0, 2.0);
    double k4 = bessel_K_imag(1.0, 4.0);
    CHECK(k1 > k2);
    CHECK(k2 > k4);
    CHECK(k4 > 0.0);
    // past the truncation bound every node underflows
    CHECK(bessel_K_imag(1.0, 700.0) == 0.0);
}

TEST_CASE("step halving settles") {
    for (auto [r, x] : std::vector<std::pair<double, double>>{{0.0, 2.0}, {1.0, 1.0}}) {
        double coarse = bessel_K_imag_step(r, x, 0.02);
        double fine = bessel_K_imag_step(r, x, 0.01);
        CHECK(std::abs(coarse - fine) < 1e-8 * std::abs(fine));
        CHECK(rel(bessel_K_imag(r, x), fine) < 1e-9);
    }
}

TEST_CASE("whittaker function and its bessel relation") {
    CHECK(rel(whittaker_w0(0.0, 1.0), std::sqrt(1.0 / kPi) * 0.9244190712276659) < 1e-10);
    for (double r : {0.0, 1.0, 2.5})
        for (double z : {1.0, 3.0, 6.0}) {
            double via_series = std::sqrt(z / kPi) * bessel_K_imag_series(r / 2, z / 2);
            CHECK(rel(whittaker_w0(r, z), via_series) < 1e-8);
        }
    CHECK(whittaker_w0(1.0, 1500.0) == 0.0);
    CHECK_THROWS_AS(whittaker_w0(1.0, 0.0), domain_error);
}

TEST_CASE("laplace transform identity on the verification grid") {
    for (double a : {1.0, 4 * kPi})
        for (double p : {1.0, kPi})
            for (double r : {0.0, 1.0, 2.5})
                CHECK(laplace_identity_check(a, p, r) <= 1e-6);
    // a = p collapses the prefactor to 2
    CHECK(laplace_identity_check(2.0, 2.0, 1.0) <= 1e-6);
    CHECK_THROWS_AS(laplace_identity_check(0.0, 1.0, 1.0), domain_error);
    CHECK_THROWS_AS(laplace_identity_check(1.0, -1.0, 0.0), domain_error);
}

TEST_CASE("lift evaluation folds opposite vectors exactly") {
    auto L = dual_of(2);
    NumericMaass f = sample_datum(8);
    EvalPoint pt{{0.13, 0.27, 0.05, -0.11}, 0.3};
    Rat q_max = frac(2, 1);
    LiftValue folded = evaluate_lift(L, f, pt, q_max);
    CHECK(folded.pairs > 0);
    CHECK(std::abs(folded.value) > 1e-12);
    CHECK(folded.tail_bound > 0.0);

    // unfolded oracle: every vector once, complex phases, divisor-form coefficients
    MaassDatum datum = f.exact();
    std::complex<double> total = 0.0;
    for (const auto& [beta, q] : short_vectors(L, q_max)) {
        FormalCoeffSum sum = a_divisor_form(beta, datum);
        double a_beta = 0.0;
        for (const auto& [m, coeff] : sum.terms()) a_beta += coeff.get_d() * f.coefficient(m);
        a_beta *= std::sqrt(sum.norm().get_d());
        double theta = 0.0;
        for (int t = 0; t < 4; ++t) theta += beta.coords[t].get_d() * pt.x[t];
        double K = bessel_K_imag(f.r, 4 * kPi * std::sqrt(q.get_d()) * pt.y);
        total += a_beta * pt.y * pt.y * K *
                 std::exp(std::complex<double>(0.0, 2 * kPi * theta));
    }
    CHECK(std::abs(total.imag()) < 1e-12 * (std::abs(total.real()) + 1));
    CHECK(rel(folded.value, total.real()) < 1e-9);
}

TEST_CASE("lift evaluation is periodic in x and decays in y") {
    auto L = dual_of(2);
    NumericMaass f = sample_datum(8);
    Rat q_max = frac(2, 1);
    EvalPoint pt{{0.13, 0.27, 0.05, -0.11}, 1.0};
    double base = evaluate_lift(L, f, pt, q_max).value;
    EvalPoint shifted = pt;
    shifted.x = {pt.x[0] + 1, pt.x[1] - 2, pt.x[2] + 3, pt.x[3]};
    CHECK(rel(evaluate_lift(L, f, shifted, q_max).value, base) < 1e-9);

    EvalPoint far = pt;
    far.y = 10.0;
    LiftValue high = evaluate_lift(L, f, far, q_max);
    CHECK(std::abs(high.value) < std::abs(base));
    CHECK(high.tail_bound < evaluate_lift(L, f, pt, q_max).tail_bound);
}

TEST_CASE("single-coefficient datum reduces to the hand-built shell sum") {
    auto L = dual_of(2);
    NumericMaass f = sample_datum(8);
    for (auto& [n, c] : f.coeffs) c = 0.0;
    f.coeffs[-1] = 1.0;
    EvalPoint pt{{0.41, -0.08, 0.19, 0.33}, 0.4};
    Rat q_max = frac(2, 1);

    // the only classes whose coefficient sum touches c(-1), at eps_2 = +1:
    //   Nrd 1/2 (primitive, nontrivial class): A = -sqrt(1/2) c(-1)
    //   Nrd 1   (primitive, trivial class):    A = c(-1) - c(-2)
    //   Nrd 2 = 4 (1/2) (doubles of the first): A = sqrt(2)(-c(-4) + c(-2) - c(-1))
    // primitive Nrd 2 vectors only reach c(-2), c(-4).
    double c_half = 0, c_one = 0, c_two = 0;
    for (const auto& [beta, q] : short_vectors(L, q_max)) {
        double theta = 0.0;
        for (int t = 0; t < 4; ++t) theta += beta.coords[t].get_d() * pt.x[t];
        double phase = std::cos(2 * kPi * theta);
        if (q == frac(1, 2)) c_half += phase;
        if (q == frac(1, 1)) c_one += phase;
        if (q == frac(2, 1) && primitive_decomposition(beta).u.at(2) == 1) c_two += phase;
    }
    double y2 = pt.y * pt.y;
    auto K = [&](double q) { return bessel_K_imag(f.r, 4 * kPi * std::sqrt(q) * pt.y); };
    double expected = y2 * (-std::sqrt(0.5) * K(0.5) * c_half + K(1.0) * c_one -
                            std::sqrt(2.0) * K(2.0) * c_two);
    CHECK(rel(evaluate_lift(L, f, pt, q_max).value, expected) < 1e-9);
}

TEST_CASE("zero datum evaluates to exactly zero") {
    auto L = dual_of(2);
    NumericMaass f = sample_datum(8);
    for (auto& [n, c] : f.coeffs) c = 0.0;
    EvalPoint pt{{0.2, 0.4, 0.6, 0.8}, 0.7};
    LiftValue v = evaluate_lift(L, f, pt, frac(2, 1));
    CHECK(v.value == 0.0);
    CHECK(v.pairs > 0);
}

TEST_CASE("lift evaluation rejects bad inputs") {
    auto L = dual_of(2);
    NumericMaass f = sample_datum(8);
    EvalPoint pt{{0.0, 0.0, 0.0, 0.0}, 1.0};
    CHECK_THROWS_AS(evaluate_lift(L, f, pt, frac(0, 1)), domain_error);
    CHECK_THROWS_AS(evaluate_lift(L, f, pt, frac(-1, 2)), domain_error);
    EvalPoint flat = pt;
    flat.y = 0.0;
    CHECK_THROWS_AS(evaluate_lift(L, f, flat, frac(1, 1)), domain_error);

    NumericMaass wrong_level = f;
    wrong_level.level = 3;
    wrong_level.al_signs = {{3, 1}};
    CHECK_THROWS_AS(evaluate_lift(L, wrong_level, pt, frac(1, 1)), domain_error);

    NumericMaass short_range = sample_datum(2);
    CHECK_THROWS_AS(evaluate_lift(L, short_range, pt, frac(2, 1)), domain_error);

    NumericMaass gap = sample_datum(8);
    gap.coeffs.erase(-4);
    CHECK_THROWS_AS(evaluate_lift(L, gap, pt, frac(2, 1)), domain_error);

    NumericMaass poisoned = sample_datum(8);
    poisoned.coeffs[-1] = std::nan("");
    CHECK_THROWS_AS(evaluate_lift(L, poisoned, pt, frac(1, 1)), domain_error);

    NumericMaass empty = sample_datum(8);
    empty.n_max = 0;
    CHECK_THROWS_AS(evaluate_lift(L, empty, pt, frac(1, 1)), domain_error);

    // positive-index coefficients are never consulted
    NumericMaass negatives_only = sample_datum(8);
    for (long n = 1; n <= 8; ++n) negatives_only.coeffs.erase(n);
    CHECK(std::isfinite(evaluate_lift(L, negatives_only, pt, frac(2, 1)).value));
}
