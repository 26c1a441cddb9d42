#include <doctest.h>

#include "capform/check.hpp"
#include "capform/spectra.hpp"

#include <algorithm>
#include <random>

using namespace capform;

namespace {

Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

SatakeMonomial mono(const Rat& p_exp, long a_exp) { return {p_exp, a_exp}; }

SatakeSet sorted(SatakeSet s) {
    std::sort(s.begin(), s.end());
    return s;
}

// permutation + random entry inversions: a Weyl-group move
SatakeSet weyl_move(SatakeSet s, std::mt19937& rng) {
    std::shuffle(s.begin(), s.end(), rng);
    for (auto& m : s)
        if (rng() % 2)
            m = m.inverse();
    return s;
}

SatakeSet random_set(std::mt19937& rng, size_t size) {
    SatakeSet s;
    std::uniform_int_distribution<long> pe(-3, 3), ae(-2, 2);
    for (size_t i = 0; i < size; ++i)
        s.push_back(mono(Rat(pe(rng)), 2 * ae(rng)));
    return s;
}

// evaluate every lam-coefficient at a fixed value
std::vector<Rat> eval_coeffs(const LFactorPoly& f, const Rat& lam) {
    std::vector<Rat> out;
    for (long k = 0; k <= f.degree(); ++k)
        out.push_back(f.coeff(k).eval(lam));
    return out;
}

} // namespace

TEST_CASE("monomial algebra and canonical forms") {
    const SatakeMonomial a = mono(frac(1, 2), 1);
    CHECK(a.inverse() == mono(frac(-1, 2), -1));
    CHECK(a * a.inverse() == mono(Rat(0), 0));
    CHECK((a / a) == mono(Rat(0), 0));
    CHECK(mono(Rat(0), 0).str() == "1");
    CHECK(mono(Rat(1), 0).str() == "p^(1)");
    CHECK(mono(frac(1, 2), -2).str() == "p^(1/2)*alpha^(-2)");

    CHECK(weyl_equivalent({mono(Rat(1), 0), mono(Rat(-1), 0)},
                          {mono(Rat(-1), 0), mono(Rat(1), 0)}));
    CHECK(!weyl_equivalent({mono(Rat(1), 0), mono(Rat(0), 0)},
                           {mono(Rat(1), 0), mono(Rat(1), 0)}));
    CHECK(!weyl_equivalent({mono(Rat(1), 0)}, {mono(Rat(1), 0), mono(Rat(1), 0)}));
    CHECK(canonical({mono(Rat(-1), 2)}) == SatakeSet{mono(Rat(1), -2)});
}

TEST_CASE("weyl equivalence is an equivalence relation") {
    std::mt19937 rng(0x5eed5u);
    for (int trial = 0; trial < 40; ++trial) {
        const SatakeSet x = random_set(rng, 6);
        CHECK(weyl_equivalent(x, x));
        const SatakeSet y = weyl_move(x, rng);
        const SatakeSet z = weyl_move(y, rng);
        CHECK(weyl_equivalent(x, y));
        CHECK(weyl_equivalent(y, x));
        CHECK(weyl_equivalent(x, z));
    }
    // unrelated sets stay apart
    CHECK(!weyl_equivalent(satake_lift(false),
                           {mono(Rat(2), 0), mono(Rat(1), 0), mono(Rat(0), 0),
                            mono(Rat(0), 0), mono(Rat(-1), 0), mono(Rat(-2), 0)}));
}

TEST_CASE("parameter multisets of the lift") {
    const SatakeSet unram = satake_lift(false);
    CHECK(unram.size() == 6);
    CHECK(sorted(unram) == sorted({mono(Rat(0), 2), mono(Rat(1), 0), mono(Rat(0), 0),
                                   mono(Rat(0), 0), mono(Rat(-1), 0), mono(Rat(0), -2)}));
    CHECK(inversion_closed(unram));

    const SatakeSet ram = satake_lift(true);
    CHECK(ram.size() == 4);
    CHECK(sorted(ram) == sorted({mono(Rat(1), 0), mono(Rat(0), 0), mono(Rat(-1), 0),
                                 mono(Rat(-1), 0)}));
    // chi(p) appears with its inverse, but the degree-4 datum as a whole is
    // not inversion-closed (p^-1 has multiplicity two)
    CHECK(std::count(ram.begin(), ram.end(), mono(Rat(1), 0)) == 1);
    CHECK(std::count(ram.begin(), ram.end(), mono(Rat(-1), 0)) == 2);
    CHECK(!inversion_closed(ram));

    // non-temperedness witness: a parameter off the unit circle in every set
    for (bool flag : {false, true}) {
        bool witness = false;
        for (const auto& m : satake_lift(flag))
            witness = witness || m.p_exp >= 1 || m.p_exp <= -1;
        CHECK(witness);
    }
}

TEST_CASE("torus translations") {
    const SatakeSet x4(4, mono(Rat(1), 2));
    for (const auto& m : gl4_to_so33(x4))
        CHECK(m == mono(Rat(2), 4));

    const SatakeSet a = gl4_parameters();
    CHECK(a.size() == 4);
    for (const auto& m : a)
        CHECK(mod1(m.p_exp) == frac(1, 2));  // genuinely half-integral slots

    const SatakeSet so33 = gl4_to_so33(a);
    CHECK(sorted(so33) == sorted(satake_lift(false)));
    CHECK(weyl_equivalent(so33, satake_lift(false)));
    for (const auto& m : so33)
        CHECK(mod1(m.p_exp) == 0);  // integral after translation

    CHECK(sorted(gso22_quotients(a)) ==
          sorted({mono(Rat(1), 0), mono(Rat(1), 2), mono(Rat(1), -2), mono(Rat(1), 0)}));

    CHECK_THROWS_AS(gl4_to_so33(SatakeSet(3)), domain_error);
    CHECK_THROWS_AS(gso22_quotients(SatakeSet(5)), domain_error);
}

TEST_CASE("alpha pair polynomials") {
    CHECK(alpha_pair(0) == LamPoly(Rat(2)));
    CHECK(alpha_pair(1) == LamPoly::lam());
    CHECK(alpha_pair(2) == LamPoly::lam(2) - LamPoly(Rat(2)));
    CHECK(alpha_pair(3) == LamPoly::lam(3) - LamPoly::lam(1, Rat(3)));
    for (long k = 2; k <= 8; ++k) {
        CHECK(alpha_pair(k) == LamPoly::lam() * alpha_pair(k - 1) - alpha_pair(k - 2));
        CHECK(alpha_pair(-k) == alpha_pair(k));
    }
    // at lam = 2 (alpha = 1) every pair evaluates to 2
    for (long k = 0; k <= 8; ++k)
        CHECK(alpha_pair(k).eval(Rat(2)) == Rat(2));
}

TEST_CASE("unramified local factor") {
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
        CAPTURE(p);
        const LFactorPoly f = local_factor_unramified(p);
        CHECK(f.degree() == 6);
        CHECK(f.coeff(0) == LamPoly(Rat(1)));
        const LamPoly e1 = -alpha_pair(2) - LamPoly(Rat(p) + 2 + frac(1, p));
        CHECK(f.coeff(1) == e1);
        // parameter product 1 makes the factor palindromic
        for (long k = 0; k <= 6; ++k)
            CHECK(f.coeff(k) == f.coeff(6 - k));

        // alpha = 1 degeneration: (1-X)^4 (1-pX)(1-X/p)
        const SatakeSet degenerate{mono(Rat(0), 0), mono(Rat(0), 0), mono(Rat(0), 0),
                                   mono(Rat(0), 0), mono(Rat(1), 0), mono(Rat(-1), 0)};
        CHECK(eval_coeffs(f, Rat(2)) == eval_coeffs(expand_local_factor(degenerate, p), Rat(0)));
    }
}

TEST_CASE("ramified local factor") {
    const LFactorPoly f = local_factor_ramified(2);
    CHECK(f.degree() == 4);
    CHECK(f.coeff(0) == LamPoly(Rat(1)));
    CHECK(f.coeff(1) == LamPoly(Rat(-4)));
    CHECK(f.coeff(2) == LamPoly(frac(21, 4)));
    CHECK(f.coeff(3) == LamPoly(frac(-11, 4)));
    CHECK(f.coeff(4) == LamPoly(frac(1, 2)));

    const LFactorPoly g = local_factor_ramified(3);
    CHECK(g.degree() == 4);
    CHECK(g.coeff(1) == LamPoly(frac(-14, 3)));  // -(3 + 1 + 1/3 + 1/3)
}

TEST_CASE("standard factor identities") {
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
        CAPTURE(p);
        const StdIdentityReport rep = std_identity_check(p, false);
        CHECK(rep.ok);
        CHECK(rep.multiset_match);
        CHECK(rep.pairwise_match);
        CHECK(rep.lift_factor == rep.tensor_route);
        CHECK(rep.lift_factor == local_factor_unramified(p));
    }
    for (long p : {2L, 3L, 5L}) {
        CAPTURE(p);
        const StdIdentityReport rep = std_identity_check(p, true);
        CHECK(rep.ok);
        CHECK(rep.lift_factor == rep.tensor_route);
        CHECK(rep.lift_factor == rep.jo_route);
        CHECK(rep.lift_factor == local_factor_ramified(p));
        CHECK(rep.jo_route.degree() == 4);
    }
}

TEST_CASE("expansion guards") {
    CHECK_THROWS_AS(expand_local_factor(gl4_parameters(), 2), domain_error);
    CHECK_THROWS_AS(expand_local_factor({mono(Rat(0), 1)}, 2), domain_error);
    CHECK_THROWS_AS(expand_local_factor({mono(Rat(0), 2)}, 2), domain_error);
    CHECK_THROWS_AS(expand_local_factor(satake_lift(false), 1), domain_error);
    CHECK_THROWS_AS(expand_local_factor({mono(Rat(0), 2), mono(Rat(0), -2)}, 2) *
                        expand_local_factor({mono(Rat(0), 0)}, 3),
                    domain_error);

    // gso22 output expands fine: its alpha spectrum is symmetric
    const LFactorPoly q = expand_local_factor(gso22_quotients(gl4_parameters()), 5);
    CHECK(q.degree() == 4);
    CHECK(q.coeff(1) == -LamPoly(Rat(10)) - alpha_pair(2) * LamPoly(Rat(5)));
}

TEST_CASE("chebyshev coefficient growth stays exact") {
    // spot value: X^1 coefficient at lam = 5/2 and p = 7
    const LFactorPoly f = local_factor_unramified(7);
    const Rat lam = frac(5, 2);
    // alpha^2 + alpha^-2 = lam^2 - 2 = 17/4
    CHECK(f.coeff(1).eval(lam) == -(frac(17, 4) + Rat(7) + Rat(2) + frac(1, 7)));
    // full product check at a numeric point: prod (1 - beta X) at X = 1
    // equals sum of coefficients
    Rat total(0);
    for (long k = 0; k <= 6; ++k)
        total += f.coeff(k).eval(lam);
    // with alpha^2 + alpha^-2 = 17/4: (1-a)(1-1/a) pairs give numeric values
    // (1-p)(1-1/p)(1-1)^2 (1 - alpha^2)(1 - alpha^-2) = 0 because of (1-1)^2
    CHECK(total == Rat(0));
}
