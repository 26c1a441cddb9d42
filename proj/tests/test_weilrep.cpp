#include <doctest.h>

#include "capform/weilrep.hpp"

#include <map>
#include <numeric>
#include <random>

using namespace capform;

namespace {

Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

WeilPtr rep_of(long n) {
    static std::map<long, WeilPtr> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, WeilRep::of(DiscGroup::of(DualLattice::of(catalog_order(n)))))
                 .first;
    return it->second;
}

bool fits(const Int& v, long bound) {
    return v <= bound && v >= -bound;
}

SL2Mat random_gamma0(std::mt19937& rng, long n) {
    std::uniform_int_distribution<long> cu(-8, 8), du(-60, 60), ku(-5, 5);
    for (;;) {
        const Int c = Int(n) * cu(rng);
        const Int d = du(rng);
        if (c == 0 && d == 0)
            continue;
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
        if (g != 1)
            continue;
        const long k = ku(rng);
        const SL2Mat m{s + k * c, -t + k * d, c, d};
        if (!fits(m.a, 10000) || !fits(m.b, 10000))
            continue;
        REQUIRE(m.det() == 1);
        return m;
    }
}

SL2Mat random_sl2(std::mt19937& rng, int len) {
    std::uniform_int_distribution<long> kd(-4, 4);
    SL2Mat m = SL2Mat::identity();
    for (int i = 0; i < len; ++i)
        m = m * SL2Mat::T(kd(rng)) * SL2Mat::S();
    return m;
}

} // namespace

TEST_CASE("generator words evaluate back to their matrix") {
    const SL2Word t5 = word_decompose(SL2Mat::T(5));
    REQUIRE(t5.toks.size() == 1);
    CHECK(!t5.toks[0].s);
    CHECK(t5.toks[0].k == 5);

    const SL2Word s = word_decompose(SL2Mat::S());
    REQUIRE(s.toks.size() == 1);
    CHECK(s.toks[0].s);

    CHECK(word_decompose(SL2Mat::identity()).toks.empty());

    const SL2Mat low{1, 0, 2, 1};
    const SL2Word w = word_decompose(low);
    CHECK(word_evaluate(w.toks) == low);
    CHECK(w.toks.size() <= 8);

    CHECK(word_evaluate({}) == SL2Mat::identity());

    CHECK_THROWS_AS(word_decompose(SL2Mat{1, 1, 1, 1}), domain_error);
    CHECK_THROWS_AS(word_decompose(SL2Mat{2, 0, 0, 1}), domain_error);
    CHECK_THROWS_AS(word_decompose(SL2Mat{0, 1, 1, 0}), domain_error);
}

TEST_CASE("word decomposition round trip on pseudorandom matrices") {
    std::mt19937 rng(20240813);
    std::uniform_int_distribution<int> len(1, 14);
    for (int trial = 0; trial < 60; ++trial) {
        const SL2Mat m = random_sl2(rng, len(rng));
        const SL2Word w = word_decompose(m);
        CHECK(word_evaluate(w.toks) == m);
        CHECK(w.toks.size() <= 34);
    }
}

TEST_CASE("generator matrices match their defining formulas") {
    for (long n : {2L, 3L, 5L}) {
        CAPTURE(n);
        WeilPtr R = rep_of(n);
        const auto& basis = R->basis();
        REQUIRE(basis == disc_elements(R->group()));
        const WeilMatrix T = R->rho_T();
        const WeilMatrix S = R->rho_S();
        const CycNum scale = CycNum(frac(-1, n));
        for (long i = 0; i < R->dim(); ++i)
            for (long j = 0; j < R->dim(); ++j) {
                const CycNum t = T.entry(i, j);
                if (i == j)
                    CHECK(t == CycNum::root_of_unity(qd(basis[i])));
                else
                    CHECK(t.is_zero());
                CHECK(S.entry(i, j) ==
                      scale * CycNum::root_of_unity(mod1(-bd(basis[i], basis[j]))));
            }
    }
    // at level 30 the tensor assembly must still reproduce the dense formulas
    WeilPtr R = rep_of(30);
    const WeilMatrix T = R->rho_T();
    const WeilMatrix S = R->rho_S();
    const CycNum scale = CycNum(frac(-1, 30));
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> pick(0, R->dim() - 1);
    for (int trial = 0; trial < 120; ++trial) {
        const long i = pick(rng), j = pick(rng);
        const DiscElt mu = R->basis()[i], nu = R->basis()[j];
        if (i == j)
            CHECK(T.entry(i, j) == CycNum::root_of_unity(qd(mu)));
        else
            CHECK(T.entry(i, j).is_zero());
        CHECK(S.entry(i, j) == scale * CycNum::root_of_unity(mod1(-bd(mu, nu))));
    }
}

TEST_CASE("pinned Weil matrices for the quaternion order of discriminant 2") {
    WeilPtr R = rep_of(2);
    REQUIRE(R->dim() == 4);
    const WeilMatrix T = R->rho_T();
    for (long i = 0; i < 4; ++i)
        CHECK(T.entry(i, i) == CycNum(i == 0 ? 1 : -1));

    const WeilMatrix S = R->rho_S();
    const CycNum mhalf(frac(-1, 2));
    for (long j = 0; j < 4; ++j) {
        CHECK(S.entry(0, j) == mhalf);
        CHECK(S.entry(j, 0) == mhalf);
    }
    CHECK(S.entry(1, 2) == CycNum(frac(1, 2)));
    CHECK((S * S).is_identity());

    const std::vector<CycNum> col0 = S.column(0);
    REQUIRE(col0.size() == 4);
    for (const CycNum& v : col0)
        CHECK(v == mhalf);
}

TEST_CASE("rho of the identity is the identity") {
    for (long n : {2L, 3L, 30L}) {
        CAPTURE(n);
        CHECK(rep_of(n)->rho(SL2Mat::identity()).is_identity());
    }
}

TEST_CASE("defining relations of the generator matrices") {
    const SL2Mat minus_id{-1, 0, 0, -1};
    for (long n : {2L, 3L, 5L, 7L, 30L}) {
        CAPTURE(n);
        WeilPtr R = rep_of(n);
        const WeilMatrix S = R->rho_S();
        const WeilMatrix ssq = S * S;
        // S^2 is the negation permutation, which is also the Gamma_0 action of -I
        CHECK(ssq == R->closed_form(minus_id));
        CHECK(ssq == R->rho(minus_id));
        const WeilMatrix st = S * R->rho_T();
        CHECK(st * st * st == ssq);
        CHECK((ssq * ssq).is_identity());
    }
}

TEST_CASE("generator matrices and word products are unitary") {
    std::mt19937 rng(20240814);
    for (long n : {2L, 3L, 5L, 7L, 30L}) {
        CAPTURE(n);
        WeilPtr R = rep_of(n);
        CHECK((R->rho_S().conj_transpose() * R->rho_S()).is_identity());
        CHECK((R->rho_T().conj_transpose() * R->rho_T()).is_identity());
        const WeilMatrix M = R->rho(random_sl2(rng, 6));
        CHECK((M.conj_transpose() * M).is_identity());
    }
}

TEST_CASE("word products respect matrix multiplication") {
    std::mt19937 rng(4242);
    for (long n : {2L, 3L, 5L}) {
        CAPTURE(n);
        WeilPtr R = rep_of(n);
        for (int trial = 0; trial < 4; ++trial) {
            const SL2Mat m1 = random_sl2(rng, 5);
            const SL2Mat m2 = random_sl2(rng, 5);
            CHECK(R->rho(m1 * m2) == R->rho(m1) * R->rho(m2));
        }
    }
}

TEST_CASE("congruence matrices act by the closed form") {
    for (long n : {2L, 3L, 5L, 7L, 30L}) {
        CAPTURE(n);
        WeilPtr R = rep_of(n);
        std::mt19937 rng(1000 + n);
        std::uniform_int_distribution<long> pick(0, R->dim() - 1);
        for (int trial = 0; trial < 25; ++trial) {
            const SL2Mat m = random_gamma0(rng, n);
            CAPTURE(trial);
            const WeilMatrix word = R->rho(m);
            const WeilMatrix closed = R->closed_form(m);
            CHECK(word == closed);

            // spot-check assembled entries against the action e(bdQ(mu)) e_{d mu}
            for (int probe = 0; probe < 6; ++probe) {
                const DiscElt mu = R->basis()[pick(rng)];
                const DiscElt target = m.d * mu;
                const CycNum expect = CycNum::root_of_unity(mod1(Rat(m.b * m.d) * qd(mu)));
                CHECK(word.entry(target, mu) == expect);
                const DiscElt other = R->basis()[pick(rng)];
                if (other != target)
                    CHECK(word.entry(other, mu).is_zero());
            }
        }
    }
}

TEST_CASE("the distinguished basis vector is fixed by the congruence action") {
    std::mt19937 rng(555);
    for (long n : {2L, 3L, 30L}) {
        CAPTURE(n);
        WeilPtr R = rep_of(n);
        const SL2Mat m = random_gamma0(rng, n);
        const std::vector<CycNum> col = R->rho(m).column(disc_zero(R->group()));
        for (long i = 0; i < R->dim(); ++i) {
            if (i == R->index_of(disc_zero(R->group())))
                CHECK(col[i] == CycNum(1));
            else
                CHECK(col[i].is_zero());
        }
    }
}

TEST_CASE("entries live in the cyclotomic field of the level") {
    std::mt19937 rng(77);
    for (long n : {2L, 3L, 5L, 7L, 30L}) {
        CAPTURE(n);
        WeilPtr R = rep_of(n);
        const long L = std::lcm(n, 2L);
        const WeilMatrix M = R->rho(random_sl2(rng, 7));
        std::uniform_int_distribution<long> pick(0, R->dim() - 1);
        for (int probe = 0; probe < 40; ++probe)
            CHECK(L % M.entry(pick(rng), pick(rng)).level() == 0);
    }
}

TEST_CASE("mismatched or invalid inputs are rejected") {
    WeilPtr R2 = rep_of(2);
    WeilPtr R3 = rep_of(3);
    CHECK_THROWS_AS(R2->rho_S() * R3->rho_S(), domain_error);
    CHECK_THROWS_AS(void(R2->rho_S() == R3->rho_S()), domain_error);
    CHECK_THROWS_AS(R3->closed_form(SL2Mat::S()), domain_error);
    CHECK_THROWS_AS(R3->closed_form(SL2Mat{1, 0, 3, 2}), domain_error);
    CHECK_THROWS_AS(R2->rho(SL2Mat{1, 1, 1, 1}), domain_error);
    CHECK_THROWS_AS(R2->index_of(disc_zero(R3->group())), domain_error);
}
