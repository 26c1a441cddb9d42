#include "capform/vvlift.hpp"

#include "capform/check.hpp"
#include "capform/weilrep.hpp"

#include <random>

namespace capform {
namespace {

Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

} // namespace

MaassDatum MaassDatum::make(long level, const std::map<long, int>& al_signs) {
    CF_DOMAIN_CHECK(level >= 2, "level must be at least 2, got " << level);
    const std::vector<long> ps = prime_factors(level);
    long prod = 1;
    for (long p : ps)
        prod *= p;
    CF_DOMAIN_CHECK(prod == level, "level " << level << " is not square-free");
    CF_DOMAIN_CHECK(ps.size() % 2 == 1,
                    "level " << level << " has an even number of prime factors");
    CF_DOMAIN_CHECK(al_signs.size() == ps.size(),
                    "expected exactly one Atkin-Lehner sign per prime divisor");
    for (long p : ps) {
        const auto it = al_signs.find(p);
        CF_DOMAIN_CHECK(it != al_signs.end(), "missing Atkin-Lehner sign at p = " << p);
        CF_DOMAIN_CHECK(it->second == 1 || it->second == -1,
                        "Atkin-Lehner sign at p = " << p << " must be +-1");
    }
    MaassDatum f;
    f.level = level;
    f.al_signs = al_signs;
    return f;
}

int MaassDatum::sign(long d) const {
    CF_DOMAIN_CHECK(d >= 1 && level % d == 0, d << " does not divide the level " << level);
    int s = 1;
    for (const auto& [p, eps] : al_signs)
        if (d % p == 0)
            s *= eps;
    return s;
}

bool VVComponentTerm::admits(const Int& n) const {
    if (n == 0)
        return false;
    return ((n - residue) % modulus) == 0;
}

std::vector<VVComponentTerm> lift_terms(const MaassDatum& f, const DiscElt& mu) {
    CF_DOMAIN_CHECK(f.level == mu.group->level(),
                    "datum level " << f.level << " does not match the discriminant form level "
                                   << mu.group->level());
    const long N = f.level;
    const Rat Q = qd(mu);
    const long q = to_long(q_mu(mu));
    const long a = to_long(Int(Q.get_num()));  // Q = a/q reduced, 0 <= a < q

    std::vector<VVComponentTerm> terms;
    for (long c : divisors(N / q)) {
        VVComponentTerm t;
        t.c = c;
        t.modulus = N / c;
        int coeff = 1;
        for (long p : prime_factors(t.modulus))
            coeff *= -f.al_signs.at(p);
        t.coeff = coeff;
        // n c / N = -Q mod 1, i.e. n = -(N/c) Q mod N/c
        t.residue = (t.modulus - (t.modulus / q) * a % t.modulus) % t.modulus;
        t.scale = frac(c, N);
        terms.push_back(std::move(t));
    }
    return terms;
}

std::map<Rat, std::vector<VVComponentTerm>> lift_components(const MaassDatum& f,
                                                            const DiscPtr& D) {
    CF_DOMAIN_CHECK(D != nullptr, "lift needs a discriminant form");
    CF_DOMAIN_CHECK(f.level == D->level(), "datum level " << f.level
                                                          << " does not match the discriminant "
                                                             "form level "
                                                          << D->level());
    std::map<Rat, std::vector<VVComponentTerm>> out;
    for (const DiscElt& mu : disc_elements(D)) {
        const Rat Q = qd(mu);
        auto it = out.find(Q);
        if (it == out.end())
            out.emplace(Q, lift_terms(f, mu));
    }
    return out;
}

CycNum t_transform_constant(const std::vector<VVComponentTerm>& terms) {
    CF_DOMAIN_CHECK(!terms.empty(), "empty component term list");
    const long N = terms.front().c * terms.front().modulus;
    CycNum constant;
    bool first = true;
    for (const VVComponentTerm& t : terms) {
        CF_LOGIC_CHECK(t.c * t.modulus == N, "terms disagree on the level");
        // e(n c / N) for n = residue + k modulus: the k-part is e(k) = 1
        const CycNum value = CycNum::root_of_unity(frac(t.residue * t.c, N));
        if (first) {
            constant = value;
            first = false;
        } else {
            CF_LOGIC_CHECK(value == constant,
                           "component terms carry different translation constants");
        }
    }
    return constant;
}

bool welldefinedness_check(const DiscPtr& D, int samples) {
    CF_DOMAIN_CHECK(D != nullptr && samples >= 0, "bad welldefinedness arguments");
    const WeilPtr R = WeilRep::of(D);
    const long N = D->level();
    const long zero_index = R->index_of(disc_zero(D));
    std::mt19937 rng(0x1f2e3d4cu);
    std::uniform_int_distribution<long> cu(-6, 6), du(-40, 40), ku(-4, 4);
    int done = 0;
    while (done < samples) {
        const Int c = Int(N) * cu(rng);
        const Int d = du(rng);
        if (c == 0 && d == 0)
            continue;
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
        if (g != 1)
            continue;
        const long k = ku(rng);
        const SL2Mat m{s + k * c, -t + k * d, c, d};
        const std::vector<CycNum> col = R->rho(m).column(zero_index);
        for (long i = 0; i < R->dim(); ++i) {
            if (i == zero_index) {
                if (col[i] != CycNum(1))
                    return false;
            } else if (!col[i].is_zero()) {
                return false;
            }
        }
        ++done;
    }
    return true;
}

} // namespace capform
