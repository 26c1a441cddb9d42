#include "capform/hecke.hpp"

#include <optional>

namespace capform {
namespace {

Rat frac(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int ipow(long p, long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e));
    return r;
}

// p^e for possibly negative e
Rat rpow(long p, long e) {
    return e >= 0 ? Rat(ipow(p, e)) : frac(1, ipow(p, -e));
}

// out += factor * part, with part rewritten over the normalization of out
void accumulate(FormalCoeffSum& out, const FormalCoeffSum& part, const Rat& factor) {
    const FormalCoeffSum aligned = part.with_norm(out.norm());
    for (const auto& [m, coeff] : aligned.terms())
        out.add_symbol(Rat(m), coeff * factor);
}

} // namespace

Rat f_kj(long p, long k, long j) {
    CF_DOMAIN_CHECK(p >= 2, "f_kj needs a prime p, got " << p);
    CF_DOMAIN_CHECK(k >= 0 && j >= 1, "f_kj indices out of range: k=" << k << " j=" << j);
    return rpow(p, j - 1) * (rpow(p, k - j + 1) - 1) * (rpow(p, k - j) + 1) /
           (rpow(p, j) - 1);
}

Rat R_card(long p, long k, long r) {
    CF_DOMAIN_CHECK(k >= 1 && r >= 0 && r <= k,
                    "coset cardinality indices out of range: k=" << k << " r=" << r);
    Rat card(1);
    for (long j = 1; j <= r; ++j)
        card *= f_kj(p, k, j);
    return card;
}

UnramifiedEigenvalues unramified_mu(long p) {
    UnramifiedEigenvalues ev;
    ev.p = p;
    const LamPoly lam2 = LamPoly::lam(2);
    ev.mu1 = LamPoly(Rat(ipow(p, 2))) * (lam2 - LamPoly(Rat(2))) +
             LamPoly(Rat(p) * f_kj(p, 2, 1));
    const LamPoly direct = LamPoly::lam(2, Rat(ipow(p, 2))) +
                           LamPoly(Rat(ipow(p, 3) + p));
    CF_LOGIC_CHECK(ev.mu1 == direct,
                   "eigenvalue polynomial mismatch at p=" << p << ": "
                       << ev.mu1.str() << " vs " << direct.str());
    const Rat f31 = f_kj(p, 3, 1);
    ev.mu2 = LamPoly(R_card(p, 2, 1)) *
             (ev.mu1 - LamPoly((rpow(p, 1) - 1) / (rpow(p, 2) - 1) * f31));
    ev.mu3 = LamPoly(R_card(p, 2, 2)) *
             (ev.mu1 - LamPoly((rpow(p, 2) - 1) / (rpow(p, 3) - 1) * f31));
    return ev;
}

NewformReducer NewformReducer::at(const MaassDatum& f, long p) {
    CF_DOMAIN_CHECK(f.al_signs.count(p), "no sign at p=" << p << " for level " << f.level);
    return NewformReducer{p, f.al_signs.at(p)};
}

FormalCoeffSum NewformReducer::reduce(const FormalCoeffSum& sum) const {
    FormalCoeffSum out(sum.norm());
    for (const auto& [m, coeff] : sum.terms()) {
        const long k = valuation(-m, p);
        const Rat factor = (k % 2 ? Rat(-eps) : Rat(1)) * rpow(p, -k);
        out.add_symbol(frac(m, ipow(p, k)), coeff * factor);
    }
    return out;
}

FormalCoeffSum newform_reduce(const FormalCoeffSum& sum, const MaassDatum& f) {
    FormalCoeffSum out = sum;
    for (long p : prime_factors(f.level))
        out = NewformReducer::at(f, p).reduce(out);
    return out;
}

FormalCoeffSum ramified_action(const DualVector& beta, long p, const MaassDatum& f) {
    CF_DOMAIN_CHECK(!beta.is_zero(), "Hecke action needs a nonzero vector");
    const long level = beta.lattice->order()->disc();
    CF_DOMAIN_CHECK(level == f.level,
                    "level mismatch: lattice " << level << " vs datum " << f.level);
    CF_DOMAIN_CHECK(level % p == 0, "p=" << p << " does not divide the level " << level);

    const PrimDecomp dec = primitive_decomposition(beta);
    const long u_p = dec.u.at(p);
    DualVector scaled = beta;
    for (auto& c : scaled.coords)
        c *= p;

    FormalCoeffSum out(beta.nrd());
    accumulate(out, a_closed_form(scaled, f), Rat(p * p));
    if (u_p >= 1) {
        accumulate(out, a_closed_form(beta, f), Rat(p * p - 1));
        DualVector shrunk = beta;
        for (auto& c : shrunk.coords) {
            CF_LOGIC_CHECK(c % p == 0, "coordinates not divisible at u_p >= 1");
            c /= p;
        }
        accumulate(out, a_closed_form(shrunk, f), Rat(p * p));
    } else {
        const DiscPtr D = DiscGroup::of(beta.lattice);
        const bool delta = q_mu(disc_class(D, dec.beta0)) % p != 0;
        accumulate(out, a_closed_form(beta, f), delta ? Rat(p * p - 1) : Rat(-1));
    }
    return out;
}

std::vector<DualVector> hecke_battery(const DualPtr& L, long p, long u_max, long n_aux) {
    CF_DOMAIN_CHECK(u_max >= 0 && n_aux >= 1, "bad battery shape parameters");
    const DiscPtr D = DiscGroup::of(L);
    std::optional<DualVector> integral, fractional;
    for (const auto& [v, q] : short_vectors(L, Rat(2))) {
        if (primitive_decomposition(v).content != 1)
            continue;
        const bool int_p = q_mu(disc_class(D, v)) % p != 0;
        if (int_p && !integral)
            integral = v;
        if (!int_p && !fractional)
            fractional = v;
        if (integral && fractional)
            break;
    }
    CF_LOGIC_CHECK(integral && fractional, "battery base vectors not found at p=" << p);

    std::vector<DualVector> battery;
    for (long u = 0; u <= u_max; ++u)
        for (long n : {1L, n_aux})
            for (const DualVector& base : {*integral, *fractional}) {
                DualVector beta = base;
                const Int mult = ipow(p, u) * n;
                for (auto& c : beta.coords)
                    c *= mult;
                battery.push_back(beta);
            }
    return battery;
}

Rat ramified_eigenvalue_check(long p, const std::vector<DualVector>& battery,
                              const MaassDatum& f) {
    CF_DOMAIN_CHECK(!battery.empty(), "empty battery");
    const Rat expect = Rat(p) * p * p + p * p + p - 1;
    const Rat chi(p);
    CF_LOGIC_CHECK(Rat(p) * p * chi + p * p - 1 + Rat(p) * p / chi == expect,
                   "constant disagrees with the unramified shape at chi(p)=p");

    std::optional<Rat> ratio;
    for (const DualVector& beta : battery) {
        const FormalCoeffSum lhs = newform_reduce(ramified_action(beta, p, f), f);
        const FormalCoeffSum rhs = newform_reduce(a_closed_form(beta, f), f);
        CF_DOMAIN_CHECK(!rhs.is_zero(), "battery member reduced to the zero sum");
        const auto& [m0, c0] = *rhs.terms().begin();
        const Rat r = lhs.coefficient(m0) / c0;
        CF_DOMAIN_CHECK(lhs == rhs.scaled(r),
                        "action is not proportional to the coefficient at p=" << p);
        CF_DOMAIN_CHECK(!ratio || *ratio == r,
                        "proportionality constant varies across the battery");
        ratio = r;
    }
    CF_DOMAIN_CHECK(*ratio == expect, "eigenvalue " << *ratio << " differs from expected");
    return *ratio;
}

CycNum char_sum_x1(const DualVector& lambda, long p) {
    CF_DOMAIN_CHECK(lambda.lattice->order()->disc() % p == 0,
                    "p=" << p << " does not divide the level");
    CycNum acc;
    std::array<long, 4> m{};
    for (m[0] = 0; m[0] < p; ++m[0])
        for (m[1] = 0; m[1] < p; ++m[1])
            for (m[2] = 0; m[2] < p; ++m[2])
                for (m[3] = 0; m[3] < p; ++m[3]) {
                    Int dot(0);
                    for (int t = 0; t < 4; ++t)
                        dot += m[t] * lambda.coords[t];
                    acc += CycNum::root_of_unity(mod1(frac(dot, p)));
                }
    return acc;
}

CycNum char_sum_x3(const DualVector& lambda, long p) {
    CF_DOMAIN_CHECK(lambda.lattice->order()->disc() % p == 0,
                    "p=" << p << " does not divide the level");
    const DiscPtr D = DiscGroup::of(lambda.lattice);
    const QMat& G = lambda.lattice->gram();
    CycNum acc;
    for (const DiscElt& x : p_torsion(D, p)) {
        if (x.is_zero())
            continue;
        const std::array<Int, 4> xc = D->lift(x.y);
        Rat dot(0);
        for (int s = 0; s < 4; ++s)
            for (int t = 0; t < 4; ++t)
                dot += Rat(lambda.coords[s]) * G(s, t) * Rat(xc[t]);
        acc += CycNum::root_of_unity(mod1(dot));
    }
    return acc;
}

CharSumCase coset_character_sums(const DualVector& lambda, long p) {
    CharSumCase out;
    out.in_p_dual = true;
    for (const Int& c : lambda.coords)
        out.in_p_dual = out.in_p_dual && c % p == 0;
    const DiscPtr D = DiscGroup::of(lambda.lattice);
    out.integral_at_p = q_mu(disc_class(D, lambda)) % p != 0;
    out.x1 = char_sum_x1(lambda, p);
    out.x3 = char_sum_x3(lambda, p);
    out.matches = out.x1 == CycNum(out.in_p_dual ? Rat(ipow(p, 4)) : Rat(0)) &&
                  out.x3 == CycNum(out.integral_at_p ? Rat(p * p - 1) : Rat(-1));
    return out;
}

} // namespace capform
