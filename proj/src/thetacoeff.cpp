#include "capform/thetacoeff.hpp"

#include "capform/check.hpp"

namespace capform {
namespace {

thread_local bool strict_audit = false;
thread_local long diagnostics = 0;

} // namespace

void set_strict_coeff_audit(bool on) {
    strict_audit = on;
}

bool strict_coeff_audit() {
    return strict_audit;
}

long coeff_diagnostic_count() {
    return diagnostics;
}

FormalCoeffSum::FormalCoeffSum(const Rat& norm) : norm_(norm) {
    CF_DOMAIN_CHECK(norm > 0, "prefactor norm must be positive, got " << norm);
}

Rat FormalCoeffSum::coefficient(const Int& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void FormalCoeffSum::add_symbol(const Rat& arg, const Rat& coeff) {
    if (coeff == 0)
        return;
    if (mod1(arg) != 0 || arg >= 0) {
        ++diagnostics;
        CF_LOGIC_CHECK(!strict_audit,
                       "coefficient argument " << arg << " is not a negative integer");
        return;
    }
    const Int m(arg.get_num());
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

FormalCoeffSum FormalCoeffSum::scaled(const Rat& factor) const {
    FormalCoeffSum out(norm_);
    if (factor == 0)
        return out;
    for (const auto& [m, coeff] : terms_)
        out.terms_.emplace(m, coeff * factor);
    return out;
}

FormalCoeffSum FormalCoeffSum::with_norm(const Rat& target) const {
    CF_DOMAIN_CHECK(target > 0, "prefactor norm must be positive, got " << target);
    Rat root;
    CF_DOMAIN_CHECK(rat_sqrt(norm_ / target, root),
                    "norm ratio " << (norm_ / target) << " is not a rational square");
    FormalCoeffSum out = scaled(root);
    out.norm_ = target;
    return out;
}

FormalCoeffSum c_mu(const DualVector& lambda, const DiscElt& mu, const MaassDatum& f) {
    CF_DOMAIN_CHECK(mu.group->dual_lattice()->order() == lambda.lattice->order(),
                    "class and vector come from different lattices");
    CF_DOMAIN_CHECK(f.level == mu.group->level(),
                    "datum level " << f.level << " does not match the lattice level "
                                   << mu.group->level());
    FormalCoeffSum out;
    if (disc_class(mu.group, lambda) != mu)
        return out;
    const long N = f.level;
    const long q = to_long(q_mu(mu));
    for (long c : divisors(N / q)) {
        Rat coeff(1);
        for (long p : prime_factors(N / c))
            coeff *= -f.al_signs.at(p);
        out.add_symbol(-(lambda.nrd() * Rat(N / c)), coeff);
    }
    return out;
}

FormalCoeffSum a_divisor_form(const DualVector& beta, const MaassDatum& f) {
    CF_DOMAIN_CHECK(!beta.is_zero(), "the expansion has no term at the zero vector");
    CF_DOMAIN_CHECK(f.level == beta.lattice->order()->disc(),
                    "datum level " << f.level << " does not match the lattice level "
                                   << beta.lattice->order()->disc());
    const DiscPtr D = DiscGroup::of(beta.lattice);
    const PrimDecomp dec = primitive_decomposition(beta);
    FormalCoeffSum out(beta.nrd());
    for (long d : divisors(to_long(dec.content))) {
        DualVector lambda;
        lambda.lattice = beta.lattice;
        for (int t = 0; t < 4; ++t)
            lambda.coords[t] = beta.coords[t] / d;
        const FormalCoeffSum part = c_mu(lambda, disc_class(D, lambda), f);
        for (const auto& [m, coeff] : part.terms())
            out.add_symbol(Rat(m), coeff);
    }
    return out;
}

FormalCoeffSum a_closed_form(const DualVector& beta, const MaassDatum& f, long* emitted) {
    CF_DOMAIN_CHECK(!beta.is_zero(), "the expansion has no term at the zero vector");
    CF_DOMAIN_CHECK(f.level == beta.lattice->order()->disc(),
                    "datum level " << f.level << " does not match the lattice level "
                                   << beta.lattice->order()->disc());
    const DiscPtr D = DiscGroup::of(beta.lattice);
    const PrimDecomp dec = primitive_decomposition(beta);
    const long q0 = to_long(q_mu(disc_class(D, dec.beta0)));

    const std::vector<long> primes = prime_factors(f.level);
    std::vector<long> tmax;
    for (long p : primes)
        tmax.push_back(2 * dec.u.at(p) + (q0 % p == 0 ? 0 : 1));

    FormalCoeffSum out(beta.nrd());
    long count = 0;
    std::vector<long> t(primes.size(), 0);
    for (;;) {
        Rat denom(1);
        Rat coeff(1);
        for (size_t i = 0; i < primes.size(); ++i) {
            const long e = t[i] - 1;
            Rat pw(primes[i]);
            if (e >= 0)
                for (long k = 0; k < e; ++k)
                    denom *= pw;
            else
                for (long k = 0; k < -e; ++k)
                    denom /= pw;
            if (e % 2 != 0)
                coeff *= -f.al_signs.at(primes[i]);
        }
        for (long d : divisors(to_long(dec.n))) {
            out.add_symbol(-(beta.nrd() / denom / (Rat(d) * Rat(d))), coeff);
            ++count;
        }
        // odometer over the multi-index (t_p)
        size_t i = 0;
        while (i < t.size() && t[i] == tmax[i])
            t[i++] = 0;
        if (i == t.size())
            break;
        ++t[i];
    }
    if (emitted != nullptr)
        *emitted = count;
    return out;
}

bool equivalence_check(const DualVector& beta, const MaassDatum& f) {
    return a_divisor_form(beta, f) == a_closed_form(beta, f);
}

} // namespace capform
