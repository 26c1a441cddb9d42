#include "capform/spectra.hpp"

#include "capform/check.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace capform {
namespace {

Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

SatakeMonomial power_of_p(long e) { return {Rat(e), 0}; }
SatakeMonomial power_of_alpha(long e) { return {Rat(0), e}; }

// p^e for an integral exponent
Rat p_power(long p, const Rat& e) {
    CF_DOMAIN_CHECK(mod1(e) == 0, "half-integer exponent of p in an expansion: " << e);
    const long k = to_long(Int(e.get_num()));
    Rat r(1);
    for (long i = 0; i < (k >= 0 ? k : -k); ++i)
        r *= p;
    return k >= 0 ? r : frac(1, 1) / r;
}

// Laurent polynomial in alpha (key = exponent) -> polynomial in lam
LamPoly fold_alpha_pairs(const std::map<long, Rat>& laurent) {
    LamPoly out;
    for (const auto& [e, coeff] : laurent) {
        if (coeff == 0 || e < 0)
            continue;
        CF_DOMAIN_CHECK(e % 2 == 0, "odd alpha exponent " << e << " in an expansion");
        if (e == 0) {
            out += LamPoly(coeff);
        } else {
            const auto it = laurent.find(-e);
            CF_DOMAIN_CHECK(it != laurent.end() && it->second == coeff,
                            "expansion is not symmetric under alpha inversion");
            out += LamPoly(coeff) * alpha_pair(e);
        }
    }
    for (const auto& [e, coeff] : laurent)
        if (e < 0 && coeff != 0) {
            CF_DOMAIN_CHECK(e % 2 == 0, "odd alpha exponent " << e << " in an expansion");
            const auto it = laurent.find(-e);
            CF_DOMAIN_CHECK(it != laurent.end() && it->second == coeff,
                            "expansion is not symmetric under alpha inversion");
        }
    return out;
}

} // namespace

std::string SatakeMonomial::str() const {
    if (p_exp == 0 && a_exp == 0)
        return "1";
    std::ostringstream os;
    bool first = true;
    if (p_exp != 0) {
        os << "p^(" << p_exp << ")";
        first = false;
    }
    if (a_exp != 0) {
        if (!first)
            os << "*";
        os << "alpha^(" << a_exp << ")";
    }
    return os.str();
}

SatakeSet satake_lift(bool ramified) {
    if (ramified)
        return {power_of_p(1), power_of_p(0), power_of_p(-1), power_of_p(-1)};
    return {power_of_alpha(2), power_of_p(1),  power_of_p(0),
            power_of_p(0),     power_of_p(-1), power_of_alpha(-2)};
}

SatakeSet gl4_parameters() {
    return {{frac(1, 2), 1}, {frac(1, 2), -1}, {frac(-1, 2), 1}, {frac(-1, 2), -1}};
}

SatakeSet gl4_to_so33(const SatakeSet& a) {
    CF_DOMAIN_CHECK(a.size() == 4, "the GL4 torus map needs 4 slots, got " << a.size());
    return {a[0] * a[1], a[0] * a[3], a[0] * a[2], a[1] * a[3], a[1] * a[2], a[2] * a[3]};
}

SatakeSet gso22_quotients(const SatakeSet& a) {
    CF_DOMAIN_CHECK(a.size() == 4, "the GSO(2,2) map needs 4 slots, got " << a.size());
    return {a[0] / a[2], a[0] / a[3], a[1] / a[2], a[1] / a[3]};
}

SatakeSet canonical(const SatakeSet& s) {
    SatakeSet out = s;
    for (SatakeMonomial& m : out) {
        const SatakeMonomial inv = m.inverse();
        if (m < inv)
            m = inv;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool inversion_closed(const SatakeSet& s) {
    SatakeSet inv;
    inv.reserve(s.size());
    for (const SatakeMonomial& m : s)
        inv.push_back(m.inverse());
    SatakeSet a = s, b = inv;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

bool weyl_equivalent(const SatakeSet& x, const SatakeSet& y) {
    return x.size() == y.size() && canonical(x) == canonical(y);
}

LamPoly alpha_pair(long k) {
    if (k < 0)
        k = -k;
    LamPoly prev(Rat(2));  // alpha^0 + alpha^0
    if (k == 0)
        return prev;
    LamPoly cur = LamPoly::lam();
    for (long i = 1; i < k; ++i) {
        LamPoly next = LamPoly::lam() * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

LFactorPoly operator*(const LFactorPoly& x, const LFactorPoly& y) {
    CF_DOMAIN_CHECK(x.p == y.p, "local factors at different primes: " << x.p << ", " << y.p);
    LFactorPoly out;
    out.p = x.p;
    out.c.assign(x.c.size() + y.c.size() - 1, LamPoly());
    for (size_t i = 0; i < x.c.size(); ++i)
        for (size_t j = 0; j < y.c.size(); ++j)
            out.c[i + j] += x.c[i] * y.c[j];
    return out;
}

std::string LFactorPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero())
            continue;
        if (!first)
            os << " + ";
        if (k == 0)
            os << c[k].str();
        else {
            os << "(" << c[k].str() << ")*X";
            if (k > 1)
                os << "^" << k;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

LFactorPoly expand_local_factor(const SatakeSet& s, long p) {
    CF_DOMAIN_CHECK(p >= 2, "expansion needs a prime, got " << p);
    // X-coefficients as Laurent polynomials in alpha, p substituted numerically
    std::vector<std::map<long, Rat>> coeffs(1);
    coeffs[0][0] = Rat(1);
    for (const SatakeMonomial& m : s) {
        const Rat scale = p_power(p, m.p_exp);
        coeffs.emplace_back();
        for (size_t k = coeffs.size() - 1; k > 0; --k)
            for (const auto& [e, v] : coeffs[k - 1])
                coeffs[k][e + m.a_exp] -= v * scale;
    }
    LFactorPoly out;
    out.p = p;
    out.c.reserve(coeffs.size());
    for (const auto& laurent : coeffs)
        out.c.push_back(fold_alpha_pairs(laurent));
    CF_LOGIC_CHECK(out.c[0] == LamPoly(Rat(1)), "constant term of a local factor is not 1");
    return out;
}

LFactorPoly local_factor_unramified(long p) {
    return expand_local_factor(satake_lift(false), p);
}

LFactorPoly local_factor_ramified(long p) {
    return expand_local_factor(satake_lift(true), p);
}

StdIdentityReport std_identity_check(long p, bool ramified) {
    StdIdentityReport rep;
    rep.p = p;
    rep.ramified = ramified;
    if (!ramified) {
        const SatakeSet lift = satake_lift(false);
        rep.lift_factor = expand_local_factor(lift, p);

        // sym^2 parameters of f paired with the zeta block
        const SatakeSet sym2{power_of_alpha(2), power_of_p(0), power_of_alpha(-2)};
        const SatakeSet zetas{power_of_p(1), power_of_p(0), power_of_p(-1)};
        rep.tensor_route = expand_local_factor(sym2, p) * expand_local_factor(zetas, p);

        SatakeSet a = lift, b = sym2;
        b.insert(b.end(), zetas.begin(), zetas.end());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        rep.multiset_match = a == b;

        // exterior square of the GL4 parameters, slotwise pairwise products
        SatakeSet pairwise = gl4_to_so33(gl4_parameters());
        std::sort(pairwise.begin(), pairwise.end());
        rep.pairwise_match = pairwise == a;

        rep.ok = rep.multiset_match && rep.pairwise_match &&
                 rep.lift_factor == rep.tensor_route;
        return rep;
    }

    rep.lift_factor = expand_local_factor(satake_lift(true), p);
    // Steinberg sym^2 block times the three zeta factors
    rep.tensor_route = expand_local_factor({power_of_p(-1)}, p) *
                       expand_local_factor({power_of_p(1), power_of_p(0), power_of_p(-1)}, p);
    // second decomposition: zeta(s+1) zeta(s-1) times the sigma x sigma block
    rep.jo_route = expand_local_factor({power_of_p(-1), power_of_p(1)}, p) *
                   expand_local_factor({power_of_p(0), power_of_p(-1)}, p);
    rep.multiset_match = true;
    rep.pairwise_match = true;
    rep.ok = rep.lift_factor == rep.tensor_route && rep.lift_factor == rep.jo_route;
    return rep;
}

} // namespace capform
