#pragma once
#include "capform/lampoly.hpp"

#include <string>
#include <vector>

namespace capform {

// A Satake parameter entry p^(p_exp) * alpha^(a_exp), with alpha the formal
// root of alpha + alpha^{-1} = lam. Half-integer p_exp only ever occurs in
// the pre-translation GL4 parameters.
struct SatakeMonomial {
    Rat p_exp;
    long a_exp = 0;

    SatakeMonomial inverse() const { return {-p_exp, -a_exp}; }

    friend SatakeMonomial operator*(const SatakeMonomial& x, const SatakeMonomial& y) {
        return {x.p_exp + y.p_exp, x.a_exp + y.a_exp};
    }
    friend SatakeMonomial operator/(const SatakeMonomial& x, const SatakeMonomial& y) {
        return {x.p_exp - y.p_exp, x.a_exp - y.a_exp};
    }
    friend bool operator==(const SatakeMonomial& x, const SatakeMonomial& y) {
        return x.p_exp == y.p_exp && x.a_exp == y.a_exp;
    }
    friend bool operator<(const SatakeMonomial& x, const SatakeMonomial& y) {
        return x.p_exp != y.p_exp ? x.p_exp < y.p_exp : x.a_exp < y.a_exp;
    }
    std::string str() const;
};

// multiset of parameters; the order carries no meaning except where a map
// prescribes the input slots a_1..a_4
using SatakeSet = std::vector<SatakeMonomial>;

// parameters of the lift: {alpha^2, p, 1, 1, p^-1, alpha^-2} away from the
// level, and the degree-4 datum {p, 1, p^-1, p^-1} (chi(p) = p paired with
// its inverse, plus 1 and p^-1) at level primes
SatakeSet satake_lift(bool ramified);
// the GL4 parameter slots {p^(1/2) alpha^(+-1), p^(-1/2) alpha^(+-1)}
SatakeSet gl4_parameters();
// a_1 a_2, a_1 a_4, a_1 a_3, a_2 a_4, a_2 a_3, a_3 a_4
SatakeSet gl4_to_so33(const SatakeSet& a);
// a_1/a_3, a_1/a_4, a_2/a_3, a_2/a_4
SatakeSet gso22_quotients(const SatakeSet& a);

// signed-permutation normal form: each entry replaced by the lexicographically
// larger of itself and its inverse, then sorted
SatakeSet canonical(const SatakeSet& s);
bool inversion_closed(const SatakeSet& s);
// equal up to permutations composed with entry inversions
bool weyl_equivalent(const SatakeSet& x, const SatakeSet& y);

// alpha^k + alpha^{-k} as a polynomial in lam (2, lam, lam^2 - 2, ...)
LamPoly alpha_pair(long k);

// Local factor prod (1 - beta X) over a parameter multiset, expanded in
// Q[lam][X] with the numeric prime substituted for p.
struct LFactorPoly {
    long p = 0;
    std::vector<LamPoly> c;  // c[k] multiplies X^k; c[0] = 1

    long degree() const { return static_cast<long>(c.size()) - 1; }
    LamPoly coeff(long k) const {
        return (k >= 0 && k < static_cast<long>(c.size())) ? c[k] : LamPoly();
    }

    friend LFactorPoly operator*(const LFactorPoly& x, const LFactorPoly& y);
    friend bool operator==(const LFactorPoly& x, const LFactorPoly& y) {
        return x.p == y.p && x.c == y.c;
    }
    friend bool operator!=(const LFactorPoly& x, const LFactorPoly& y) {
        return !(x == y);
    }
    std::string str() const;  // e.g. "1 + (-lam^2 - 3)*X + X^2"
};

// Rejects half-integer p-exponents and any alpha exponent of odd parity
// surviving in an expanded coefficient.
LFactorPoly expand_local_factor(const SatakeSet& s, long p);
LFactorPoly local_factor_unramified(long p);
LFactorPoly local_factor_ramified(long p);

// The standard-factor identities, all three routes expanded independently.
struct StdIdentityReport {
    long p = 0;
    bool ramified = false;
    LFactorPoly lift_factor;   // factor of the lift's parameter multiset
    LFactorPoly tensor_route;  // sym^2-part times zeta-part
    LFactorPoly jo_route;      // second decomposition (level primes only)
    bool multiset_match = false;  // parameter multiset equals the union
    bool pairwise_match = false;  // exterior-square products reproduce the lift
    bool ok = false;
};
StdIdentityReport std_identity_check(long p, bool ramified);

} // namespace capform
