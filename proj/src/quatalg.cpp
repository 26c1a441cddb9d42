#include "capform/quatalg.hpp"
#include "capform/check.hpp"

#include <algorithm>

namespace capform {

namespace {

void require_same_algebra(const QuatElt& x, const QuatElt& y) {
    CF_DOMAIN_CHECK(x.alg && y.alg, "element without parent algebra");
    CF_DOMAIN_CHECK(*x.alg == *y.alg, "elements from different quaternion algebras");
}

// v_p of a nonzero rational
long rat_val(const Rat& r, long p) {
    return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

// the p-unit part u with r = p^v * u, as residue of u modulo m (m a power of p)
Int unit_residue(const Rat& r, long p, long m) {
    long v = rat_val(r, p);
    Int num = r.get_num(), den = r.get_den();
    Int pk(p);
    if (v > 0)
        for (long i = 0; i < v; ++i) num /= p;
    if (v < 0)
        for (long i = 0; i < -v; ++i) den /= p;
    Int M(m), inv;
    int ok = mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t());
    CF_LOGIC_CHECK(ok != 0, "denominator not a unit mod " << m);
    Int res = ((num % M) * inv) % M;
    if (res < 0) res += M;
    return res;
}

} // namespace

int hilbert_symbol(const Rat& a, const Rat& b, long p) {
    CF_DOMAIN_CHECK(a != 0 && b != 0, "hilbert symbol needs nonzero arguments");
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    CF_DOMAIN_CHECK(is_prime(p), "hilbert symbol place must be prime or 0");
    long alpha = rat_val(a, p), beta = rat_val(b, p);
    if (p != 2) {
        Int u = unit_residue(a, p, p), v = unit_residue(b, p, p);
        int sign = 1;
        if ((alpha % 2) && (beta % 2) && ((p - 1) / 2) % 2) sign = -sign;
        if (beta % 2) sign *= legendre(u, p);
        if (alpha % 2) sign *= legendre(v, p);
        return sign;
    }
    Int u = unit_residue(a, 2, 8), v = unit_residue(b, 2, 8);
    auto eps = [](const Int& x) { return ((x - 1) / 2) % 2 != 0; }; // x odd mod 8
    auto omega = [](const Int& x) { return ((x * x - 1) / 8) % 2 != 0; };
    long exp = 0;
    if (eps(u) && eps(v)) ++exp;
    if ((alpha % 2) && omega(v)) ++exp;
    if ((beta % 2) && omega(u)) ++exp;
    return (exp % 2) ? -1 : 1;
}

AlgPtr QuatAlg::make(const Rat& a, const Rat& b) {
    CF_DOMAIN_CHECK(a < 0 && b < 0,
                    "quaternion algebra (" << rat_str(a) << "," << rat_str(b)
                                           << ") is not definite");
    auto alg = std::make_shared<QuatAlg>();
    alg->a = a;
    alg->b = b;
    std::vector<long> candidates{2};
    Int prod = a.get_num() * a.get_den() * b.get_num() * b.get_den();
    prod = abs(prod);
    CF_LOGIC_CHECK(prod.fits_slong_p(), "algebra parameters too large to factor");
    for (long q : prime_factors(prod.get_si()))
        if (q != 2) candidates.push_back(q);
    std::sort(candidates.begin(), candidates.end());
    Int disc(1);
    for (long q : candidates)
        if (hilbert_symbol(a, b, q) == -1) {
            alg->ramified_primes.push_back(q);
            disc *= q;
        }
    // definite: the infinite place is ramified, so the finite count is odd
    CF_LOGIC_CHECK(alg->ramified_primes.size() % 2 == 1,
                   "ramified place count violates reciprocity");
    alg->disc = to_long(disc);
    return alg;
}

QuatElt QuatElt::conj() const {
    QuatElt r = *this;
    for (int t = 1; t < 4; ++t) r.c[t] = -r.c[t];
    return r;
}

Rat QuatElt::trace() const { return Rat(2) * c[0]; }

Rat QuatElt::nrd() const {
    CF_DOMAIN_CHECK(alg, "element without parent algebra");
    const Rat& a = alg->a;
    const Rat& b = alg->b;
    return c[0] * c[0] - a * c[1] * c[1] - b * c[2] * c[2] + a * b * c[3] * c[3];
}

QuatElt operator+(const QuatElt& x, const QuatElt& y) {
    require_same_algebra(x, y);
    QuatElt r = x;
    for (int t = 0; t < 4; ++t) r.c[t] += y.c[t];
    return r;
}

QuatElt operator-(const QuatElt& x, const QuatElt& y) {
    require_same_algebra(x, y);
    QuatElt r = x;
    for (int t = 0; t < 4; ++t) r.c[t] -= y.c[t];
    return r;
}

QuatElt QuatElt::operator-() const {
    QuatElt r = *this;
    for (auto& v : r.c) v = -v;
    return r;
}

QuatElt operator*(const Rat& s, const QuatElt& x) {
    QuatElt r = x;
    for (auto& v : r.c) v *= s;
    return r;
}

QuatElt operator*(const QuatElt& x, const QuatElt& y) {
    require_same_algebra(x, y);
    const Rat& a = x.alg->a;
    const Rat& b = x.alg->b;
    const Rat &w1 = x.c[0], &x1 = x.c[1], &y1 = x.c[2], &z1 = x.c[3];
    const Rat &w2 = y.c[0], &x2 = y.c[1], &y2 = y.c[2], &z2 = y.c[3];
    QuatElt r;
    r.alg = x.alg;
    r.c[0] = w1 * w2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2;
    r.c[1] = w1 * x2 + x1 * w2 - b * (y1 * z2 - z1 * y2);
    r.c[2] = w1 * y2 + y1 * w2 + a * (x1 * z2 - z1 * x2);
    r.c[3] = w1 * z2 + z1 * w2 + (x1 * y2 - y1 * x2);
    return r;
}

bool operator==(const QuatElt& x, const QuatElt& y) {
    require_same_algebra(x, y);
    return x.c == y.c;
}

Rat trace_pairing(const QuatElt& x, const QuatElt& y) {
    require_same_algebra(x, y);
    const Rat& a = x.alg->a;
    const Rat& b = x.alg->b;
    return Rat(2) * (x.c[0] * y.c[0] - a * x.c[1] * y.c[1] - b * x.c[2] * y.c[2] +
                     a * b * x.c[3] * y.c[3]);
}

} // namespace capform
