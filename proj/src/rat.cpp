#include "capform/rat.hpp"
#include "capform/check.hpp"

#include <cctype>

namespace capform {

static bool looks_like_int(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Int parse_int(const std::string& s) {
    CF_DOMAIN_CHECK(looks_like_int(s), "bad integer literal '" << s << "'");
    return Int(s);
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rat(parse_int(s));
    }
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    CF_DOMAIN_CHECK(den != 0, "zero denominator in '" << s << "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string int_str(const Int& n) { return n.get_str(); }

std::string rat_str(const Rat& r) { return r.get_str(); }

Int floor_div(const Int& a, const Int& b) {
    CF_DOMAIN_CHECK(b != 0, "division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Rat floor_rat(const Rat& r) {
    return Rat(floor_div(r.get_num(), r.get_den()));
}

Rat mod1(const Rat& r) {
    Rat m = r - floor_rat(r);
    CF_LOGIC_CHECK(m >= 0 && m < 1, "mod1 out of range");
    return m;
}

long to_long(const Int& n) {
    CF_DOMAIN_CHECK(n.fits_slong_p(), "integer " << n.get_str() << " out of long range");
    return n.get_si();
}

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

long valuation(const Int& n, long p) {
    CF_DOMAIN_CHECK(n != 0, "valuation of zero");
    CF_DOMAIN_CHECK(p >= 2, "valuation needs p >= 2");
    Int m = abs(n), q, r;
    Int P(p);
    long v = 0;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), P.get_mpz_t());
        if (r != 0) return v;
        m = q;
        ++v;
    }
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> prime_factors(long n) {
    CF_DOMAIN_CHECK(n > 0, "prime_factors needs n > 0");
    std::vector<long> ps;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::vector<long> divisors(long n) {
    CF_DOMAIN_CHECK(n > 0, "divisors needs n > 0");
    std::vector<long> small, big;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) big.push_back(n / d);
        }
    }
    for (auto it = big.rbegin(); it != big.rend(); ++it) small.push_back(*it);
    return small;
}

bool rat_sqrt(const Rat& r, Rat& root) {
    if (r < 0) return false;
    const Int& n = r.get_num();
    const Int& d = r.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    root = Rat(sn, sd);
    root.canonicalize();
    return true;
}

int legendre(const Int& a, long p) {
    CF_DOMAIN_CHECK(p > 2 && is_prime(p), "legendre needs an odd prime, got " << p);
    Int P(p);
    int r = mpz_legendre(a.get_mpz_t(), P.get_mpz_t());
    return r;
}

} // namespace capform
