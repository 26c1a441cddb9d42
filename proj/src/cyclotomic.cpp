#include "capform/cyclotomic.hpp"
#include "capform/check.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace capform {

long euler_phi(long m) {
    CF_DOMAIN_CHECK(m >= 1, "euler_phi needs m >= 1");
    long result = m;
    for (long p : prime_factors(m)) result = result / p * (p - 1);
    return result;
}

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<Int> poly_div_exact(const std::vector<Int>& num, const std::vector<Int>& den) {
    CF_LOGIC_CHECK(!den.empty() && den.back() == 1, "divisor must be monic");
    std::vector<Int> rem = num;
    long dn = static_cast<long>(rem.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    CF_LOGIC_CHECK(dn >= dd, "degree underflow in exact division");
    std::vector<Int> quo(dn - dd + 1);
    for (long k = dn - dd; k >= 0; --k) {
        Int f = rem[k + dd];
        quo[k] = f;
        if (f != 0)
            for (long i = 0; i <= dd; ++i) rem[k + i] -= f * den[i];
    }
    for (const Int& v : rem) CF_LOGIC_CHECK(v == 0, "nonzero remainder in exact division");
    return quo;
}

} // namespace

const std::vector<Int>& cyclotomic_polynomial(long M) {
    CF_DOMAIN_CHECK(M >= 1, "cyclotomic level must be >= 1");
    static std::map<long, std::vector<Int>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
    // Phi_M = (x^M - 1) / prod_{d | M, d < M} Phi_d ; fill the cache bottom-up
    for (long d = 1; d <= M; ++d) {
        if (M % d != 0 || cache.count(d)) continue;
        std::vector<Int> p(d + 1);
        p[0] = -1;
        p[d] = 1;
        for (long e = 1; e < d; ++e)
            if (d % e == 0) p = poly_div_exact(p, cache.at(e));
        cache.emplace(d, std::move(p));
    }
    return cache.at(M);
}

namespace {

// reduce a rational polynomial mod Phi_M, result has size phi(M)
std::vector<Rat> reduce_mod_phi(std::vector<Rat> p, long M) {
    const std::vector<Int>& phi = cyclotomic_polynomial(M);
    long deg_phi = static_cast<long>(phi.size()) - 1;
    for (long k = static_cast<long>(p.size()) - 1; k >= deg_phi; --k) {
        Rat f = p[k];
        if (f != 0)
            for (long i = 0; i <= deg_phi; ++i) p[k - deg_phi + i] -= f * Rat(phi[i]);
    }
    p.resize(deg_phi, Rat(0));
    return p;
}

std::vector<Rat> lift_coeffs(const std::vector<Rat>& c, long from, long to) {
    CF_LOGIC_CHECK(to % from == 0, "level lift must go to a multiple");
    if (from == to) return c;
    long k = to / from;
    std::vector<Rat> p(static_cast<size_t>(c.size() - 1) * k + 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i) p[i * k] = c[i];
    return reduce_mod_phi(std::move(p), to);
}

} // namespace

void CycNum::normalize() {
    for (;;) {
        if (level_ == 1) {
            if (c_.size() != 1) c_.resize(1, Rat(0));
            return;
        }
        long g = 0;
        bool any = false;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            any = true;
            g = std::gcd(g, static_cast<long>(i));
        }
        if (!any) {
            level_ = 1;
            c_.assign(1, Rat(0));
            return;
        }
        g = std::gcd(g, level_);
        if (g == 1) return;
        long nl = level_ / g;
        std::vector<Rat> p(c_.size() / g + 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) p[i / g] = c_[i];
        c_ = reduce_mod_phi(std::move(p), nl);
        level_ = nl;
    }
}

CycNum CycNum::root_of_unity(const Rat& q) {
    Rat m = mod1(q);
    long b = to_long(m.get_den());
    long a = to_long(m.get_num());
    std::vector<Rat> p(static_cast<size_t>(a) + 1, Rat(0));
    p[a] = Rat(1);
    CycNum z(b, reduce_mod_phi(std::move(p), b));
    z.normalize();
    return z;
}

bool CycNum::is_zero() const { return level_ == 1 && c_[0] == 0; }

Rat CycNum::rational_value() const {
    CF_DOMAIN_CHECK(level_ == 1, "value is not rational");
    return c_[0];
}

CycNum CycNum::conj() const {
    if (level_ == 1) return *this;
    std::vector<Rat> p(level_, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        long e = (level_ - static_cast<long>(i)) % level_;
        p[e] += c_[i];
    }
    CycNum z(level_, reduce_mod_phi(std::move(p), level_));
    z.normalize();
    return z;
}

CycNum CycNum::operator-() const {
    CycNum z = *this;
    for (Rat& v : z.c_) v = -v;
    return z;
}

std::vector<Rat> CycNum::coeffs_at_level(long L) const {
    CF_DOMAIN_CHECK(L % level_ == 0, "requested level does not contain stored level");
    return lift_coeffs(c_, level_, L);
}

CycNum& CycNum::operator+=(const CycNum& o) {
    long L = std::lcm(level_, o.level_);
    std::vector<Rat> x = lift_coeffs(c_, level_, L);
    std::vector<Rat> y = lift_coeffs(o.c_, o.level_, L);
    for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    level_ = L;
    c_ = std::move(x);
    normalize();
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    *this += -o;
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    long L = std::lcm(level_, o.level_);
    std::vector<Rat> x = lift_coeffs(c_, level_, L);
    std::vector<Rat> y = lift_coeffs(o.c_, o.level_, L);
    std::vector<Rat> p(x.size() + y.size() - 1, Rat(0));
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) p[i + j] += x[i] * y[j];
    }
    level_ = L;
    c_ = reduce_mod_phi(std::move(p), L);
    normalize();
    return *this;
}

bool operator==(const CycNum& x, const CycNum& y) {
    if (x.level_ == y.level_) return x.c_ == y.c_;
    long L = std::lcm(x.level_, y.level_);
    return lift_coeffs(x.c_, x.level_, L) == lift_coeffs(y.c_, y.level_, L);
}

std::string CycNum::str() const {
    if (level_ == 1) return rat_str(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << rat_str(c_[i]);
        if (i > 0) os << "*z" << level_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace capform
