#include "capform/discform.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace capform {

namespace {

Int pos_mod(const Int& a, const Int& m) {
    if (m == 1) return Int(0);
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

void require_same_group(const DiscElt& a, const DiscElt& b) {
    CF_DOMAIN_CHECK(a.group && b.group && a.group == b.group,
                    "discriminant-form elements from different groups");
}

} // namespace

DiscPtr DiscGroup::of(const DualPtr& dual) {
    CF_DOMAIN_CHECK(dual != nullptr, "discriminant form needs a dual lattice");
    // Memoized per lattice; a live cached group keeps its lattice alive, so
    // the address key can never alias a different lattice.
    static std::mutex cache_mu;
    static std::map<const DualLattice*, std::weak_ptr<const DiscGroup>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = cache.find(dual.get());
        if (it != cache.end())
            if (DiscPtr hit = it->second.lock()) return hit;
    }
    auto D = std::shared_ptr<DiscGroup>(new DiscGroup);
    D->dual_ = dual;

    const SnfResult s = snf(to_imat(dual->order()->gram()));
    D->size_ = 1;
    for (long i = 0; i < 4; ++i) {
        D->d_[i] = s.D(i, i);
        CF_LOGIC_CHECK(D->d_[i] > 0, "Gram matrix of an order is nonsingular");
        D->size_ *= D->d_[i];
    }
    D->U_ = s.U;
    D->Uinv_ = to_imat(inverse(to_qmat(s.U)));

    // level = lcm of the denominators of Q on generators and B on pairs
    Int lev(1);
    std::array<std::array<Int, 4>, 4> gen;
    for (long i = 0; i < 4; ++i) {
        std::array<Int, 4> y{};
        y[i] = 1;
        gen[i] = D->lift(y);
    }
    for (long i = 0; i < 4; ++i) {
        if (D->d_[i] == 1) continue;
        lev = lcm_int(lev, mod1(-dual->nrd(gen[i])).get_den());
        for (long j = i + 1; j < 4; ++j) {
            if (D->d_[j] == 1) continue;
            Rat pair(0);
            for (long s1 = 0; s1 < 4; ++s1)
                for (long t = 0; t < 4; ++t)
                    pair += dual->gram()(s1, t) * Rat(gen[i][s1] * gen[j][t]);
            lev = lcm_int(lev, mod1(-pair).get_den());
        }
    }
    D->level_ = to_long(lev);
    D->oddity_ = (D->level_ % 2 == 0) ? 4 : 0;
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        cache[dual.get()] = D;
    }
    return D;
}

std::array<Int, 4> DiscGroup::lift(const std::array<Int, 4>& y) const {
    std::array<Int, 4> c{};
    for (long r = 0; r < 4; ++r)
        for (long k = 0; k < 4; ++k) c[r] += Uinv_(r, k) * y[k];
    return c;
}

std::array<Int, 4> DiscGroup::project(const std::array<Int, 4>& c) const {
    std::array<Int, 4> y{};
    for (long r = 0; r < 4; ++r) {
        for (long k = 0; k < 4; ++k) y[r] += U_(r, k) * c[k];
        y[r] = pos_mod(y[r], d_[r]);
    }
    return y;
}

bool DiscElt::is_zero() const {
    return std::all_of(y.begin(), y.end(), [](const Int& v) { return v == 0; });
}

DiscElt operator+(const DiscElt& a, const DiscElt& b) {
    require_same_group(a, b);
    DiscElt r{a.group, {}};
    for (long i = 0; i < 4; ++i)
        r.y[i] = pos_mod(a.y[i] + b.y[i], a.group->invariant_factors()[i]);
    return r;
}

DiscElt operator-(const DiscElt& a, const DiscElt& b) {
    require_same_group(a, b);
    DiscElt r{a.group, {}};
    for (long i = 0; i < 4; ++i)
        r.y[i] = pos_mod(a.y[i] - b.y[i], a.group->invariant_factors()[i]);
    return r;
}

DiscElt DiscElt::operator-() const {
    DiscElt r{group, {}};
    for (long i = 0; i < 4; ++i) r.y[i] = pos_mod(-y[i], group->invariant_factors()[i]);
    return r;
}

DiscElt operator*(const Int& k, const DiscElt& a) {
    DiscElt r{a.group, {}};
    for (long i = 0; i < 4; ++i)
        r.y[i] = pos_mod(k * a.y[i], a.group->invariant_factors()[i]);
    return r;
}

bool operator==(const DiscElt& a, const DiscElt& b) {
    require_same_group(a, b);
    return a.y == b.y;
}

DiscElt disc_zero(const DiscPtr& D) {
    CF_DOMAIN_CHECK(D != nullptr, "null discriminant group");
    return DiscElt{D, {}};
}

DiscElt disc_element(const DiscPtr& D, const std::array<Int, 4>& y) {
    CF_DOMAIN_CHECK(D != nullptr, "null discriminant group");
    DiscElt r{D, {}};
    for (long i = 0; i < 4; ++i) r.y[i] = pos_mod(y[i], D->invariant_factors()[i]);
    return r;
}

DiscElt disc_class(const DiscPtr& D, const std::array<Int, 4>& dual_coords) {
    CF_DOMAIN_CHECK(D != nullptr, "null discriminant group");
    return DiscElt{D, D->project(dual_coords)};
}

DiscElt disc_class(const DiscPtr& D, const DualVector& v) {
    CF_DOMAIN_CHECK(D && v.lattice && v.lattice->order() == D->dual_lattice()->order(),
                    "dual vector belongs to a different order");
    return disc_class(D, v.coords);
}

std::vector<DiscElt> disc_elements(const DiscPtr& D) {
    CF_DOMAIN_CHECK(D != nullptr, "null discriminant group");
    CF_DOMAIN_CHECK(D->size() <= 1000000, "discriminant group too large to materialize");
    std::vector<DiscElt> out;
    out.reserve(static_cast<size_t>(to_long(D->size())));
    const auto& d = D->invariant_factors();
    std::array<Int, 4> y{};
    for (y[0] = 0; y[0] < d[0]; ++y[0])
        for (y[1] = 0; y[1] < d[1]; ++y[1])
            for (y[2] = 0; y[2] < d[2]; ++y[2])
                for (y[3] = 0; y[3] < d[3]; ++y[3]) out.push_back(DiscElt{D, y});
    return out;
}

Rat qd(const DiscElt& mu) {
    CF_DOMAIN_CHECK(mu.group != nullptr, "element without a group");
    const auto c = mu.group->lift(mu.y);
    return mod1(-mu.group->dual_lattice()->nrd(c));
}

Rat bd(const DiscElt& mu, const DiscElt& nu) {
    require_same_group(mu, nu);
    return mod1(qd(mu + nu) - qd(mu) - qd(nu));
}

Int q_mu(const DiscElt& mu) {
    return qd(mu).get_den();
}

CycNum milgram_sum(const DiscPtr& D) {
    CycNum sum;
    for (const DiscElt& mu : disc_elements(D)) sum += CycNum::root_of_unity(qd(mu));
    return sum;
}

std::vector<DiscElt> p_torsion(const DiscPtr& D, long p) {
    CF_DOMAIN_CHECK(D != nullptr, "null discriminant group");
    CF_DOMAIN_CHECK(p >= 2 && is_prime(p), "p-torsion needs a prime");
    const auto& d = D->invariant_factors();
    std::array<Int, 4> step;
    std::array<long, 4> count;
    for (long i = 0; i < 4; ++i) {
        const Int g = gcd_int(d[i], Int(p));
        step[i] = d[i] / g;
        count[i] = to_long(g);
    }
    std::vector<DiscElt> out;
    std::array<Int, 4> y{};
    for (long a = 0; a < count[0]; ++a)
        for (long b = 0; b < count[1]; ++b)
            for (long c = 0; c < count[2]; ++c)
                for (long e = 0; e < count[3]; ++e) {
                    y[0] = a * step[0];
                    y[1] = b * step[1];
                    y[2] = c * step[2];
                    y[3] = e * step[3];
                    out.push_back(DiscElt{D, y});
                }
    return out;
}

namespace {

// numerator of a Q/Z value with denominator dividing p, as a residue mod p
long fp_residue(const Rat& q, long p) {
    const Rat v = mod1(q);
    CF_LOGIC_CHECK(Int(p) % v.get_den() == 0, "value denominator must divide p");
    return to_long(v.get_num() * (Int(p) / v.get_den()) % p);
}

long fp_inv(long a, long p) {
    long t = 1, r = a % p;
    CF_LOGIC_CHECK(r != 0, "inverting zero mod p");
    // p is tiny here; brute force
    while ((r * t) % p != 1) ++t;
    return t;
}

} // namespace

PSymbol p_component_symbol(const DiscPtr& D, long p) {
    CF_DOMAIN_CHECK(D != nullptr, "null discriminant group");
    CF_DOMAIN_CHECK(p >= 2 && is_prime(p) && D->level() % p == 0,
                    "prime " << p << " does not divide the level " << D->level());
    const auto& d = D->invariant_factors();
    std::vector<long> idx;
    for (long i = 0; i < 4; ++i)
        if (d[i] % p == 0) idx.push_back(i);
    CF_DOMAIN_CHECK(idx.size() == 2, "p-component of rank " << idx.size() << " not supported");

    std::array<DiscElt, 2> h{DiscElt{D, {}}, DiscElt{D, {}}};
    for (long k = 0; k < 2; ++k) h[k].y[idx[k]] = d[idx[k]] / p;

    PSymbol sym;
    sym.p = p;

    if (p == 2) {
        const Rat half(1, 2);
        CF_DOMAIN_CHECK(qd(h[0]) == half && qd(h[1]) == half && qd(h[0] + h[1]) == half,
                        "2-component is not of type 2_II^{-2}");
        sym.sign = -1;
        sym.text = "2_II^{-2}";
    } else {
        long a1 = fp_residue(qd(h[0]), p);
        long a2 = fp_residue(qd(h[1]), p);
        long b = fp_residue(bd(h[0], h[1]), p);
        if (a1 == 0 && a2 != 0) std::swap(a1, a2);
        if (a1 == 0) {
            // Q = b x y; x = u+v, y = u-v turns it into b u^2 - b v^2
            CF_LOGIC_CHECK(b != 0, "component form is nondegenerate");
            a1 = b;
            a2 = (p - b) % p;
        } else {
            // complete the square: Q = a1 (x + b/(2 a1) y)^2 + (a2 - b^2/(4 a1)) y^2
            const long cross = b * b % p * fp_inv(4 * a1 % p, p) % p;
            a2 = ((a2 - cross) % p + p) % p;
            CF_LOGIC_CHECK(a2 != 0, "component form is nondegenerate");
        }
        sym.sign = legendre(Int(2 * a1), p) * legendre(Int(2 * a2), p);
        sym.text = std::to_string(p) + (sym.sign > 0 ? "^{+2}" : "^{-2}");
    }

    CycNum sum;
    for (const DiscElt& mu : p_torsion(D, p)) sum += CycNum::root_of_unity(qd(mu));
    if (sum == CycNum(p))
        sym.gamma = 1;
    else if (sum == CycNum(-p))
        sym.gamma = -1;
    else
        CF_DOMAIN_CHECK(false, "component Gauss sum is not real; unsupported shape");

    // tie the sum to the symbol: gamma_p = e(-p-excess/8), p-excess = 2(p-1)+k
    int expected;
    if (p == 2) {
        expected = -1;  // e(oddity(2_II^{-2})/8) = e(4/8)
    } else {
        const long excess = (2 * ((p - 1) % 8) + (sym.sign < 0 ? 4 : 0)) % 8;
        CF_LOGIC_CHECK(excess % 4 == 0, "rank-2 p-excess is 0 or 4 mod 8");
        expected = (excess == 0) ? 1 : -1;
    }
    CF_LOGIC_CHECK(sym.gamma == expected, "component Gauss sum disagrees with the genus symbol");
    return sym;
}

int xi_c(const DiscPtr& D, long c) {
    CF_DOMAIN_CHECK(D != nullptr, "null discriminant group");
    const long N = D->level();
    CF_DOMAIN_CHECK(c > 0 && N % c == 0, c << " is not a positive divisor of " << N);
    const long t = N / c;
    const Int tsq = Int(t) * Int(t);
    const Int mc(-c);
    int result = mpz_kronecker(mc.get_mpz_t(), tsq.get_mpz_t());
    for (long p : prime_factors(t)) result *= p_component_symbol(D, p).gamma;
    return result;
}

} // namespace capform
