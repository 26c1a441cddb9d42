#include "capform/weilrep.hpp"

#include "capform/check.hpp"

#include <algorithm>

namespace capform {
namespace {

Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// exponent k with e(q) = zeta_p^k; requires den(q) | p
long root_exp(const Rat& q, long p) {
    const Rat r = mod1(q);
    const long den = to_long(Int(r.get_den()));
    CF_LOGIC_CHECK(p % den == 0, "value " << r << " is not a p-th root exponent at p = " << p);
    return to_long(Int(r.get_num())) * (p / den) % p;
}

WeilComponent comp_identity(long p) {
    WeilComponent m;
    m.p = p;
    m.n = p * p;
    m.pref = Rat(1);
    m.c.assign(static_cast<size_t>(m.n) * m.n, std::vector<Int>(p, Int(0)));
    for (long i = 0; i < m.n; ++i)
        m.c[static_cast<size_t>(i) * m.n + i][0] = 1;
    return m;
}

// left-multiply by rho(T)^k: row mu picks up e(k Q(mu)), a cyclic shift
void apply_T(WeilComponent& m, long kmod, const std::vector<long>& qexp) {
    const long p = m.p;
    std::vector<Int> tmp(p);
    for (long mu = 0; mu < m.n; ++mu) {
        const long off = kmod * qexp[mu] % p;
        if (off == 0)
            continue;
        for (long nu = 0; nu < m.n; ++nu) {
            std::vector<Int>& e = m.c[static_cast<size_t>(mu) * m.n + nu];
            for (long i = 0; i < p; ++i)
                tmp[(i + off) % p] = e[i];
            e = tmp;
        }
    }
}

// left-multiply by rho(S) = -(1/p^2)^(1/2)... prefactor -1/p, kernel e(-B)
void apply_S(WeilComponent& m, const std::vector<long>& bexp) {
    const long p = m.p;
    const long n = m.n;
    std::vector<std::vector<Int>> out(static_cast<size_t>(n) * n, std::vector<Int>(p, Int(0)));
    for (long mu = 0; mu < n; ++mu)
        for (long rho = 0; rho < n; ++rho) {
            const long off = bexp[static_cast<size_t>(mu) * n + rho];
            for (long nu = 0; nu < n; ++nu) {
                const std::vector<Int>& in = m.c[static_cast<size_t>(rho) * n + nu];
                std::vector<Int>& acc = out[static_cast<size_t>(mu) * n + nu];
                for (long i = 0; i < p; ++i)
                    acc[(i + off) % p] += in[i];
            }
        }
    m.c = std::move(out);
    m.pref *= frac(-1, p);
}

// pull the common integer content of the coefficients into the prefactor
void normalize(WeilComponent& m) {
    Int g = 0;
    for (const auto& e : m.c)
        for (const Int& v : e) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1)
                return;
        }
    if (g == 0 || g == 1)
        return;
    for (auto& e : m.c)
        for (Int& v : e)
            v /= g;
    m.pref *= Rat(g);
}

WeilComponent comp_mul(const WeilComponent& x, const WeilComponent& y) {
    CF_LOGIC_CHECK(x.p == y.p && x.n == y.n, "component shape mismatch");
    const long p = x.p;
    const long n = x.n;
    WeilComponent out;
    out.p = p;
    out.n = n;
    out.pref = x.pref * y.pref;
    out.c.assign(static_cast<size_t>(n) * n, std::vector<Int>(p, Int(0)));
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k) {
            const std::vector<Int>& xe = x.c[static_cast<size_t>(i) * n + k];
            for (long j = 0; j < n; ++j) {
                const std::vector<Int>& ye = y.c[static_cast<size_t>(k) * n + j];
                std::vector<Int>& acc = out.c[static_cast<size_t>(i) * n + j];
                for (long s = 0; s < p; ++s) {
                    if (xe[s] == 0)
                        continue;
                    for (long t = 0; t < p; ++t)
                        acc[(s + t) % p] += xe[s] * ye[t];
                }
            }
        }
    normalize(out);
    return out;
}

WeilComponent comp_conj_transpose(const WeilComponent& x) {
    const long p = x.p;
    WeilComponent out;
    out.p = p;
    out.n = x.n;
    out.pref = x.pref;
    out.c.assign(x.c.size(), std::vector<Int>(p));
    for (long i = 0; i < x.n; ++i)
        for (long j = 0; j < x.n; ++j) {
            const std::vector<Int>& e = x.c[static_cast<size_t>(i) * x.n + j];
            std::vector<Int>& o = out.c[static_cast<size_t>(j) * x.n + i];
            for (long k = 0; k < p; ++k)
                o[(p - k) % p] = e[k];
        }
    return out;
}

// canonical coefficients over the power basis 1..zeta^(p-2): value of entry =
// pref * sum c_k zeta^k with sum over 0..p-1, so subtract the top coefficient
std::vector<Rat> canon_entry(const WeilComponent& m, size_t idx) {
    const std::vector<Int>& e = m.c[idx];
    std::vector<Rat> out(static_cast<size_t>(m.p) - 1);
    for (long k = 0; k + 1 < m.p; ++k)
        out[k] = m.pref * Rat(e[k] - e[m.p - 1]);
    return out;
}

bool comp_equal(const WeilComponent& x, const WeilComponent& y) {
    CF_LOGIC_CHECK(x.p == y.p && x.n == y.n, "component shape mismatch");
    for (size_t idx = 0; idx < x.c.size(); ++idx)
        if (canon_entry(x, idx) != canon_entry(y, idx))
            return false;
    return true;
}

} // namespace

SL2Mat word_evaluate(const std::vector<SL2Tok>& toks) {
    SL2Mat m = SL2Mat::identity();
    for (const SL2Tok& t : toks)
        m = m * (t.s ? SL2Mat::S() : SL2Mat::T(t.k));
    return m;
}

SL2Word word_decompose(const SL2Mat& m) {
    CF_DOMAIN_CHECK(m.det() == 1, "word decomposition needs determinant 1, got " << m.det());
    SL2Word w;
    w.target = m;
    Int a = m.a, b = m.b, c = m.c, d = m.d;
    while (c != 0) {
        const Int q = floor_div(a, c);
        if (q != 0) {
            w.toks.push_back({false, q});
            a -= q * c;
            b -= q * d;
        }
        // S^{-1} [[a,b],[c,d]] = [[c,d],[-a,-b]]; |new bottom-left| < |c|
        w.toks.push_back({true, 0});
        const Int na = c, nb = d;
        c = -a;
        d = -b;
        a = na;
        b = nb;
    }
    if (a == 1) {
        if (b != 0)
            w.toks.push_back({false, b});
    } else {
        // a = d = -1: the matrix is S^2 T^{-b}
        w.toks.push_back({true, 0});
        w.toks.push_back({true, 0});
        if (b != 0)
            w.toks.push_back({false, -b});
    }
    CF_LOGIC_CHECK(word_evaluate(w.toks) == m, "generator word fails to evaluate back");
    return w;
}

CycNum WeilComponent::entry(long row, long col) const {
    const std::vector<Int>& e = c[static_cast<size_t>(row) * n + col];
    CycNum out;
    for (long k = 0; k < p; ++k) {
        if (e[k] == 0)
            continue;
        Rat coeff = pref * Rat(e[k]);
        CycNum term = CycNum::root_of_unity(frac(k, p));
        term *= CycNum(coeff);
        out += term;
    }
    return out;
}

WeilPtr WeilRep::of(const DiscPtr& D) {
    CF_DOMAIN_CHECK(D != nullptr, "Weil representation needs a discriminant form");
    std::shared_ptr<WeilRep> rep(new WeilRep());
    rep->D_ = D;
    rep->basis_ = disc_elements(D);
    for (size_t i = 0; i < rep->basis_.size(); ++i)
        rep->index_.emplace(rep->basis_[i].y, static_cast<long>(i));

    const long N = D->level();
    rep->primes_ = prime_factors(N);
    Int comp_total = 1;
    Int idem_total = 0;
    for (long p : rep->primes_) {
        const long m = N / p;
        Int t;
        const Int mi(m), pi(p);
        CF_LOGIC_CHECK(mpz_invert(t.get_mpz_t(), mi.get_mpz_t(), pi.get_mpz_t()) != 0,
                       "complementary part not invertible at p = " << p);
        rep->idem_.push_back(Int(m) * t % N);
        idem_total += rep->idem_.back();

        std::vector<DiscElt> elts = p_torsion(D, p);
        CF_LOGIC_CHECK(static_cast<long>(elts.size()) == p * p,
                       "p-component has order " << elts.size() << " rather than p^2");
        comp_total *= static_cast<long>(elts.size());
        const long n = static_cast<long>(elts.size());

        std::map<std::array<Int, 4>, long> cidx;
        std::vector<long> qexp(n);
        std::vector<long> bexp(static_cast<size_t>(n) * n);
        for (long i = 0; i < n; ++i) {
            cidx.emplace(elts[i].y, i);
            qexp[i] = root_exp(qd(elts[i]), p);
            for (long j = 0; j < n; ++j)
                bexp[static_cast<size_t>(i) * n + j] = root_exp(-bd(elts[i], elts[j]), p);
        }
        rep->comp_elts_.push_back(std::move(elts));
        rep->comp_index_.push_back(std::move(cidx));
        rep->comp_qexp_.push_back(std::move(qexp));
        rep->comp_bexp_.push_back(std::move(bexp));
    }
    CF_LOGIC_CHECK(comp_total == D->size(), "components do not exhaust the group");
    CF_LOGIC_CHECK(mod1(Rat(idem_total - 1) / N) == 0, "idempotent scalars do not sum to 1");
    return rep;
}

long WeilRep::index_of(const DiscElt& mu) const {
    CF_DOMAIN_CHECK(mu.group == D_, "element belongs to a different discriminant form");
    const auto it = index_.find(mu.y);
    CF_LOGIC_CHECK(it != index_.end(), "element missing from the basis index");
    return it->second;
}

WeilMatrix WeilRep::from_components(std::vector<WeilComponent> comps) const {
    WeilMatrix m;
    m.rep_ = shared_from_this();
    m.comps_ = std::move(comps);
    return m;
}

WeilMatrix WeilRep::rho_T() const {
    std::vector<WeilComponent> comps;
    for (size_t i = 0; i < primes_.size(); ++i) {
        WeilComponent c = comp_identity(primes_[i]);
        apply_T(c, 1, comp_qexp_[i]);
        comps.push_back(std::move(c));
    }
    return from_components(std::move(comps));
}

WeilMatrix WeilRep::rho_S() const {
    std::vector<WeilComponent> comps;
    for (size_t i = 0; i < primes_.size(); ++i) {
        WeilComponent c = comp_identity(primes_[i]);
        apply_S(c, comp_bexp_[i]);
        comps.push_back(std::move(c));
    }
    return from_components(std::move(comps));
}

WeilMatrix WeilRep::rho(const SL2Mat& m) const {
    const SL2Word w = word_decompose(m);
    std::vector<WeilComponent> comps;
    for (size_t i = 0; i < primes_.size(); ++i) {
        const long p = primes_[i];
        WeilComponent c = comp_identity(p);
        for (auto it = w.toks.rbegin(); it != w.toks.rend(); ++it) {
            if (it->s) {
                apply_S(c, comp_bexp_[i]);
                normalize(c);
            } else {
                apply_T(c, to_long(it->k % p + p) % p, comp_qexp_[i]);
            }
        }
        comps.push_back(std::move(c));
    }
    return from_components(std::move(comps));
}

WeilMatrix WeilRep::closed_form(const SL2Mat& m) const {
    CF_DOMAIN_CHECK(m.det() == 1, "closed form needs determinant 1, got " << m.det());
    const long N = D_->level();
    CF_DOMAIN_CHECK(m.c % N == 0,
                    "closed form applies to lower-left entries divisible by " << N);
    std::vector<WeilComponent> comps;
    for (size_t i = 0; i < primes_.size(); ++i) {
        const long p = primes_[i];
        const long n = p * p;
        const long bd_mod = to_long((m.b * m.d) % p + p) % p;
        WeilComponent c;
        c.p = p;
        c.n = n;
        c.pref = Rat(1);
        c.c.assign(static_cast<size_t>(n) * n, std::vector<Int>(p, Int(0)));
        for (long nu = 0; nu < n; ++nu) {
            const DiscElt target = m.d * comp_elts_[i][nu];
            const long row = comp_index_[i].at(target.y);
            c.c[static_cast<size_t>(row) * n + nu][bd_mod * comp_qexp_[i][nu] % p] = 1;
        }
        comps.push_back(std::move(c));
    }
    return from_components(std::move(comps));
}

long WeilMatrix::dim() const {
    return rep_->dim();
}

CycNum WeilMatrix::entry(const DiscElt& row, const DiscElt& col) const {
    CycNum out(1);
    for (size_t i = 0; i < comps_.size(); ++i) {
        const DiscElt rp = rep_->idem_[i] * row;
        const DiscElt cp = rep_->idem_[i] * col;
        out *= comps_[i].entry(rep_->comp_index_[i].at(rp.y), rep_->comp_index_[i].at(cp.y));
        if (out.is_zero())
            break;
    }
    return out;
}

CycNum WeilMatrix::entry(long row, long col) const {
    return entry(rep_->basis_.at(row), rep_->basis_.at(col));
}

std::vector<CycNum> WeilMatrix::column(const DiscElt& col) const {
    std::vector<std::vector<CycNum>> comp_cols(comps_.size());
    for (size_t i = 0; i < comps_.size(); ++i) {
        const DiscElt cp = rep_->idem_[i] * col;
        const long ci = rep_->comp_index_[i].at(cp.y);
        comp_cols[i].reserve(comps_[i].n);
        for (long r = 0; r < comps_[i].n; ++r)
            comp_cols[i].push_back(comps_[i].entry(r, ci));
    }
    std::vector<CycNum> out;
    out.reserve(rep_->basis_.size());
    for (const DiscElt& mu : rep_->basis_) {
        CycNum v(1);
        for (size_t i = 0; i < comps_.size(); ++i) {
            const DiscElt rp = rep_->idem_[i] * mu;
            v *= comp_cols[i][rep_->comp_index_[i].at(rp.y)];
            if (v.is_zero())
                break;
        }
        out.push_back(v);
    }
    return out;
}

std::vector<CycNum> WeilMatrix::column(long col) const {
    return column(rep_->basis_.at(col));
}

WeilMatrix WeilMatrix::conj_transpose() const {
    WeilMatrix out;
    out.rep_ = rep_;
    for (const WeilComponent& c : comps_)
        out.comps_.push_back(comp_conj_transpose(c));
    return out;
}

bool WeilMatrix::is_identity() const {
    for (size_t i = 0; i < comps_.size(); ++i)
        if (!comp_equal(comps_[i], comp_identity(comps_[i].p)))
            return false;
    return true;
}

WeilMatrix operator*(const WeilMatrix& x, const WeilMatrix& y) {
    CF_DOMAIN_CHECK(x.rep_->group() == y.rep_->group(),
                    "matrices act on different discriminant forms");
    WeilMatrix out;
    out.rep_ = x.rep_;
    for (size_t i = 0; i < x.comps_.size(); ++i)
        out.comps_.push_back(comp_mul(x.comps_[i], y.comps_[i]));
    return out;
}

bool operator==(const WeilMatrix& x, const WeilMatrix& y) {
    CF_DOMAIN_CHECK(x.rep_->group() == y.rep_->group(),
                    "matrices act on different discriminant forms");
    for (size_t i = 0; i < x.comps_.size(); ++i)
        if (!comp_equal(x.comps_[i], y.comps_[i]))
            return false;
    return true;
}

} // namespace capform
