#include "capform/orders.hpp"

#include <algorithm>

namespace capform {

namespace {

bool integral_solution(const QMat& A, const std::array<Rat, 4>& b, std::array<Rat, 4>& out) {
    std::vector<Rat> rhs(b.begin(), b.end()), x;
    if (!solve(A, rhs, x)) return false;
    std::copy(x.begin(), x.end(), out.begin());
    return std::all_of(x.begin(), x.end(), [](const Rat& q) { return q.get_den() == 1; });
}

bool positive_definite(const QMat& A) {
    // leading principal minors
    for (long k = 1; k <= A.rows; ++k) {
        QMat sub(k, k);
        for (long r = 0; r < k; ++r)
            for (long c = 0; c < k; ++c) sub(r, c) = A(r, c);
        if (det(sub) <= 0) return false;
    }
    return true;
}

} // namespace

OrderPtr Order::make(const AlgPtr& alg, const std::array<QuatElt, 4>& basis) {
    CF_DOMAIN_CHECK(alg != nullptr, "order needs an algebra");
    for (const QuatElt& e : basis)
        CF_DOMAIN_CHECK(e.alg && *e.alg == *alg, "order basis element from a different algebra");

    auto o = std::shared_ptr<Order>(new Order);
    o->alg_ = alg;
    o->basis_ = basis;
    o->B_ = QMat(4, 4);
    for (long t = 0; t < 4; ++t)
        for (long r = 0; r < 4; ++r) o->B_(r, t) = basis[t].c[r];
    CF_DOMAIN_CHECK(det(o->B_) != 0, "order basis is not linearly independent");

    o->A0_ = QMat(4, 4);
    for (long s = 0; s < 4; ++s)
        for (long t = 0; t < 4; ++t) o->A0_(s, t) = trace_pairing(basis[s], basis[t]);
    for (long s = 0; s < 4; ++s)
        for (long t = 0; t < 4; ++t)
            CF_DOMAIN_CHECK(o->A0_(s, t).get_den() == 1,
                            "trace pairing not integral at (" << s << "," << t << ")");
    for (long s = 0; s < 4; ++s)
        CF_DOMAIN_CHECK(o->A0_(s, s).get_num() % 2 == 0,
                        "reduced norm of basis element " << s << " is not integral");
    CF_DOMAIN_CHECK(positive_definite(o->A0_), "Gram matrix is not positive definite");

    const QuatElt one(alg, Rat(1), Rat(0), Rat(0), Rat(0));
    std::array<Rat, 4> coords;
    CF_DOMAIN_CHECK(integral_solution(o->B_, one.c, coords), "1 does not lie in the lattice");
    for (long s = 0; s < 4; ++s)
        for (long t = 0; t < 4; ++t) {
            const QuatElt prod = basis[s] * basis[t];
            CF_DOMAIN_CHECK(integral_solution(o->B_, prod.c, coords),
                            "lattice not closed under multiplication at basis pair ("
                                << s << "," << t << ")");
        }

    o->A0inv_ = inverse(o->A0_);
    const Rat d = det(o->A0_);
    CF_LOGIC_CHECK(d.get_den() == 1 && d > 0, "integral Gram must have positive integer det");
    o->detA0_ = d.get_num();
    return o;
}

std::array<Rat, 4> Order::span_coords(const QuatElt& x) const {
    CF_DOMAIN_CHECK(x.alg && *x.alg == *alg_, "element from a different algebra");
    std::vector<Rat> rhs(x.c.begin(), x.c.end()), y;
    CF_LOGIC_CHECK(solve(B_, rhs, y), "order basis spans the algebra");
    return {y[0], y[1], y[2], y[3]};
}

bool Order::contains(const QuatElt& x) const {
    const auto y = span_coords(x);
    return std::all_of(y.begin(), y.end(), [](const Rat& q) { return q.get_den() == 1; });
}

MaximalityCertificate is_maximal(const Order& o) {
    MaximalityCertificate cert;
    cert.gram_det = o.gram_det();
    cert.required = Int(o.disc()) * Int(o.disc());
    cert.maximal = cert.gram_det == cert.required;
    return cert;
}

QMat dual_basis_matrix(const QMat& B, const QMat& A0) {
    return B * inverse(A0);
}

DualPtr DualLattice::of(const OrderPtr& o) {
    CF_DOMAIN_CHECK(o != nullptr, "dual lattice needs an order");
    auto d = std::shared_ptr<DualLattice>(new DualLattice);
    d->order_ = o;
    d->F_ = dual_basis_matrix(o->basis_matrix(), o->gram());
    for (long t = 0; t < 4; ++t)
        d->basis_[t] = QuatElt(o->algebra(), d->F_(0, t), d->F_(1, t), d->F_(2, t), d->F_(3, t));

    d->G_ = QMat(4, 4);
    for (long s = 0; s < 4; ++s)
        for (long t = 0; t < 4; ++t) d->G_(s, t) = trace_pairing(d->basis_[s], d->basis_[t]);
    CF_LOGIC_CHECK(d->G_ == o->gram_inv(), "dual Gram must equal the inverse Gram");

    // index [O':O] = det A0, certified against the elementary divisors of A0
    const SnfResult s = snf(to_imat(o->gram()));
    Int prod(1);
    for (long i = 0; i < 4; ++i) prod *= s.D(i, i);
    CF_LOGIC_CHECK(prod == o->gram_det(), "elementary divisors must multiply to det A0");
    d->index_ = o->gram_det();
    return d;
}

std::array<Rat, 4> DualLattice::coords_of(const QuatElt& x) const {
    std::array<Rat, 4> c;
    for (long t = 0; t < 4; ++t) c[t] = trace_pairing(x, order_->basis()[t]);
    return c;
}

QuatElt DualLattice::element(const std::array<Int, 4>& c) const {
    QuatElt x(order_->algebra(), Rat(0), Rat(0), Rat(0), Rat(0));
    for (long t = 0; t < 4; ++t) x = x + Rat(c[t]) * basis_[t];
    return x;
}

Rat DualLattice::nrd(const std::array<Int, 4>& c) const {
    Rat q(0);
    for (long s = 0; s < 4; ++s)
        for (long t = 0; t < 4; ++t) q += G_(s, t) * Rat(c[s] * c[t]);
    return q / 2;
}

bool DualLattice::in_order(const std::array<Int, 4>& c) const {
    std::array<Rat, 4> rhs, y;
    for (long t = 0; t < 4; ++t) rhs[t] = Rat(c[t]);
    return integral_solution(order_->gram(), rhs, y);
}

bool DualVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Int& v) { return v == 0; });
}

PrimDecomp primitive_decomposition(const DualVector& beta) {
    CF_DOMAIN_CHECK(!beta.is_zero(), "cannot decompose the zero vector");
    Int m(0);
    for (const Int& v : beta.coords) m = gcd_int(m, v);

    PrimDecomp pd;
    pd.content = m;
    Int rest = m;
    for (long p : beta.lattice->order()->algebra()->ramified_primes) {
        const long up = valuation(rest, p);
        pd.u[p] = up;
        for (long k = 0; k < up; ++k) rest /= p;
    }
    pd.n = rest;
    pd.beta0.lattice = beta.lattice;
    for (long t = 0; t < 4; ++t) pd.beta0.coords[t] = beta.coords[t] / m;
    return pd;
}

namespace {

// Coefficients q with Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
// for the positive-definite form Q(x) = x^T M x.
std::array<std::array<Rat, 4>, 4> squares_decomposition(const QMat& M) {
    std::array<std::array<Rat, 4>, 4> q;
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j) q[i][j] = M(i, j);
    for (long i = 0; i < 4; ++i) {
        CF_LOGIC_CHECK(q[i][i] > 0, "form must be positive definite");
        for (long j = i + 1; j < 4; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (long k = i + 1; k < 4; ++k)
            for (long l = k; l < 4; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    return q;
}

struct Enumerator {
    const std::array<std::array<Rat, 4>, 4>& q;
    Rat cap;
    std::array<Int, 4> x{};
    std::vector<std::array<Int, 4>> found;

    // levels run from 3 down to 0; `used` is the weight of the levels above
    void descend(long i, const Rat& used) {
        if (i < 0) {
            if (used > 0) found.push_back(x);
            return;
        }
        Rat s(0);
        for (long j = i + 1; j < 4; ++j) s += q[i][j] * Rat(x[j]);
        const Rat budget = cap - used;
        const Int lo = floor_rat(-s).get_num();
        for (Int v = lo;; v -= 1) {
            const Rat w = Rat(v) + s;
            const Rat t = q[i][i] * w * w;
            if (t > budget) break;
            x[i] = v;
            descend(i - 1, used + t);
        }
        for (Int v = lo + 1;; v += 1) {
            const Rat w = Rat(v) + s;
            const Rat t = q[i][i] * w * w;
            if (t > budget) break;
            x[i] = v;
            descend(i - 1, used + t);
        }
        x[i] = 0;
    }
};

bool lex_less(const std::array<Int, 4>& a, const std::array<Int, 4>& b) {
    for (long t = 0; t < 4; ++t) {
        if (a[t] != b[t]) return a[t] < b[t];
    }
    return false;
}

} // namespace

std::vector<std::pair<DualVector, Rat>> short_vectors(const DualPtr& d, const Rat& bound) {
    CF_DOMAIN_CHECK(d != nullptr, "short_vectors needs a lattice");
    CF_DOMAIN_CHECK(bound > 0, "short-vector bound must be positive");

    QMat M(4, 4);
    for (long s = 0; s < 4; ++s)
        for (long t = 0; t < 4; ++t) M(s, t) = d->gram()(s, t) / 2;

    const auto q = squares_decomposition(M);
    Enumerator en{q, bound, {}, {}};
    en.descend(3, Rat(0));

    std::vector<std::pair<DualVector, Rat>> out;
    out.reserve(en.found.size());
    for (const auto& c : en.found) out.emplace_back(DualVector{d, c}, d->nrd(c));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return lex_less(a.first.coords, b.first.coords);
    });
    return out;
}

} // namespace capform
