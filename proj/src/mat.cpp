#include "capform/mat.hpp"

namespace capform {

QMat to_qmat(const IMat& m) {
    QMat q(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
    return q;
}

IMat to_imat(const QMat& m) {
    IMat z(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) {
        CF_DOMAIN_CHECK(m.a[i].get_den() == 1, "matrix entry not integral");
        z.a[i] = m.a[i].get_num();
    }
    return z;
}

Rat det(const QMat& m) {
    CF_DOMAIN_CHECK(m.rows == m.cols, "determinant of non-square matrix");
    QMat w = m;
    long n = w.rows;
    Rat d(1);
    for (long c = 0; c < n; ++c) {
        long piv = -1;
        for (long r = c; r < n; ++r)
            if (w(r, c) != 0) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != c) {
            for (long k = 0; k < n; ++k) std::swap(w(c, k), w(piv, k));
            d = -d;
        }
        d *= w(c, c);
        Rat inv = Rat(1) / w(c, c);
        for (long r = c + 1; r < n; ++r) {
            if (w(r, c) == 0) continue;
            Rat f = w(r, c) * inv;
            for (long k = c; k < n; ++k) w(r, k) -= f * w(c, k);
        }
    }
    return d;
}

Int det(const IMat& m) {
    Rat d = det(to_qmat(m));
    CF_LOGIC_CHECK(d.get_den() == 1, "integer determinant came out fractional");
    return d.get_num();
}

QMat inverse(const QMat& m) {
    CF_DOMAIN_CHECK(m.rows == m.cols, "inverse of non-square matrix");
    long n = m.rows;
    QMat w = m;
    QMat inv = QMat::identity(n);
    for (long c = 0; c < n; ++c) {
        long piv = -1;
        for (long r = c; r < n; ++r)
            if (w(r, c) != 0) { piv = r; break; }
        CF_DOMAIN_CHECK(piv >= 0, "matrix is singular");
        if (piv != c)
            for (long k = 0; k < n; ++k) {
                std::swap(w(c, k), w(piv, k));
                std::swap(inv(c, k), inv(piv, k));
            }
        Rat f = Rat(1) / w(c, c);
        for (long k = 0; k < n; ++k) {
            w(c, k) *= f;
            inv(c, k) *= f;
        }
        for (long r = 0; r < n; ++r) {
            if (r == c || w(r, c) == 0) continue;
            Rat g = w(r, c);
            for (long k = 0; k < n; ++k) {
                w(r, k) -= g * w(c, k);
                inv(r, k) -= g * inv(c, k);
            }
        }
    }
    return inv;
}

bool solve(const QMat& A, const std::vector<Rat>& b, std::vector<Rat>& x) {
    CF_DOMAIN_CHECK(static_cast<long>(b.size()) == A.rows, "solve shape mismatch");
    long m = A.rows, n = A.cols;
    QMat w(m, n + 1);
    for (long r = 0; r < m; ++r) {
        for (long c = 0; c < n; ++c) w(r, c) = A(r, c);
        w(r, n) = b[r];
    }
    std::vector<long> pivot_col;
    long row = 0;
    for (long c = 0; c < n && row < m; ++c) {
        long piv = -1;
        for (long r = row; r < m; ++r)
            if (w(r, c) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (long k = 0; k <= n; ++k) std::swap(w(row, k), w(piv, k));
        Rat f = Rat(1) / w(row, c);
        for (long k = c; k <= n; ++k) w(row, k) *= f;
        for (long r = 0; r < m; ++r) {
            if (r == row || w(r, c) == 0) continue;
            Rat g = w(r, c);
            for (long k = c; k <= n; ++k) w(r, k) -= g * w(row, k);
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (long r = row; r < m; ++r)
        if (w(r, n) != 0) return false;
    x.assign(n, Rat(0));
    for (long i = 0; i < row; ++i) x[pivot_col[i]] = w(i, n);
    return true;
}

namespace {

struct SnfWork {
    IMat U, D, V;

    void swap_rows(long i, long j) {
        if (i == j) return;
        for (long c = 0; c < D.cols; ++c) std::swap(D(i, c), D(j, c));
        for (long c = 0; c < U.cols; ++c) std::swap(U(i, c), U(j, c));
    }
    void swap_cols(long i, long j) {
        if (i == j) return;
        for (long r = 0; r < D.rows; ++r) std::swap(D(r, i), D(r, j));
        for (long r = 0; r < V.rows; ++r) std::swap(V(r, i), V(r, j));
    }
    void add_row(long dst, long src, const Int& f) { // row dst += f * row src
        for (long c = 0; c < D.cols; ++c) D(dst, c) += f * D(src, c);
        for (long c = 0; c < U.cols; ++c) U(dst, c) += f * U(src, c);
    }
    void add_col(long dst, long src, const Int& f) {
        for (long r = 0; r < D.rows; ++r) D(r, dst) += f * D(r, src);
        for (long r = 0; r < V.rows; ++r) V(r, dst) += f * V(r, src);
    }
    void negate_row(long i) {
        for (long c = 0; c < D.cols; ++c) D(i, c) = -D(i, c);
        for (long c = 0; c < U.cols; ++c) U(i, c) = -U(i, c);
    }
};

} // namespace

SnfResult snf(const IMat& A) {
    long m = A.rows, n = A.cols;
    SnfWork w{IMat::identity(m), A, IMat::identity(n)};
    long steps = std::min(m, n);
    for (long s = 0; s < steps; ++s) {
        for (;;) {
            // deterministic pivot: smallest |entry| != 0, row-major first hit
            long pr = -1, pc = -1;
            for (long r = s; r < m; ++r)
                for (long c = s; c < n; ++c) {
                    const Int& v = w.D(r, c);
                    if (v == 0) continue;
                    if (pr < 0 ||
                        mpz_cmpabs(v.get_mpz_t(), w.D(pr, pc).get_mpz_t()) < 0) {
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0) { pr = -1; break; } // submatrix identically zero
            w.swap_rows(s, pr);
            w.swap_cols(s, pc);
            bool clean = true;
            for (long r = s + 1; r < m; ++r) {
                if (w.D(r, s) == 0) continue;
                Int q = floor_div(w.D(r, s), w.D(s, s));
                if (q != 0) w.add_row(r, s, -q);
                if (w.D(r, s) != 0) clean = false;
            }
            for (long c = s + 1; c < n; ++c) {
                if (w.D(s, c) == 0) continue;
                Int q = floor_div(w.D(s, c), w.D(s, s));
                if (q != 0) w.add_col(c, s, -q);
                if (w.D(s, c) != 0) clean = false;
            }
            if (!clean) continue;
            // enforce divisibility of the remaining block by the pivot
            bool divides = true;
            for (long r = s + 1; r < m && divides; ++r)
                for (long c = s + 1; c < n; ++c) {
                    Int rem = w.D(r, c) % w.D(s, s);
                    if (rem != 0) {
                        w.add_row(s, r, Int(1));
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        if (w.D(s, s) < 0) w.negate_row(s);
    }
    return SnfResult{std::move(w.U), std::move(w.D), std::move(w.V)};
}

} // namespace capform
