#pragma once
#include "capform/check.hpp"
#include "capform/rat.hpp"

#include <vector>

namespace capform {

template <class T>
struct Mat {
    long rows = 0, cols = 0;
    std::vector<T> a; // row major

    Mat() = default;
    Mat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Mat(long r, long c, std::vector<T> data) : rows(r), cols(c), a(std::move(data)) {
        CF_DOMAIN_CHECK(static_cast<long>(a.size()) == r * c, "matrix data size mismatch");
    }

    T& operator()(long r, long c) { return a[static_cast<size_t>(r) * cols + c]; }
    const T& operator()(long r, long c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Mat identity(long n) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Mat transpose() const {
        Mat m(cols, rows);
        for (long r = 0; r < rows; ++r)
            for (long c = 0; c < cols; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        CF_DOMAIN_CHECK(x.cols == y.rows, "matrix product shape mismatch");
        Mat m(x.rows, y.cols);
        for (long r = 0; r < x.rows; ++r)
            for (long k = 0; k < x.cols; ++k) {
                const T& v = x(r, k);
                if (v == 0) continue;
                for (long c = 0; c < y.cols; ++c) m(r, c) += v * y(k, c);
            }
        return m;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        CF_DOMAIN_CHECK(static_cast<long>(v.size()) == cols, "matrix apply shape mismatch");
        std::vector<T> out(rows, T(0));
        for (long r = 0; r < rows; ++r)
            for (long c = 0; c < cols; ++c) out[r] += (*this)(r, c) * v[c];
        return out;
    }
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

QMat to_qmat(const IMat& m);
IMat to_imat(const QMat& m); // all entries must be integral

Rat det(const QMat& m);
Int det(const IMat& m);
QMat inverse(const QMat& m); // throws domain_error if singular

// Solve A x = b exactly; returns false if inconsistent. A need not be square.
bool solve(const QMat& A, const std::vector<Rat>& b, std::vector<Rat>& x);

// Smith normal form: U * A * V = D with U, V unimodular and
// d_1 | d_2 | ... | d_r, all nonnegative. Pivot choice: smallest nonzero
// absolute value, first hit in row-major scan of the working submatrix.
struct SnfResult {
    IMat U, D, V;
};
SnfResult snf(const IMat& A);

} // namespace capform
