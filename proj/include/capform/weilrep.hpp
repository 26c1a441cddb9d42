#pragma once
#include "capform/cyclotomic.hpp"
#include "capform/discform.hpp"

#include <array>
#include <map>
#include <memory>
#include <vector>

namespace capform {

struct SL2Mat {
    Int a, b, c, d;

    friend SL2Mat operator*(const SL2Mat& x, const SL2Mat& y) {
        return SL2Mat{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                      x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const SL2Mat& x, const SL2Mat& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    Int det() const { return a * d - b * c; }

    static SL2Mat identity() { return {1, 0, 0, 1}; }
    static SL2Mat S() { return {0, -1, 1, 0}; }
    static SL2Mat T(const Int& k) { return {1, k, 0, 1}; }
};

// one letter of a word in the generators: S, or T^k
struct SL2Tok {
    bool s = false;
    Int k;  // T power; ignored when s
};

struct SL2Word {
    std::vector<SL2Tok> toks;
    SL2Mat target;
};

// Euclidean reduction on the bottom row; the word evaluates to m exactly and
// has O(log max|entry|) letters. Throws domain_error unless det m = 1.
SL2Word word_decompose(const SL2Mat& m);
SL2Mat word_evaluate(const std::vector<SL2Tok>& toks);

class WeilRep;
using WeilPtr = std::shared_ptr<const WeilRep>;

// One tensor factor of a Weil-representation matrix: a p^2 x p^2 matrix over
// Z[x]/(x^p - 1) (x standing for e(1/p)) with a global rational prefactor.
// Kept unreduced so that multiplying by a root of unity is a cyclic shift.
struct WeilComponent {
    long p = 0;
    long n = 0;  // p^2
    Rat pref;
    std::vector<std::vector<Int>> c;  // n*n entries, each a length-p coefficient vector

    CycNum entry(long row, long col) const;
};

// rho_D(M), stored as the tensor product of its components over p | N
// (the form and the representation both split along D = sum of D_p).
class WeilMatrix {
public:
    long dim() const;
    const std::vector<WeilComponent>& components() const { return comps_; }
    // entries in the row/column order of WeilRep::basis()
    CycNum entry(long row, long col) const;
    CycNum entry(const DiscElt& row, const DiscElt& col) const;
    std::vector<CycNum> column(long col) const;
    std::vector<CycNum> column(const DiscElt& col) const;

    WeilMatrix conj_transpose() const;
    bool is_identity() const;
    friend WeilMatrix operator*(const WeilMatrix& x, const WeilMatrix& y);
    // componentwise comparison after canonical reduction (sufficient for
    // equality of the tensor products; never reports a false equality)
    friend bool operator==(const WeilMatrix& x, const WeilMatrix& y);
    friend bool operator!=(const WeilMatrix& x, const WeilMatrix& y) { return !(x == y); }

private:
    friend class WeilRep;
    WeilPtr rep_;
    std::vector<WeilComponent> comps_;
};

// The Weil representation of SL_2(Z) attached to a discriminant form.
class WeilRep : public std::enable_shared_from_this<WeilRep> {
public:
    static WeilPtr of(const DiscPtr& D);

    const DiscPtr& group() const { return D_; }
    long dim() const { return static_cast<long>(basis_.size()); }
    // basis {e_mu}, mu in lexicographic Smith-coordinate order
    const std::vector<DiscElt>& basis() const { return basis_; }
    long index_of(const DiscElt& mu) const;

    // rho(T) e_mu = e(Q(mu)) e_mu
    WeilMatrix rho_T() const;
    // rho(S) e_mu = -(1/N) sum_mu' e(-B(mu,mu')) e_mu'
    WeilMatrix rho_S() const;
    // generator-word product along word_decompose(m)
    WeilMatrix rho(const SL2Mat& m) const;
    // Gamma_0(N) action e_mu -> e(b d Q(mu)) e_{d mu}; requires N | c
    WeilMatrix closed_form(const SL2Mat& m) const;

private:
    WeilRep() = default;
    WeilMatrix from_components(std::vector<WeilComponent> comps) const;

    DiscPtr D_;
    std::vector<DiscElt> basis_;
    std::map<std::array<Int, 4>, long> index_;  // Smith coords -> basis index
    std::vector<long> primes_;
    std::vector<Int> idem_;                        // CRT idempotent scalars
    std::vector<std::vector<DiscElt>> comp_elts_;  // per prime, p_torsion order
    std::vector<std::map<std::array<Int, 4>, long>> comp_index_;
    std::vector<std::vector<long>> comp_qexp_;  // p Q(eps) mod p per component element
    std::vector<std::vector<long>> comp_bexp_;  // n*n row-major: -p B(eps,eps') mod p

    friend class WeilMatrix;
};

} // namespace capform
