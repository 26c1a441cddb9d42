#pragma once
#include "capform/check.hpp"
#include "capform/mat.hpp"
#include "capform/quatalg.hpp"

#include <array>
#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace capform {

class Order;
using OrderPtr = std::shared_ptr<const Order>;

// An order O in a definite quaternion algebra: a rank-4 lattice containing 1,
// closed under multiplication, with integral traces and reduced norms.
class Order {
public:
    // Validates every invariant (1 in O, closure on basis products, even
    // integral positive-definite Gram); throws domain_error on failure.
    static OrderPtr make(const AlgPtr& alg, const std::array<QuatElt, 4>& basis);

    const AlgPtr& algebra() const { return alg_; }
    const std::array<QuatElt, 4>& basis() const { return basis_; }
    // columns = (1,i,j,k)-coordinates of the basis elements
    const QMat& basis_matrix() const { return B_; }
    // Gram matrix A0 with (A0)_st = tr(e_s conj(e_t))
    const QMat& gram() const { return A0_; }
    const QMat& gram_inv() const { return A0inv_; }
    const Int& gram_det() const { return detA0_; }
    // discriminant N of the ambient algebra
    long disc() const { return alg_->disc; }

    // coordinates of x in the order basis (x must lie in the rational span)
    std::array<Rat, 4> span_coords(const QuatElt& x) const;
    bool contains(const QuatElt& x) const;

private:
    Order() = default;
    AlgPtr alg_;
    std::array<QuatElt, 4> basis_;
    QMat B_, A0_, A0inv_;
    Int detA0_;
};

struct MaximalityCertificate {
    bool maximal = false;
    Int gram_det;  // det A0
    Int required;  // N^2
};

// An order is maximal exactly when det(A0) = N^2.
MaximalityCertificate is_maximal(const Order& o);

// Dual-basis transport: with order basis matrix B and Gram A0, the dual basis
// f_t (tr(f_s conj(e_t)) = delta_st) has coordinate matrix B * A0^{-1}.
QMat dual_basis_matrix(const QMat& B, const QMat& A0);

class DualLattice;
using DualPtr = std::shared_ptr<const DualLattice>;

// The dual lattice O' = { x in B(Q) : tr(x O) in Z }, with basis dual to the
// order basis. Norms on O' take values in (1/N) Z.
class DualLattice {
public:
    static DualPtr of(const OrderPtr& o);

    const OrderPtr& order() const { return order_; }
    const std::array<QuatElt, 4>& basis() const { return basis_; }
    const QMat& basis_matrix() const { return F_; }
    // Gram of the dual basis; equals A0^{-1}
    const QMat& gram() const { return G_; }
    // [O' : O] = det A0, certified against the Smith normal form of A0
    const Int& index_in_order() const { return index_; }

    // dual coordinates of an arbitrary element: c_t = tr(x conj(e_t))
    std::array<Rat, 4> coords_of(const QuatElt& x) const;
    QuatElt element(const std::array<Int, 4>& c) const;
    // Nrd(sum c_t f_t) = (1/2) c^T A0^{-1} c
    Rat nrd(const std::array<Int, 4>& c) const;
    // membership of the dual vector c in the order itself: c in A0 Z^4
    bool in_order(const std::array<Int, 4>& c) const;

private:
    DualLattice() = default;
    OrderPtr order_;
    std::array<QuatElt, 4> basis_;
    QMat F_, G_;
    Int index_;
};

// A nonzero lattice vector of O' in dual-basis coordinates.
struct DualVector {
    DualPtr lattice;
    std::array<Int, 4> coords{};

    Rat nrd() const { return lattice->nrd(coords); }
    QuatElt element() const { return lattice->element(coords); }
    bool is_zero() const;

    friend bool operator==(const DualVector& x, const DualVector& y) {
        return x.coords == y.coords && x.lattice->order() == y.lattice->order();
    }
};

// beta = prod_{p | N} p^{u_p} * n * beta0 with beta0 primitive, gcd(n, N) = 1
struct PrimDecomp {
    std::map<long, long> u;  // every p | N appears, value may be 0
    Int n;
    DualVector beta0;
    Int content;  // gcd of the coordinates of beta
};

PrimDecomp primitive_decomposition(const DualVector& beta);

// All beta != 0 with Nrd(beta) <= bound, each exactly once, sorted by
// (Nrd, lexicographic coordinates). Exact rational arithmetic throughout.
std::vector<std::pair<DualVector, Rat>> short_vectors(const DualPtr& d, const Rat& bound);

// Shipped catalog of maximal orders, one representative per discriminant.
std::vector<long> catalog_levels();  // {2, 3, 5, 7, 11, 13, 30}
// Resolution: $CAPFORM_CATALOG_DIR/N<disc>.json if the variable is set, else
// the source-tree data/catalog directory, else a built-in copy.
OrderPtr catalog_order(long disc);
// the built-in copy of the catalog entry (tests keep it in sync with data/)
std::string embedded_catalog_text(long disc);

} // namespace capform
