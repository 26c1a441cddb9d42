#pragma once
#include "capform/cyclotomic.hpp"
#include "capform/orders.hpp"

#include <memory>
#include <string>
#include <vector>

namespace capform {

class DiscGroup;
using DiscPtr = std::shared_ptr<const DiscGroup>;

// The discriminant form D = O'/O of an order, as a finite quadratic module
// with Q_D = -Nrd mod 1. Elements are written in Smith coordinates: the Gram
// matrix has U * A0 * V = diag(d_1..d_4), a dual vector c maps to U c mod d,
// and the generator of the i-th cyclic factor lifts to column i of U^{-1}.
class DiscGroup {
public:
    static DiscPtr of(const DualPtr& dual);

    const DualPtr& dual_lattice() const { return dual_; }
    const std::array<Int, 4>& invariant_factors() const { return d_; }
    const Int& size() const { return size_; }  // N^2 for a maximal order
    // smallest n with n Q_D = 0; equals N for a maximal order
    long level() const { return level_; }
    // 4 when |D| is even, 0 when odd (cross-checked against the 2-part)
    long oddity() const { return oddity_; }
    // dual coordinates of the canonical lift of Smith coordinates y
    std::array<Int, 4> lift(const std::array<Int, 4>& y) const;
    // Smith coordinates of a dual vector, reduced mod d
    std::array<Int, 4> project(const std::array<Int, 4>& c) const;

private:
    DiscGroup() = default;
    DualPtr dual_;
    std::array<Int, 4> d_;
    IMat U_, Uinv_;
    Int size_;
    long level_ = 1;
    long oddity_ = 0;
};

// Element of a discriminant group in reduced Smith coordinates (0 <= y_i < d_i).
struct DiscElt {
    DiscPtr group;
    std::array<Int, 4> y{};

    bool is_zero() const;

    friend DiscElt operator+(const DiscElt& a, const DiscElt& b);
    friend DiscElt operator-(const DiscElt& a, const DiscElt& b);
    DiscElt operator-() const;
    friend DiscElt operator*(const Int& k, const DiscElt& a);
    friend bool operator==(const DiscElt& a, const DiscElt& b);
    friend bool operator!=(const DiscElt& a, const DiscElt& b) { return !(a == b); }
};

DiscElt disc_zero(const DiscPtr& D);
// reduces arbitrary Smith coordinates mod the invariant factors
DiscElt disc_element(const DiscPtr& D, const std::array<Int, 4>& y);
// class of a dual vector (given by dual coordinates, or as a DualVector)
DiscElt disc_class(const DiscPtr& D, const std::array<Int, 4>& dual_coords);
DiscElt disc_class(const DiscPtr& D, const DualVector& v);
// all |D| elements, in lexicographic Smith-coordinate order
std::vector<DiscElt> disc_elements(const DiscPtr& D);

// Q_D(mu) = -Nrd(lift mu) mod 1, in [0,1); independent of the lift
Rat qd(const DiscElt& mu);
// B_D(mu,nu) = Q_D(mu+nu) - Q_D(mu) - Q_D(nu) mod 1
Rat bd(const DiscElt& mu, const DiscElt& nu);
// reduced denominator of Q_D(mu); a divisor of the level
Int q_mu(const DiscElt& mu);

// sum_{mu in D} e(Q_D(mu)); Gauss-Milgram forces sqrt|D| e(sgn(D)/8) = -N here
CycNum milgram_sum(const DiscPtr& D);

// D_p = { mu : p mu = 0 }, enumerated via the Smith coordinates
std::vector<DiscElt> p_torsion(const DiscPtr& D, long p);

// Genus symbol of the p-component: p^{+2} / p^{-2} for odd p, 2_II^{-2} at 2.
struct PSymbol {
    long p = 0;
    int sign = 0;      // the +-2 exponent's sign
    std::string text;  // e.g. "3^{+2}", "2_II^{-2}"
    int gamma = 0;     // gamma_p(D_p): component Milgram sum = gamma * p
};
PSymbol p_component_symbol(const DiscPtr& D, long p);

// xi_c = (-c | |D_{N/c}|) * prod_{p | N/c} gamma_p(D) for c | N, recomputed
// from the component symbols; equals prod_{p | N/c} (-1) here
int xi_c(const DiscPtr& D, long c);

} // namespace capform
