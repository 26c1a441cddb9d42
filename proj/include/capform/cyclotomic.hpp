#pragma once
#include "capform/rat.hpp"

#include <vector>

namespace capform {

long euler_phi(long m);

// M-th cyclotomic polynomial, monic, as coefficient vector c[0..phi(M)]
// (computed by exact division of x^M - 1, cached, thread-safe).
const std::vector<Int>& cyclotomic_polynomial(long M);

// Element of Q(zeta_M), stored as a polynomial in zeta_M reduced mod Phi_M.
// The stored level is minimal in the structural sense: after reduction the
// exponent support is made coprime to the level (zeta_M^(gi) -> zeta_(M/g)^i),
// so rationals always sit at level 1.
class CycNum {
public:
    CycNum() : level_(1), c_(1, Rat(0)) {}
    explicit CycNum(const Rat& r) : level_(1), c_(1, r) {}
    explicit CycNum(long n) : level_(1), c_(1, Rat(n)) {}

    // e(q) = exp(2*pi*i*q)
    static CycNum root_of_unity(const Rat& q);

    long level() const { return level_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return level_ == 1; }
    Rat rational_value() const; // throws unless level 1

    CycNum conj() const; // zeta -> zeta^(-1)

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    friend CycNum operator+(CycNum x, const CycNum& y) { return x += y; }
    friend CycNum operator-(CycNum x, const CycNum& y) { return x -= y; }
    friend CycNum operator*(CycNum x, const CycNum& y) { return x *= y; }

    friend bool operator==(const CycNum& x, const CycNum& y);
    friend bool operator!=(const CycNum& x, const CycNum& y) { return !(x == y); }

    // coefficients at a level L divisible by the stored level
    std::vector<Rat> coeffs_at_level(long L) const;

    std::string str() const; // "r" when rational, else "c0 + c1*z + ..." over zeta_level

private:
    CycNum(long level, std::vector<Rat> c) : level_(level), c_(std::move(c)) {}
    void normalize();

    long level_;
    std::vector<Rat> c_; // size phi(level_)
};

} // namespace capform
