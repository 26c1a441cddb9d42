#pragma once
#include "capform/rat.hpp"

#include <vector>

namespace capform {

// Polynomial in a formal Hecke eigenvalue "lam" with rational coefficients.
class LamPoly {
public:
    LamPoly() = default;
    explicit LamPoly(const Rat& r) {
        if (r != 0) c_.assign(1, r);
    }
    static LamPoly lam(long degree = 1, const Rat& coeff = Rat(1));

    const std::vector<Rat>& coeffs() const { return c_; } // index = degree
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rat coeff(long d) const {
        return (d >= 0 && d < static_cast<long>(c_.size())) ? c_[d] : Rat(0);
    }

    Rat eval(const Rat& lam_value) const;

    LamPoly operator-() const;
    LamPoly& operator+=(const LamPoly& o);
    LamPoly& operator-=(const LamPoly& o);
    LamPoly& operator*=(const LamPoly& o);
    friend LamPoly operator+(LamPoly x, const LamPoly& y) { return x += y; }
    friend LamPoly operator-(LamPoly x, const LamPoly& y) { return x -= y; }
    friend LamPoly operator*(LamPoly x, const LamPoly& y) { return x *= y; }
    friend bool operator==(const LamPoly& x, const LamPoly& y) { return x.c_ == y.c_; }
    friend bool operator!=(const LamPoly& x, const LamPoly& y) { return !(x == y); }

    std::string str() const; // e.g. "36*lam^2 - 15"

private:
    void trim();
    std::vector<Rat> c_;
};

} // namespace capform
