#pragma once
#include "capform/check.hpp"
#include "capform/rat.hpp"

#include <array>
#include <memory>
#include <vector>

namespace capform {

// Definite rational quaternion algebra (a,b / Q): i^2 = a, j^2 = b, ij = -ji = k.
struct QuatAlg;
using AlgPtr = std::shared_ptr<const QuatAlg>;

struct QuatAlg {
    Rat a, b;
    std::vector<long> ramified_primes; // finite ramified places, ascending
    long disc = 1;                     // product of the finite ramified primes

    // throws domain_error unless a < 0 and b < 0
    static AlgPtr make(const Rat& a, const Rat& b);

    friend bool operator==(const QuatAlg& x, const QuatAlg& y) {
        return x.a == y.a && x.b == y.b;
    }
};

struct QuatElt {
    AlgPtr alg;
    std::array<Rat, 4> c{}; // coordinates over 1, i, j, k

    QuatElt() = default;
    QuatElt(AlgPtr algebra, Rat w, Rat x, Rat y, Rat z)
        : alg(std::move(algebra)), c{std::move(w), std::move(x), std::move(y), std::move(z)} {}

    QuatElt conj() const;
    Rat trace() const;
    Rat nrd() const;

    friend QuatElt operator+(const QuatElt& x, const QuatElt& y);
    friend QuatElt operator-(const QuatElt& x, const QuatElt& y);
    friend QuatElt operator*(const QuatElt& x, const QuatElt& y);
    QuatElt operator-() const;
    friend QuatElt operator*(const Rat& s, const QuatElt& x);
    friend bool operator==(const QuatElt& x, const QuatElt& y);
    friend bool operator!=(const QuatElt& x, const QuatElt& y) { return !(x == y); }
};

// tr(x * conj(y)); the bilinear form behind every Gram matrix here
Rat trace_pairing(const QuatElt& x, const QuatElt& y);

// Hilbert symbol (a,b)_p over Q_p; p = 0 means the infinite place.
int hilbert_symbol(const Rat& a, const Rat& b, long p);

} // namespace capform
