#pragma once
#include "capform/discform.hpp"

#include <map>
#include <optional>
#include <vector>

namespace capform {

// A weight-0 Maass cusp form datum for square-free level N with an odd number
// of prime factors: Atkin-Lehner prime signs eps_p, with the Fourier
// coefficients c(n) and the spectral parameter r kept formal (numeric values
// are only ever attached by the evaluation layer).
struct MaassDatum {
    long level = 0;
    std::map<long, int> al_signs;  // p | N -> +-1

    static MaassDatum make(long level, const std::map<long, int>& al_signs);
    // eps_d = prod_{p | d} eps_p for d | N (Atkin-Lehner signs compose)
    int sign(long d) const;
};

// One term of the component f_mu of the vector-valued lift: the sum over
// n = residue mod modulus, n != 0, of coeff * c(n) * W(4 pi |n| v scale)
// * e(n u scale). Everything is determined by the class value Q_D(mu).
struct VVComponentTerm {
    long c = 0;        // divisor of N/q_mu
    int coeff = 0;     // eps_{N/c} * (-1)^{omega(N/c)}
    long modulus = 0;  // N/c
    long residue = 0;  // n = residue mod modulus, 0 <= residue < modulus
    Rat scale;         // c/N

    bool admits(const Int& n) const;  // n != 0 and n = residue mod modulus

    friend bool operator==(const VVComponentTerm& a, const VVComponentTerm& b) {
        return a.c == b.c && a.coeff == b.coeff && a.modulus == b.modulus &&
               a.residue == b.residue && a.scale == b.scale;
    }
    friend bool operator!=(const VVComponentTerm& a, const VVComponentTerm& b) {
        return !(a == b);
    }
};

// term list of f_mu; depends on mu only through Q_D(mu)
std::vector<VVComponentTerm> lift_terms(const MaassDatum& f, const DiscElt& mu);

// all component term lists, keyed by the class value Q_D(mu) in [0,1)
std::map<Rat, std::vector<VVComponentTerm>> lift_components(const MaassDatum& f,
                                                            const DiscPtr& D);

// The constant e(n c / N) shared by every admissible n of every term of a
// class: equals e(-Q_D(mu)). (The translation tau -> tau + 1 multiplies the
// class component by this constant, the conjugate of the e(+Q_D(mu)) by which
// rho(T) scales e_mu.) Throws logic_bug if the terms disagree.
CycNum t_transform_constant(const std::vector<VVComponentTerm>& terms);

// For `samples` pseudorandom gamma in Gamma_0(N), check rho(gamma) e_0 = e_0
// (what makes averaging over coset representatives well defined).
bool welldefinedness_check(const DiscPtr& D, int samples);

} // namespace capform
