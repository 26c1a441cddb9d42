#pragma once
#include "capform/lampoly.hpp"
#include "capform/thetacoeff.hpp"

#include <vector>

namespace capform {

// f_{k,j} = p^{j-1} (p^{k-j+1} - 1)(p^{k-j} + 1) / (p^j - 1)
Rat f_kj(long p, long k, long j);
// |R_k^{(r)}| = prod_{j=1}^{r} f_{k,j}, and 1 for r = 0
Rat R_card(long p, long k, long r);

// Eigenvalues of the three generators of the local Hecke algebra at a prime
// p away from the level, as polynomials in the eigenvalue lam of f.
struct UnramifiedEigenvalues {
    long p = 0;
    LamPoly mu1, mu2, mu3;
};
// mu_1 = p^2 (lam^2 - 2) + p f_{2,1}  (= p^2 lam^2 + p^3 + p), and
// mu_i = |R_2^{(i-1)}| (mu_1 - (p^{i-1} - 1)/(p^i - 1) f_{3,1}) for i = 2, 3.
UnramifiedEigenvalues unramified_mu(long p);

// Rewrites every symbol with a p-primitive argument: c(p^k m) = (-eps/p)^k c(m)
// for a newform that is an Atkin-Lehner eigenform with sign eps at p.
struct NewformReducer {
    long p = 0;
    int eps = 0;

    static NewformReducer at(const MaassDatum& f, long p);
    FormalCoeffSum reduce(const FormalCoeffSum& sum) const;
};
// reduction at every prime of the level (the reducers commute)
FormalCoeffSum newform_reduce(const FormalCoeffSum& sum, const MaassDatum& f);

// Action of the Hecke generator at a level prime p on the coefficient A(beta):
//   u_p >= 1            : p^2 A(p beta) + (p^2 - 1) A(beta) + p^2 A(beta/p)
//   u_p = 0, delta_p = 1: p^2 A(p beta) + (p^2 - 1) A(beta)
//   u_p = 0, delta_p = 0: p^2 A(p beta) - A(beta)
// with every A rewritten over the common normalization sqrt(Nrd(beta)).
FormalCoeffSum ramified_action(const DualVector& beta, long p, const MaassDatum& f);

// Battery of shapes (p^u * n) * base over u <= u_max, n in {1, n_aux}, and
// base in {a vector integral at p, a vector with p in its norm denominator}.
std::vector<DualVector> hecke_battery(const DualPtr& L, long p, long u_max = 2,
                                      long n_aux = 3);

// Verifies ramified_action(beta) = const * A(beta) for every battery member
// after newform reduction, with one shared constant, and returns it. The
// constant must equal p^3 + p^2 + p - 1, which is the unramified-shape value
// p^2 chi(p) + p^2 - 1 + p^2 chi(p)^{-1} at chi(p) = p.
Rat ramified_eigenvalue_check(long p, const std::vector<DualVector>& battery,
                              const MaassDatum& f);

// Brute-force character sums Lambda(x) = e(tr(lambda conj(x))) over coset
// representatives, evaluated in exact cyclotomic arithmetic:
//   X1 = p^{-1}O/O   (p^4 terms): p^4 if lambda in p O', else 0
//   X3 = nonzero p-torsion of O'/O (p^2 - 1 terms): p^2 - 1 if lambda is
//        integral at p, else -1
CycNum char_sum_x1(const DualVector& lambda, long p);
CycNum char_sum_x3(const DualVector& lambda, long p);

struct CharSumCase {
    bool in_p_dual = false;   // lambda in p O'
    bool integral_at_p = false;  // p does not divide the denominator of Q mod 1
    CycNum x1, x3;
    bool matches = false;  // both sums equal their predicted case values
};
CharSumCase coset_character_sums(const DualVector& lambda, long p);

} // namespace capform
