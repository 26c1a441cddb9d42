#pragma once
#include "capform/discform.hpp"
#include "capform/vvlift.hpp"

#include <map>

namespace capform {

// Coefficient arguments must reduce to negative integers; anything else is
// counted as a diagnostic and contributes zero, or throws in strict mode.
void set_strict_coeff_audit(bool on);
bool strict_coeff_audit();
long coeff_diagnostic_count();

struct CoeffAuditGuard {
    explicit CoeffAuditGuard(bool on) : saved_(strict_coeff_audit()) {
        set_strict_coeff_audit(on);
    }
    ~CoeffAuditGuard() { set_strict_coeff_audit(saved_); }
    CoeffAuditGuard(const CoeffAuditGuard&) = delete;
    CoeffAuditGuard& operator=(const CoeffAuditGuard&) = delete;

private:
    bool saved_;
};

// A finite sum sqrt(norm) * sum_m terms[m] * c(m) over formal Fourier
// coefficient symbols c(m), m < 0. The square root is never evaluated: it is
// carried as the pair (norm, terms).
class FormalCoeffSum {
public:
    FormalCoeffSum() : norm_(1) {}
    explicit FormalCoeffSum(const Rat& norm);

    const Rat& norm() const { return norm_; }
    const std::map<Int, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const Int& m) const;

    // += coeff * c(arg); arg must reduce to a negative integer (see audit)
    void add_symbol(const Rat& arg, const Rat& coeff);
    FormalCoeffSum scaled(const Rat& factor) const;
    // rewrite sqrt(norm) * (...) as sqrt(target) * (...); norm/target must be
    // the square of a rational
    FormalCoeffSum with_norm(const Rat& target) const;

    friend bool operator==(const FormalCoeffSum& x, const FormalCoeffSum& y) {
        return x.norm_ == y.norm_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const FormalCoeffSum& x, const FormalCoeffSum& y) {
        return !(x == y);
    }

private:
    Rat norm_;
    std::map<Int, Rat> terms_;
};

// c_mu(lambda) = sum_{c | N/q_mu} prod_{p | N/c}(-eps_p) c(-Nrd(lambda) N/c)
// when lambda's class is mu, and 0 otherwise. Norm is kept at 1.
FormalCoeffSum c_mu(const DualVector& lambda, const DiscElt& mu, const MaassDatum& f);

// A(beta) = sqrt(Nrd(beta)) sum_{d | content(beta)} c_{mu(beta/d)}(beta/d)
FormalCoeffSum a_divisor_form(const DualVector& beta, const MaassDatum& f);

// The same coefficient as one explicit sum over the multi-index (t_p)_{p|N},
// 0 <= t_p <= 2 u_p + delta_p, and d | n, with term
// prod_p (-eps_p)^(t_p - 1) c(-Nrd(beta) / (prod_p p^(t_p-1) d^2)).
// `emitted` (optional) receives the number of symbols before merging.
FormalCoeffSum a_closed_form(const DualVector& beta, const MaassDatum& f,
                             long* emitted = nullptr);

// exact agreement of the two independently computed forms
bool equivalence_check(const DualVector& beta, const MaassDatum& f);

} // namespace capform
