#ifndef KEMAE_MA_OPERATOR_HPP
#define KEMAE_MA_OPERATOR_HPP

#include <utility>

#include "kemae/polynomial.hpp"

namespace kemae {

/// Einstein-constant bookkeeping: lambda = 2s/q with gcd(s,q) = 1, and
/// 0 < lambda <= 2(n+1) in dimension n.
struct EinsteinData {
    int s = 1;
    int q = 1;
    int n = 1;

    static EinsteinData make(int s, int q, int n);

    Rational lambda() const { return Rational(2L * s, q); }
    /// Exponent q(n+1)-s of the power-form identity D_n(P)^q = P^(q(n+1)-s).
    int power_exponent() const { return q * (n + 1) - s; }
};

struct VerificationCertificate {
    Polynomial candidate;
    EinsteinData einstein;
    Polynomial residual;
    bool verdict = false;
};

/// The n x n matrix with entry (a,b) = (P*P_ab - P_a*P_b)*x_a + P*P_a*delta_ab.
PolyMatrix ma_matrix(const Polynomial& P);

/// det(ma_matrix(P)) / P^(n-1); the division is always exact for P with a
/// nonzero constant term. A NotDivisibleError escaping this function is an
/// internal inconsistency.
Polynomial d_operator(const Polynomial& P);

/// Residual of the power-form identity D_n(P)^q - P^(q(n+1)-s); verdict is
/// true iff it vanishes identically. For q = 1 this is D_n(P) - P^(n+1-s).
VerificationCertificate mae_residual(const Polynomial& P, const EinsteinData& e);

/// Admissible Einstein constants for a candidate of degree d in dimension n
/// lie in [2n/d, 2(n+1)].
std::pair<Rational, Rational> lambda_bounds(const Polynomial& P, int n);

/// True iff P has constant term 1, coefficient exactly 1 on every
/// first-degree variable term, and all remaining coefficients positive.
bool admissible_candidate_check(const Polynomial& P);

/// Lifts a q=1 solution S to the q-power family member:
/// P = scale_vars(S, 1/q)^q, verified against D_n(P)^q = P^(q(n+1)-s).
Polynomial power_lift(const Polynomial& S, int s, int q, int n);

/// Inverse of power_lift: extracts the exact q-th root and undoes the
/// variable scaling. Throws std::domain_error if P is not a perfect q-th
/// power of the expected shape.
Polynomial power_reduce(const Polynomial& P, int s, int q, int n);

/// Exact q-th root of a polynomial with constant term 1, solved degree by
/// degree; nullopt if no such root exists.
std::optional<Polynomial> nth_root(const Polynomial& P, int q);

}  // namespace kemae

#endif
