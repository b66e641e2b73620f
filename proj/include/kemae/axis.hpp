#ifndef KEMAE_AXIS_HPP
#define KEMAE_AXIS_HPP

#include <optional>
#include <vector>

#include "kemae/polynomial.hpp"

namespace kemae {

/// Restrictions of a candidate to one coordinate axis: p is the candidate
/// itself, q_profile the restriction of the product of the off-axis
/// partial derivatives. Both have constant term 1 for admissible input.
struct AxisProfile {
    Polynomial p;
    Polynomial q_profile;
    int axis_index = 0;
};

/// One admissible pair of initial conditions on the line x2 = 0:
/// p0 = (1+t/k)^k and p1 = (1+t/k)^(k(1-s)+2), with s*k in {2, 3}.
struct CauchyDatum {
    int s = 0;
    int k = 0;
    Polynomial p0;
    Polynomial p1;

    /// Validates the Diophantine admissibility condition and builds the
    /// profiles. Throws std::invalid_argument for inadmissible (s, k).
    static CauchyDatum make(int s, int k);
};

/// Distinct nonzero roots -r_i with positive multiplicities k_i.
struct RootSystem {
    std::vector<Rational> roots;
    std::vector<int> multiplicities;

    static RootSystem make(std::vector<Rational> roots, std::vector<int> multiplicities);
};

AxisProfile axis_profile(const Polynomial& P, int axis_index);

/// Returns k = deg p if p equals (1+t/k)^k exactly, nullopt otherwise.
std::optional<int> binomial_power_match(const Polynomial& p);

/// True iff p is (1+t/k)^k with k admitted for (s, n), q_profile is
/// (1+t/k)^(k(n-s-1)+2), and D_1(p)*q_profile = p^(n-s+1) exactly.
bool axis_consistency_check(const AxisProfile& profile, int s, int n);

/// (1+t/k)^k, the forced axis restriction shape.
Polynomial binomial_power(int k);

/// Left-hand side of the root-multiplicity compatibility equation:
/// sum_i k_i r_i prod_{j!=i} (t+r_j)^2 - prod_i r_i^2.
Polynomial root_system_lhs(const RootSystem& rs);

/// Determinant of the R x R matrix formed by the top R coefficients of
/// root_system_lhs read as linear forms in the multiplicities. Closed form:
/// R! * prod r_i * prod_{i<j} (r_i - r_j).
Rational vandermonde_det(const std::vector<Rational>& roots);

/// All Cauchy data admitted for the given s at n = 2: exactly the positive
/// integers k with s*k in {2, 3}.
std::vector<CauchyDatum> enumerate_cauchy_data(int s, int n = 2);

/// Bivariate low-order skeleton every solution with symmetric axis data
/// (k, k) must match outside terms divisible by x1^2*x2^2.
Polynomial soln2_template(int k, int s);

}  // namespace kemae

#endif
