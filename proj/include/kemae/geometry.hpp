#ifndef KEMAE_GEOMETRY_HPP
#define KEMAE_GEOMETRY_HPP

#include <string>
#include <vector>

#include "kemae/ma_operator.hpp"

namespace kemae {

/// A verified solution together with its Einstein data and the geometric
/// model it realizes. Labels are metadata derived from the factorized form,
/// not verified claims.
struct SolutionRecord {
    Polynomial polynomial;
    EinsteinData einstein;
    std::string label;
    VerificationCertificate certificate;
};

/// Product of projective factors CP^{n_1} x ... x CP^{n_k} with overall
/// integer scale q. G = gcd(n_i + 1); c_i = prod_{j!=i} (n_j + 1) / G^(k-1).
struct FlagProduct {
    std::vector<int> factor_dims;
    int q = 1;

    static FlagProduct make(std::vector<int> factor_dims, int q);

    mpz_class G() const;
    /// The metric scale of factor i; integral whenever G divides every n_j+1.
    Rational c(int i) const;
};

/// The four verified solutions in dimension 2, with (s, q) =
/// (3,1), (2,1), (1,1), (1,1). Only n = 2 is supported.
std::vector<SolutionRecord> catalog(int n = 2);

/// Member of the q-power family of a q=1 record: polynomial power_lift-ed,
/// Einstein constant 2s/q (stored in reduced form when gcd(s, q) > 1).
SolutionRecord q_family(const SolutionRecord& record, int q);

/// N with target projective space CP^N:
/// N = prod_i C(n_i + q*c_i, q*c_i) - 1, exact big-integer binomials.
mpz_class embedding_dimension(const FlagProduct& fp);

struct VeroneseConstant {
    Rational radicand;  // (c-1)! / c^(c-2); the normalization is its square root
    bool perfect_square = false;
};

VeroneseConstant veronese_constant(int c);

/// lambda = 2s/q for coprime (s, q); when n >= 0 is supplied, additionally
/// checks 0 < lambda <= 2(n+1).
Rational lambda_of(int s, int q, int n = -1);

}  // namespace kemae

#endif
