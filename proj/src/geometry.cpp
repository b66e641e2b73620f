#include "kemae/geometry.hpp"

#include <numeric>

#include "kemae/parse.hpp"

namespace kemae {

namespace {

SolutionRecord make_record(const std::string& expr, int s, const std::string& label) {
    Polynomial P = parse_expression(expr, {"x1", "x2"});
    EinsteinData e = EinsteinData::make(s, 1, 2);
    VerificationCertificate cert = mae_residual(P, e);
    if (!cert.verdict || !admissible_candidate_check(P))
        throw std::logic_error("catalog: entry failed verification: " + expr);
    return SolutionRecord{P, e, label, cert};
}

mpz_class binomial(const mpz_class& n, unsigned long k) {
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

}  // namespace

FlagProduct FlagProduct::make(std::vector<int> factor_dims, int q) {
    if (factor_dims.empty()) throw std::invalid_argument("FlagProduct: no factors");
    for (int n : factor_dims)
        if (n < 1) throw std::invalid_argument("FlagProduct: factor dimensions must be positive");
    if (q < 1) throw std::invalid_argument("FlagProduct: q must be positive");
    return FlagProduct{std::move(factor_dims), q};
}

mpz_class FlagProduct::G() const {
    mpz_class g = 0;
    for (int n : factor_dims) g = gcd(g, mpz_class(n + 1));
    return g;
}

Rational FlagProduct::c(int i) const {
    size_t k = factor_dims.size();
    mpz_class num = 1;
    for (size_t j = 0; j < k; ++j)
        if (static_cast<int>(j) != i) num *= factor_dims[j] + 1;
    mpz_class den;
    mpz_pow_ui(den.get_mpz_t(), G().get_mpz_t(), k - 1);
    return Rational(num, den);
}

std::vector<SolutionRecord> catalog(int n) {
    if (n != 2) throw std::invalid_argument("catalog: only n = 2 is classified");
    std::vector<SolutionRecord> records;
    records.push_back(make_record("1+x1+x2", 3, "CP^2, g_FS"));
    records.push_back(make_record("(1+x1)*(1+x2)", 2, "CP^1 x CP^1, g_FS + g_FS"));
    records.push_back(make_record("(1+(x1+x2)/3)^3", 1, "CP^2, 3 g_FS"));
    records.push_back(make_record("(1+x1/2)^2*(1+x2/2)^2", 1, "CP^1 x CP^1, 2 g_FS + 2 g_FS"));
    return records;
}

SolutionRecord q_family(const SolutionRecord& record, int q) {
    if (record.einstein.q != 1)
        throw std::invalid_argument("q_family: base record must have q = 1");
    if (q < 1) throw std::invalid_argument("q_family: q must be positive");
    int s = record.einstein.s;
    int n = record.einstein.n;
    Polynomial P = power_lift(record.polynomial, s, q, n);

    // lambda = 2s/q reduced, so EinsteinData keeps gcd(s, q) = 1.
    int g = std::gcd(s, q);
    EinsteinData e = EinsteinData::make(s / g, q / g, n);
    VerificationCertificate cert = mae_residual(P, e);
    if (!cert.verdict) throw std::logic_error("q_family: lifted record failed verification");

    std::string label = record.label;
    if (q > 1) label += " (scaled by " + std::to_string(q) + ")";
    return SolutionRecord{P, e, label, cert};
}

mpz_class embedding_dimension(const FlagProduct& fp) {
    size_t k = fp.factor_dims.size();
    mpz_class N = 1;
    for (size_t i = 0; i < k; ++i) {
        Rational ci = fp.c(static_cast<int>(i));
        if (ci.den() != 1 || ci.sign() <= 0)
            throw std::domain_error("embedding_dimension: non-integral factor scale c_" +
                                    std::to_string(i + 1) + " = " + ci.to_string());
        mpz_class qc = fp.q * ci.num();
        if (!qc.fits_ulong_p())
            throw std::domain_error("embedding_dimension: q*c_i too large");
        N *= binomial(fp.factor_dims[i] + qc, qc.get_ui());
    }
    return N - 1;
}

VeroneseConstant veronese_constant(int c) {
    if (c < 1) throw std::invalid_argument("veronese_constant: c must be positive");
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(c - 1));
    mpz_class den = 1;
    if (c >= 2) mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(c), static_cast<unsigned long>(c - 2));
    Rational radicand(num, den);
    bool square = mpz_perfect_square_p(radicand.num().get_mpz_t()) &&
                  mpz_perfect_square_p(radicand.den().get_mpz_t());
    return VeroneseConstant{radicand, square};
}

Rational lambda_of(int s, int q, int n) {
    if (s < 1 || q < 1) throw std::invalid_argument("lambda_of: s and q must be positive");
    if (std::gcd(s, q) != 1) throw std::invalid_argument("lambda_of: gcd(s, q) must be 1");
    Rational lambda(2L * s, q);
    if (n >= 0 && lambda > Rational(2L * (n + 1)))
        throw std::invalid_argument("lambda_of: lambda exceeds 2(n+1)");
    return lambda;
}

}  // namespace kemae
