#include "kemae/ma_operator.hpp"

#include <numeric>

namespace kemae {

namespace {

Polynomial homogeneous_part(const Polynomial& p, int degree) {
    Polynomial r(p.var_count());
    for (const auto& [e, c] : p.terms())
        if (e.total_degree() == degree) r.add_term(e, c);
    return r;
}

}  // namespace

EinsteinData EinsteinData::make(int s, int q, int n) {
    if (s < 1 || q < 1 || n < 1)
        throw std::invalid_argument("EinsteinData: s, q, n must be positive");
    if (std::gcd(s, q) != 1)
        throw std::invalid_argument("EinsteinData: gcd(s, q) must be 1");
    if (q * (n + 1) - s < 0)
        throw std::invalid_argument("EinsteinData: lambda exceeds 2(n+1)");
    return EinsteinData{s, q, n};
}

PolyMatrix ma_matrix(const Polynomial& P) {
    if (P.is_zero()) throw std::invalid_argument("ma_matrix: zero polynomial");
    int n = P.var_count();
    std::vector<Polynomial> grad;
    grad.reserve(n);
    for (int i = 0; i < n; ++i) grad.push_back(partial(P, i));

    PolyMatrix m(n, n);
    for (int a = 0; a < n; ++a) {
        Polynomial xa = Polynomial::variable(n, a);
        for (int b = 0; b < n; ++b) {
            Polynomial entry = (P * partial(grad[a], b) - grad[a] * grad[b]) * xa;
            if (a == b) entry += P * grad[a];
            m.at(a, b) = entry;
        }
    }
    return m;
}

Polynomial d_operator(const Polynomial& P) {
    if (P.constant_term().is_zero())
        throw std::invalid_argument("d_operator: candidate must have a nonzero constant term");
    int n = P.var_count();
    Polynomial det = determinant(ma_matrix(P));
    if (n == 1) return det;
    try {
        return exact_divide(det, pow(P, n - 1));
    } catch (const NotDivisibleError&) {
        throw std::logic_error("d_operator: det(ma_matrix(P)) not divisible by P^(n-1)");
    }
}

VerificationCertificate mae_residual(const Polynomial& P, const EinsteinData& e) {
    if (P.var_count() != e.n)
        throw std::invalid_argument("mae_residual: dimension mismatch");
    if (!P.constant_term().is_one())
        throw std::invalid_argument("mae_residual: candidate must be normalized (constant term 1)");
    Polynomial lhs = pow(d_operator(P), e.q);
    Polynomial rhs = pow(P, e.power_exponent());
    Polynomial residual = lhs - rhs;
    return VerificationCertificate{P, e, residual, residual.is_zero()};
}

std::pair<Rational, Rational> lambda_bounds(const Polynomial& P, int n) {
    int d = P.total_degree();
    if (d < 1) throw std::invalid_argument("lambda_bounds: candidate has degree zero");
    return {Rational(2L * n, d), Rational(2L * (n + 1))};
}

bool admissible_candidate_check(const Polynomial& P) {
    int n = P.var_count();
    if (!P.constant_term().is_one()) return false;
    for (int j = 0; j < n; ++j) {
        std::vector<int> e(n, 0);
        e[j] = 1;
        if (!P.coefficient(ExponentVector(std::move(e))).is_one()) return false;
    }
    for (const auto& [e, c] : P.terms()) {
        if (e.total_degree() <= 1) continue;  // constant and linear layers checked above
        if (c.sign() <= 0) return false;
    }
    return true;
}

std::optional<Polynomial> nth_root(const Polynomial& P, int q) {
    if (q < 1) throw std::invalid_argument("nth_root: q must be positive");
    if (q == 1) return P;
    if (!P.constant_term().is_one()) return std::nullopt;
    int d_total = P.total_degree();
    if (d_total % q != 0) return std::nullopt;
    int d_root = d_total / q;

    Polynomial root = Polynomial::constant(P.var_count(), Rational(1));
    Rational inv_q = Rational(1, q);
    for (int d = 1; d <= d_root; ++d) {
        Polynomial delta = homogeneous_part(P, d) - homogeneous_part(pow(root, q), d);
        root += delta * inv_q;
    }
    if (pow(root, q) != P) return std::nullopt;
    return root;
}

Polynomial power_lift(const Polynomial& S, int s, int q, int n) {
    if (S.var_count() != n) throw std::invalid_argument("power_lift: dimension mismatch");
    if (q < 1 || s < 1) throw std::invalid_argument("power_lift: s and q must be positive");
    if (q * (n + 1) - s < 0)
        throw std::invalid_argument("power_lift: lambda exceeds 2(n+1)");
    if (!mae_residual(S, EinsteinData::make(s, 1, n)).verdict)
        throw std::invalid_argument("power_lift: input is not a q=1 solution");
    if (q == 1) return S;

    std::vector<Rational> factors(n, Rational(1, q));
    Polynomial P = pow(scale_vars(S, factors), q);
    if (pow(d_operator(P), q) != pow(P, q * (n + 1) - s))
        throw std::logic_error("power_lift: lifted polynomial fails the power-form identity");
    return P;
}

Polynomial power_reduce(const Polynomial& P, int s, int q, int n) {
    if (P.var_count() != n) throw std::invalid_argument("power_reduce: dimension mismatch");
    if (q < 1 || s < 1) throw std::invalid_argument("power_reduce: s and q must be positive");
    if (q == 1) return P;
    auto root = nth_root(P, q);
    if (!root) throw std::domain_error("power_reduce: input is not a perfect q-th power");
    std::vector<Rational> factors(n, Rational(q));
    return scale_vars(*root, factors);
}

}  // namespace kemae
