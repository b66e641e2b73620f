#include "kemae/axis.hpp"

#include <set>

#include "kemae/ma_operator.hpp"

namespace kemae {

Polynomial binomial_power(int k) {
    if (k < 1) throw std::invalid_argument("binomial_power: k must be positive");
    Polynomial base(1);
    base.add_term(ExponentVector({0}), Rational(1));
    base.add_term(ExponentVector({1}), Rational(1, k));
    return pow(base, k);
}

namespace {

/// (1+t/k)^e for e >= 0, the shape of axis derivative profiles.
Polynomial binomial_base_power(int k, int e) {
    Polynomial base(1);
    base.add_term(ExponentVector({0}), Rational(1));
    base.add_term(ExponentVector({1}), Rational(1, k));
    return pow(base, e);
}

}  // namespace

CauchyDatum CauchyDatum::make(int s, int k) {
    if (s < 1 || s > 3) throw std::invalid_argument("CauchyDatum: s must be in {1,2,3}");
    if (k < 1) throw std::invalid_argument("CauchyDatum: k must be positive");
    int sk = s * k;
    if (sk != 2 && sk != 3)
        throw std::invalid_argument("CauchyDatum: s*k must be 2 or 3 (s^2k^2-5sk+6 = 0)");
    int e1 = k * (1 - s) + 2;
    if (e1 < 0) throw std::invalid_argument("CauchyDatum: negative derivative exponent");
    return CauchyDatum{s, k, binomial_power(k), binomial_base_power(k, e1)};
}

RootSystem RootSystem::make(std::vector<Rational> roots, std::vector<int> multiplicities) {
    if (roots.size() != multiplicities.size() || roots.empty())
        throw std::invalid_argument("RootSystem: roots and multiplicities must pair up");
    std::set<Rational> seen;
    for (const Rational& r : roots) {
        if (r.is_zero()) throw std::invalid_argument("RootSystem: roots must be nonzero");
        if (!seen.insert(r).second)
            throw std::invalid_argument("RootSystem: roots must be distinct");
    }
    for (int m : multiplicities)
        if (m < 1) throw std::invalid_argument("RootSystem: multiplicities must be positive");
    return RootSystem{std::move(roots), std::move(multiplicities)};
}

AxisProfile axis_profile(const Polynomial& P, int axis_index) {
    int n = P.var_count();
    if (axis_index < 0 || axis_index >= n)
        throw std::out_of_range("axis_profile: index out of range");
    Polynomial off_axis = Polynomial::constant(n, Rational(1));
    for (int j = 0; j < n; ++j)
        if (j != axis_index) off_axis *= partial(P, j);
    return AxisProfile{restrict_axis(P, axis_index), restrict_axis(off_axis, axis_index),
                       axis_index};
}

std::optional<int> binomial_power_match(const Polynomial& p) {
    if (p.var_count() != 1) throw std::invalid_argument("binomial_power_match: univariate input required");
    int k = p.total_degree();
    if (k < 1) return std::nullopt;
    if (p == binomial_power(k)) return k;
    return std::nullopt;
}

bool axis_consistency_check(const AxisProfile& profile, int s, int n) {
    auto k = binomial_power_match(profile.p);
    if (!k) return false;
    if (s == n + 1) {
        if (*k != 1) return false;
    } else if (s == n) {
        if (*k != 1 && *k != 2) return false;
    } else if (s >= 1 && s <= n - 1) {
        // any positive k admitted
    } else {
        return false;
    }
    int e = *k * (n - s - 1) + 2;
    if (e < 0) return false;
    if (profile.q_profile != binomial_base_power(*k, e)) return false;
    return d_operator(profile.p) * profile.q_profile == pow(profile.p, n - s + 1);
}

Polynomial root_system_lhs(const RootSystem& rs) {
    size_t R = rs.roots.size();
    Polynomial t = Polynomial::variable(1, 0);
    Polynomial lhs(1);
    Rational root_product_sq(1);
    for (size_t i = 0; i < R; ++i) {
        Polynomial prod = Polynomial::constant(1, Rational(rs.multiplicities[i]) * rs.roots[i]);
        for (size_t j = 0; j < R; ++j) {
            if (j == i) continue;
            Polynomial lin = t + Polynomial::constant(1, rs.roots[j]);
            prod *= lin * lin;
        }
        lhs += prod;
        root_product_sq *= rs.roots[i] * rs.roots[i];
    }
    lhs -= Polynomial::constant(1, root_product_sq);
    return lhs;
}

Rational vandermonde_det(const std::vector<Rational>& roots) {
    int R = static_cast<int>(roots.size());
    if (R < 1) throw std::invalid_argument("vandermonde_det: empty root list");
    std::vector<int> ones(R, 1);
    RootSystem::make(roots, ones);  // validates distinct, nonzero

    // Column i holds the top R coefficients of r_i * prod_{j!=i} (t+r_j)^2,
    // i.e. the linear form multiplying k_i in root_system_lhs.
    Polynomial t = Polynomial::variable(1, 0);
    std::vector<std::vector<Rational>> col(R);
    for (int i = 0; i < R; ++i) {
        Polynomial prod = Polynomial::constant(1, roots[i]);
        for (int j = 0; j < R; ++j) {
            if (j == i) continue;
            Polynomial lin = t + Polynomial::constant(1, roots[j]);
            prod *= lin * lin;
        }
        col[i].reserve(R);
        for (int row = 0; row < R; ++row)
            col[i].push_back(prod.coefficient(ExponentVector({2 * R - 2 - row})));
    }

    // Exact Gaussian elimination on the R x R coefficient matrix.
    std::vector<std::vector<Rational>> m(R, std::vector<Rational>(R));
    for (int row = 0; row < R; ++row)
        for (int i = 0; i < R; ++i) m[row][i] = col[i][row];
    Rational det(1);
    for (int piv = 0; piv < R; ++piv) {
        int sel = -1;
        for (int r = piv; r < R; ++r)
            if (!m[r][piv].is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) return Rational(0);
        if (sel != piv) {
            std::swap(m[sel], m[piv]);
            det = -det;
        }
        det *= m[piv][piv];
        Rational inv = m[piv][piv].inverse();
        for (int r = piv + 1; r < R; ++r) {
            if (m[r][piv].is_zero()) continue;
            Rational f = m[r][piv] * inv;
            for (int c = piv; c < R; ++c) m[r][c] -= f * m[piv][c];
        }
    }
    return det;
}

std::vector<CauchyDatum> enumerate_cauchy_data(int s, int n) {
    if (n != 2) throw std::invalid_argument("enumerate_cauchy_data: only n = 2 is classified");
    if (s < 1 || s > 3) throw std::invalid_argument("enumerate_cauchy_data: s must be in {1,2,3}");
    std::vector<CauchyDatum> data;
    for (int sk : {2, 3})
        if (sk % s == 0) data.push_back(CauchyDatum::make(s, sk / s));
    return data;
}

Polynomial soln2_template(int k, int s) {
    if (k < 1) throw std::invalid_argument("soln2_template: k must be positive");
    if (s < 1 || s > 3) throw std::invalid_argument("soln2_template: s must be in {1,2,3}");
    int e = k * (1 - s) + 2;
    if (e < 0) throw std::invalid_argument("soln2_template: negative mixed-term exponent");

    Polynomial x1 = Polynomial::variable(2, 0);
    Polynomial x2 = Polynomial::variable(2, 1);
    Polynomial one = Polynomial::constant(2, Rational(1));
    Polynomial b1 = promote_univariate(binomial_power(k), 2, 0);          // (1+x1/k)^k
    Polynomial b2 = promote_univariate(binomial_power(k), 2, 1);          // (1+x2/k)^k
    Polynomial d1 = promote_univariate(binomial_base_power(k, e), 2, 0);  // (1+x1/k)^e
    Polynomial d2 = promote_univariate(binomial_base_power(k, e), 2, 1);  // (1+x2/k)^e

    Rational mixed = Rational(1 - s) + Rational(2, k);
    return b1 + b2 - one + x1 * d2 + x2 * d1 - x1 - x2 - mixed * x1 * x2;
}

}  // namespace kemae
