#include "kemae/taylor.hpp"

#include "kemae/ma_operator.hpp"

namespace kemae {

namespace {

Polynomial lift_to_order(const Polynomial& uni, int h) {
    ExponentVector e = ExponentVector::zeros(2);
    e.exps[1] = h;
    return promote_univariate(uni, 2, 0) * Polynomial::monomial(2, e, Rational(1));
}

Polynomial assemble_prefix(const std::vector<Polynomial>& cs, int up_to) {
    Polynomial P(2);
    for (int h = 0; h <= up_to; ++h) P += lift_to_order(cs[static_cast<size_t>(h)], h);
    return P;
}

/// det(ma_matrix(P)) - P^(4-s): the P-multiple of D_2(P) - P^(3-s), so its
/// x2-coefficients vanish through order h exactly when the equation holds
/// modulo x2^(h+1).
Polynomial det_residual(const Polynomial& P, int s) {
    return determinant(ma_matrix(P)) - pow(P, 4 - s);
}

void check_initial(const Polynomial& c, const char* which) {
    if (c.var_count() != 1)
        throw std::invalid_argument(std::string("propagate: ") + which + " must be univariate");
}

}  // namespace

X2Series X2Series::expand(const Polynomial& P, int max_order) {
    if (P.var_count() != 2) throw std::invalid_argument("X2Series: polynomial must be bivariate");
    if (max_order < 0) throw std::invalid_argument("X2Series: negative truncation order");
    if (!coefficient_in_var(P, 1, 0).constant_term().is_one())
        throw std::invalid_argument("X2Series: c_0(0) must be 1");
    X2Series series;
    series.truncation_order = max_order;
    series.coefficients.reserve(static_cast<size_t>(max_order) + 1);
    for (int h = 0; h <= max_order; ++h) series.coefficients.push_back(coefficient_in_var(P, 1, h));
    return series;
}

Polynomial X2Series::assemble() const {
    return assemble_prefix(coefficients, static_cast<int>(coefficients.size()) - 1);
}

X2Series X2Series::nonzero_prefix() const {
    X2Series prefix = *this;
    while (prefix.coefficients.size() > 1 && prefix.coefficients.back().is_zero())
        prefix.coefficients.pop_back();
    prefix.truncation_order = static_cast<int>(prefix.coefficients.size()) - 1;
    return prefix;
}

const char* to_string(PropagationStatus status) {
    switch (status) {
        case PropagationStatus::terminated_polynomial: return "terminated_polynomial";
        case PropagationStatus::still_open: return "still_open";
        case PropagationStatus::obstructed: return "obstructed";
    }
    return "unknown";
}

ObstructionError::ObstructionError(int order, Polynomial remainder)
    : std::runtime_error("propagation obstructed at order " + std::to_string(order)),
      order_(order),
      remainder_(std::move(remainder)) {}

Polynomial edge_factor(const Polynomial& c0) {
    if (c0.var_count() != 1) throw std::invalid_argument("edge_factor: input must be univariate");
    Polynomial t = Polynomial::variable(1, 0);
    Polynomial d1 = partial(c0, 0);
    Polynomial d2 = partial(d1, 0);
    return (c0 * d2 - d1 * d1) * t + c0 * d1;
}

Polynomial propagate_step(const X2Series& series, int s, int h) {
    if (s < 1 || s > 3) throw std::invalid_argument("propagate_step: s must be 1, 2 or 3");
    if (h < 1) throw std::invalid_argument("propagate_step: h must be >= 1");
    if (series.truncation_order < h ||
        series.coefficients.size() < static_cast<size_t>(h) + 1)
        throw std::invalid_argument("propagate_step: series not known through order h");
    const Polynomial& c0 = series.coefficients[0];
    Polynomial E = edge_factor(c0);
    if (E.is_zero()) throw std::invalid_argument("propagate_step: degenerate edge factor");

    // The x2^h coefficient of det_residual is affine in the unknown c_{h+1};
    // read off the two affine pieces by evaluating at c_{h+1} = 0 and 1.
    Polynomial base = assemble_prefix(series.coefficients, h);
    Polynomial probe = base + lift_to_order(Polynomial::constant(1, Rational(1)), h + 1);
    Polynomial K = coefficient_in_var(det_residual(base, s), 1, h);
    Polynomial A = coefficient_in_var(det_residual(probe, s), 1, h) - K;

    long m = static_cast<long>(h + 1) * (h + 1);
    if (A != c0 * E * Rational(m))
        throw std::logic_error("propagate_step: affine coefficient structure violated");

    try {
        return exact_divide(-K, A);
    } catch (const NotDivisibleError& err) {
        throw ObstructionError(h, err.remainder());
    }
}

PropagationOutcome propagate(const CauchyDatum& datum, int max_order) {
    return propagate_series(datum.p0, datum.p1, datum.s, max_order);
}

PropagationOutcome propagate_series(const Polynomial& c0, const Polynomial& c1, int s,
                                    int max_order) {
    if (s < 1 || s > 3) throw std::invalid_argument("propagate: s must be 1, 2 or 3");
    if (max_order < 2) throw std::invalid_argument("propagate: max_order must be >= 2");
    check_initial(c0, "c0");
    check_initial(c1, "c1");
    if (!c0.constant_term().is_one())
        throw std::invalid_argument("propagate: c0(0) must be 1");

    PropagationOutcome outcome;
    outcome.series.coefficients = {c0, c1};
    outcome.series.truncation_order = 1;

    // Order 0 is determined by the initial data alone: it vanishes exactly
    // when edge_factor(c0)*c1 = c0^(3-s), the axis equation on x2 = 0.
    Polynomial order0 = coefficient_in_var(det_residual(outcome.series.assemble(), s), 1, 0);
    if (!order0.is_zero()) {
        outcome.status = PropagationStatus::obstructed;
        outcome.obstruction_detail = ObstructionDetail{0, order0};
        return outcome;
    }

    EinsteinData e = EinsteinData::make(s, 1, 2);
    for (int h = 1; h < max_order; ++h) {
        Polynomial next(1);
        try {
            next = propagate_step(outcome.series, s, h);
        } catch (const ObstructionError& err) {
            outcome.status = PropagationStatus::obstructed;
            outcome.obstruction_detail = ObstructionDetail{err.order(), err.remainder()};
            return outcome;
        }
        outcome.series.coefficients.push_back(next);
        outcome.series.truncation_order = h + 1;

        X2Series prefix = outcome.series.nonzero_prefix();
        if (mae_residual(prefix.assemble(), e).verdict) {
            // An exact solution continues only with zeros, so the remaining
            // orders are settled; pad and stop.
            outcome.series = prefix;
            outcome.series.coefficients.resize(static_cast<size_t>(max_order) + 1,
                                               Polynomial(1));
            outcome.series.truncation_order = max_order;
            outcome.status = PropagationStatus::terminated_polynomial;
            return outcome;
        }
    }
    outcome.status = PropagationStatus::still_open;
    return outcome;
}

bool ClassificationResult::complete() const {
    for (const auto& entry : entries)
        if (entry.outcome.status == PropagationStatus::still_open) return false;
    return true;
}

ClassificationResult classify(int s, int max_order) {
    if (s < 1 || s > 3) throw std::invalid_argument("classify: s must be 1, 2 or 3");
    ClassificationResult result;
    result.s = s;
    result.max_order = max_order;

    std::vector<SolutionRecord> known = catalog(2);
    for (const CauchyDatum& datum : enumerate_cauchy_data(s)) {
        PropagationOutcome outcome = propagate(datum, max_order);
        if (outcome.status == PropagationStatus::terminated_polynomial) {
            Polynomial P = outcome.series.nonzero_prefix().assemble();
            if (admissible_candidate_check(P)) {
                EinsteinData e = EinsteinData::make(s, 1, 2);
                VerificationCertificate cert = mae_residual(P, e);
                std::string label = "unrecognized model";
                for (const SolutionRecord& rec : known)
                    if (rec.polynomial == P) label = rec.label;
                result.solutions.push_back(SolutionRecord{P, e, label, cert});
            }
        }
        result.entries.push_back(ClassificationEntry{datum, std::move(outcome)});
    }
    return result;
}

}  // namespace kemae
