#include "kemae/json_io.hpp"

namespace kemae {

using nlohmann::json;

json polynomial_to_json(const Polynomial& p, const std::vector<std::string>& names) {
    std::vector<std::string> vars = names.empty() ? default_var_names(p.var_count()) : names;
    if (static_cast<int>(vars.size()) != p.var_count())
        throw std::invalid_argument("polynomial_to_json: name count mismatch");
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["exp"] = e.exps;
        term["coef"] = c.to_string();
        terms.push_back(std::move(term));
    }
    return json{{"vars", vars}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON needs \"vars\" and \"terms\"");
    const json& vars = j.at("vars");
    if (!vars.is_array() || vars.empty())
        throw std::invalid_argument("polynomial JSON: \"vars\" must be a nonempty array");
    int n = static_cast<int>(vars.size());
    Polynomial p(n);
    for (const json& term : j.at("terms")) {
        const json& exp = term.at("exp");
        if (!exp.is_array() || static_cast<int>(exp.size()) != n)
            throw std::invalid_argument("polynomial JSON: exponent arity mismatch");
        std::vector<int> e;
        e.reserve(exp.size());
        for (const json& x : exp) {
            if (!x.is_number_integer() || x.get<long>() < 0)
                throw std::invalid_argument("polynomial JSON: exponents must be >= 0");
            e.push_back(x.get<int>());
        }
        p.add_term(ExponentVector(std::move(e)),
                   Rational::from_string(term.at("coef").get<std::string>()));
    }
    return p;
}

json einstein_to_json(const EinsteinData& e) {
    return json{{"s", e.s}, {"q", e.q}, {"n", e.n}, {"lambda", e.lambda().to_string()}};
}

json certificate_to_json(const VerificationCertificate& cert) {
    json j;
    j["candidate"] = polynomial_to_json(cert.candidate);
    j["einstein"] = einstein_to_json(cert.einstein);
    j["verdict"] = cert.verdict;
    if (!cert.residual.is_zero()) j["residual"] = polynomial_to_json(cert.residual);
    return j;
}

json cauchy_to_json(const CauchyDatum& datum) {
    std::vector<std::string> x1{"x1"};
    return json{{"s", datum.s},
                {"k", datum.k},
                {"p0", polynomial_to_json(datum.p0, x1)},
                {"p1", polynomial_to_json(datum.p1, x1)}};
}

json series_to_json(const X2Series& series) {
    std::vector<std::string> x1{"x1"};
    json coeffs = json::array();
    for (const Polynomial& c : series.coefficients) coeffs.push_back(polynomial_to_json(c, x1));
    return json{{"truncation_order", series.truncation_order}, {"coefficients", std::move(coeffs)}};
}

json outcome_to_json(const PropagationOutcome& outcome) {
    json j;
    j["status"] = to_string(outcome.status);
    j["series"] = series_to_json(outcome.series);
    if (outcome.obstruction_detail) {
        j["obstruction"] = json{
            {"order", outcome.obstruction_detail->order},
            {"remainder", polynomial_to_json(outcome.obstruction_detail->remainder, {"x1"})}};
    }
    return j;
}

json record_to_json(const SolutionRecord& record) {
    return json{{"label", record.label},
                {"polynomial", polynomial_to_json(record.polynomial)},
                {"einstein", einstein_to_json(record.einstein)},
                {"certificate", certificate_to_json(record.certificate)}};
}

json catalog_to_json(const std::vector<SolutionRecord>& records) {
    json recs = json::array();
    for (const SolutionRecord& r : records) recs.push_back(record_to_json(r));
    return json{{"schema", 1}, {"dimension", 2}, {"records", std::move(recs)}};
}

}  // namespace kemae
