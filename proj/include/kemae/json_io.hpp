#ifndef KEMAE_JSON_IO_HPP
#define KEMAE_JSON_IO_HPP

#include <json.hpp>

#include "kemae/taylor.hpp"

namespace kemae {

/// {"vars": ["x1","x2"], "terms": [{"exp": [2,0], "coef": "1/4"}, ...]};
/// coefficients as strings to stay exact, terms in descending (degree, lex)
/// order. Empty names selects default_var_names.
nlohmann::json polynomial_to_json(const Polynomial& p,
                                  const std::vector<std::string>& names = {});

/// Inverse of polynomial_to_json; throws std::invalid_argument on malformed
/// input (wrong exponent arity, bad coefficient strings, ...).
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json einstein_to_json(const EinsteinData& e);
nlohmann::json certificate_to_json(const VerificationCertificate& cert);
nlohmann::json cauchy_to_json(const CauchyDatum& datum);
nlohmann::json series_to_json(const X2Series& series);
nlohmann::json outcome_to_json(const PropagationOutcome& outcome);
nlohmann::json record_to_json(const SolutionRecord& record);

/// The shipped catalog document: {"schema": 1, "dimension": 2, "records": [...]}.
nlohmann::json catalog_to_json(const std::vector<SolutionRecord>& records);

}  // namespace kemae

#endif
