#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kemae/json_io.hpp"
#include "kemae/parse.hpp"

namespace {

using kemae::Polynomial;
using nlohmann::json;

// Exit codes, stable for scripting: 0 success/verified, 1 verified-false,
// 2 input error, 3 inconclusive at the requested order.
constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInput = 2;
constexpr int kInconclusive = 3;

Polynomial read_candidate(const std::string& spec, int n) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot open " + spec.substr(1));
        json j;
        in >> j;
        return kemae::polynomial_from_json(j);
    }
    return kemae::parse_expression(spec, kemae::default_var_names(n));
}

void emit_report(const json& report, const std::string& emit, const std::string& text) {
    if (emit == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_verify(const std::string& poly_spec, int s, int q, int n, const std::string& emit) {
    Polynomial P = read_candidate(poly_spec, n);
    if (!kemae::admissible_candidate_check(P))
        throw std::invalid_argument(
            "candidate is not admissible (needs constant term 1, unit linear "
            "coefficients, positive remaining coefficients)");
    kemae::EinsteinData e = kemae::EinsteinData::make(s, q, n);
    kemae::VerificationCertificate cert = kemae::mae_residual(P, e);

    json report{{"schema", 1}, {"command", "verify"}, {"certificate", kemae::certificate_to_json(cert)}};
    std::ostringstream text;
    text << "verify: s=" << s << " q=" << q << " n=" << n
         << " lambda=" << e.lambda().to_string() << "\n"
         << "candidate: " << kemae::to_string(P) << "\n"
         << "verdict: " << (cert.verdict ? "true" : "false") << "\n";
    if (!cert.verdict) text << "residual: " << kemae::to_string(cert.residual) << "\n";
    emit_report(report, emit, text.str());
    return cert.verdict ? kOk : kFalse;
}

int cmd_cauchy(int s, const std::string& emit) {
    std::vector<kemae::CauchyDatum> data = kemae::enumerate_cauchy_data(s);
    json list = json::array();
    for (const auto& d : data) list.push_back(kemae::cauchy_to_json(d));
    json report{{"schema", 1}, {"command", "cauchy"}, {"s", s}, {"data", std::move(list)}};

    std::ostringstream text;
    text << "cauchy: s=" << s << ", " << data.size() << (data.size() == 1 ? " datum" : " data")
         << "\n";
    for (const auto& d : data)
        text << "k=" << d.k << ": p0 = " << kemae::to_string(d.p0, {"x1"})
             << ", p1 = " << kemae::to_string(d.p1, {"x1"}) << "\n";
    emit_report(report, emit, text.str());
    return kOk;
}

int cmd_classify(int s, int max_order, const std::string& emit) {
    if (max_order < 4) throw std::invalid_argument("classify: --max-order must be >= 4");
    kemae::ClassificationResult result = kemae::classify(s, max_order);

    json entries = json::array();
    for (const auto& entry : result.entries)
        entries.push_back(json{{"datum", kemae::cauchy_to_json(entry.datum)},
                               {"outcome", kemae::outcome_to_json(entry.outcome)}});
    json solutions = json::array();
    for (const auto& rec : result.solutions) solutions.push_back(kemae::record_to_json(rec));
    json report{{"schema", 1},
                {"command", "classify"},
                {"s", s},
                {"complete_up_to_order", max_order},
                {"entries", std::move(entries)},
                {"solutions", std::move(solutions)}};

    std::ostringstream text;
    text << "classify: s=" << s << " (complete up to expansion order " << max_order << ")\n";
    for (const auto& entry : result.entries)
        text << "datum k=" << entry.datum.k << ": " << kemae::to_string(entry.outcome.status)
             << "\n";
    text << "solutions: " << result.solutions.size() << "\n";
    for (const auto& rec : result.solutions)
        text << "  " << kemae::to_string(rec.polynomial) << " | lambda = "
             << rec.einstein.lambda().to_string() << " | " << rec.label << "\n";
    emit_report(report, emit, text.str());
    return result.complete() ? kOk : kInconclusive;
}

int cmd_embed_dim(const std::vector<int>& dims, int q, const std::string& emit) {
    kemae::FlagProduct fp = kemae::FlagProduct::make(dims, q);
    mpz_class N = kemae::embedding_dimension(fp);

    json scales = json::array();
    std::ostringstream scale_text;
    for (size_t i = 0; i < dims.size(); ++i) {
        kemae::Rational ci = fp.c(static_cast<int>(i));
        scales.push_back(ci.to_string());
        scale_text << (i ? ", " : "") << ci.to_string();
    }
    json report{{"schema", 1},       {"command", "embed-dim"},
                {"factors", dims},   {"q", q},
                {"G", fp.G().get_str()}, {"c", std::move(scales)},
                {"N", N.get_str()}};

    std::ostringstream text;
    text << "embed-dim: factors =";
    for (int d : dims) text << " " << d;
    text << ", q = " << q << "\n"
         << "G = " << fp.G().get_str() << "\n"
         << "c = " << scale_text.str() << "\n"
         << "N = " << N.get_str() << "\n";
    emit_report(report, emit, text.str());
    return kOk;
}

int cmd_propagate(int s, int k, int max_order, const std::string& emit) {
    kemae::CauchyDatum datum = kemae::CauchyDatum::make(s, k);
    kemae::PropagationOutcome outcome = kemae::propagate(datum, max_order);

    json report{{"schema", 1},
                {"command", "propagate"},
                {"datum", kemae::cauchy_to_json(datum)},
                {"max_order", max_order},
                {"outcome", kemae::outcome_to_json(outcome)}};

    std::ostringstream text;
    text << "propagate: s=" << s << " k=" << k << " max_order=" << max_order << "\n"
         << "status: " << kemae::to_string(outcome.status) << "\n";
    for (size_t h = 0; h < outcome.series.coefficients.size(); ++h)
        text << "c_" << h << " = " << kemae::to_string(outcome.series.coefficients[h], {"x1"})
             << "\n";
    if (outcome.obstruction_detail)
        text << "obstruction at order " << outcome.obstruction_detail->order << ": "
             << kemae::to_string(outcome.obstruction_detail->remainder, {"x1"}) << "\n";
    emit_report(report, emit, text.str());
    return outcome.status == kemae::PropagationStatus::still_open ? kInconclusive : kOk;
}

int cmd_catalog(const std::string& out_path) {
    json doc = kemae::catalog_to_json(kemae::catalog(2));
    std::string payload = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << payload;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification and classification of polynomial solutions of the "
                 "rotation-invariant Monge-Ampere equations"};
    app.require_subcommand(1);

    std::string emit = "text";
    std::string poly_spec;
    std::string out_path;
    std::vector<int> dims;
    int s = 1, q = 1, n = 2, k = 1;
    int max_order = 20;

    auto add_emit = [&emit](CLI::App* sub) {
        sub->add_option("--emit", emit, "Output rendering")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* verify = app.add_subcommand("verify", "Check a candidate against the equation");
    verify->add_option("-p,--poly", poly_spec, "Inline expression or @file.json")->required();
    verify->add_option("-s", s, "Numerator of lambda/2")->required();
    verify->add_option("-q", q, "Denominator of lambda/2")->capture_default_str();
    verify->add_option("-n", n, "Number of variables")->capture_default_str();
    add_emit(verify);

    CLI::App* cauchy = app.add_subcommand("cauchy", "List admissible initial data for s");
    cauchy->add_option("-s", s, "Numerator of lambda/2")->required();
    add_emit(cauchy);

    CLI::App* classify = app.add_subcommand("classify", "Enumerate all solutions for s");
    classify->add_option("-s", s, "Numerator of lambda/2")->required();
    classify->add_option("--max-order", max_order, "Expansion order bound")
        ->capture_default_str()
        ->envname("MA_CLASSIFY_MAX_ORDER");
    add_emit(classify);

    CLI::App* embed = app.add_subcommand("embed-dim", "Projective embedding dimension");
    embed->add_option("-n,--dims", dims, "Factor dimensions n_1,...,n_k")
        ->required()
        ->delimiter(',');
    embed->add_option("-q", q, "Metric scale")->capture_default_str();
    add_emit(embed);

    CLI::App* propagate = app.add_subcommand("propagate", "Propagate one Cauchy datum");
    propagate->add_option("-s", s, "Numerator of lambda/2")->required();
    propagate->add_option("-k", k, "Axis profile degree")->required();
    propagate->add_option("--max-order", max_order, "Expansion order bound")
        ->capture_default_str();
    add_emit(propagate);

    CLI::App* catalog = app.add_subcommand("catalog", "Emit the verified solution catalog");
    catalog->add_option("--out", out_path, "Write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (verify->parsed()) return cmd_verify(poly_spec, s, q, n, emit);
        if (cauchy->parsed()) return cmd_cauchy(s, emit);
        if (classify->parsed()) return cmd_classify(s, max_order, emit);
        if (embed->parsed()) return cmd_embed_dim(dims, q, emit);
        if (propagate->parsed()) return cmd_propagate(s, k, max_order, emit);
        if (catalog->parsed()) return cmd_catalog(out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kInput;
}
