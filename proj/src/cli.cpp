#include "lefkit/cli.hpp"

#include "lefkit/error.hpp"
#include "lefkit/families.hpp"
#include "lefkit/lefschetz.hpp"
#include "lefkit/macaulay.hpp"
#include "lefkit/poly_io.hpp"
#include "lefkit/report.hpp"
#include "lefkit/reptheory.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace lefkit::cli {

namespace {

FamilySpec family_of(const RunConfig& config) {
    return FamilySpec::make(parse_family(config.family), config.n, config.power);
}

void check_budget(const FamilySpec& spec, std::size_t budget) {
    const std::size_t cells = max_catalecticant_cells(spec.nvars(), spec.socle_degree());
    if (cells > budget)
        throw Error(ErrorKind::TooLarge, "largest catalecticant has " + std::to_string(cells) + " cells, budget is " +
                                             std::to_string(budget));
}

ApolarityWeights weights_of(const RunConfig& config, const FamilySpec& spec) {
    if (config.weights.empty() || config.weights == "unit") return {};
    if (config.weights == "trace") {
        if (spec.kind() != FamilyKind::SymDet) throw Error(ErrorKind::InvalidInput, "trace weights apply to sym-det only");
        ApolarityWeights w;
        for (const auto& v : spec.layout()) w.push_back(v.row == v.col ? 1 : 2);
        return w;
    }
    ApolarityWeights w;
    std::stringstream ss(config.weights);
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(parse_rational(item));
    validate_weights(w, spec.nvars());
    return w;
}

Poly lefschetz_of(const RunConfig& config, const FamilySpec& spec) {
    if (!config.lefschetz_file.empty()) {
        std::ifstream in(config.lefschetz_file);
        if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + config.lefschetz_file);
        Json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::Parse, std::string("bad JSON in Lefschetz file: ") + e.what());
        }
        return linear_from_json(spec, j);
    }
    if (config.lefschetz == "canonical") return canonical_lefschetz(spec);
    if (config.lefschetz == "random") return random_linear_forms(spec, 1, config.seed).front();
    throw Error(ErrorKind::InvalidInput, "--lefschetz must be 'canonical' or 'random'");
}

/// Writes to --out when given, else to `out`.
void emit(const RunConfig& config, std::ostream& out, const std::string& payload) {
    if (config.out.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + config.out);
    file << payload;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::TooLarge ? kResourceLimit : kInputError;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kResourceLimit;
    }
}

} // namespace

int cmd_hilbert(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded([&] {
        const FamilySpec spec = family_of(config);
        check_budget(spec, config.budget);
        const auto weights = weights_of(config, spec);
        const Poly f = make_invariant(spec);
        const auto rows = hilbert_rows(f, weights);
        HilbertFn h{spec.socle_degree(), {}};
        for (const auto& r : rows) h.values.push_back(r.rank);
        switch (config.format) {
        case Format::Json: emit(config, out, dump(hilbert_json(spec, h, rows))); break;
        case Format::Csv: emit(config, out, hilbert_csv(rows)); break;
        case Format::Text: emit(config, out, format_sequence(h.values) + "\n"); break;
        }
        return int{kPass};
    }, err);
}

int cmd_slp(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded([&] {
        const FamilySpec spec = family_of(config);
        check_budget(spec, config.budget);
        const auto weights = weights_of(config, spec);
        const Poly l = lefschetz_of(config, spec);
        SlpReport report = slp_check(make_invariant(spec), l, weights);
        report.family = spec;
        switch (config.format) {
        case Format::Json: emit(config, out, dump(slp_json(report))); break;
        case Format::Csv: emit(config, out, slp_csv(report)); break;
        case Format::Text: emit(config, out, slp_text(report)); break;
        }
        return report.verdict ? int{kPass} : int{kVerifiedFalse};
    }, err);
}

int cmd_verify_theorem(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded([&] {
        const FamilySpec spec = family_of(config);
        const auto weights = weights_of(config, spec);
        const TheoremSummary summary = verify_theorem(spec, config.samples, config.seed, config.budget, weights);
        switch (config.format) {
        case Format::Json: emit(config, out, dump(verify_json(summary))); break;
        case Format::Csv: emit(config, out, verify_csv(summary)); break;
        case Format::Text: emit(config, out, verify_text(summary)); break;
        }
        return summary.mismatch_count == 0 ? int{kPass} : int{kVerifiedFalse};
    }, err);
}

int cmd_predict(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded([&] {
        const FamilySpec spec = family_of(config);
        if (spec.kind() != FamilyKind::SymDet)
            throw Error(ErrorKind::Unsupported, "prediction implemented for sym-det only");
        check_budget(spec, config.budget);
        const HilbertFn predicted = predicted_hilbert_typeC(spec.size(), spec.power());
        const HilbertFn computed = hilbert_function(make_invariant(spec), weights_of(config, spec));
        switch (config.format) {
        case Format::Json: emit(config, out, dump(predict_json(spec, predicted, computed))); break;
        case Format::Csv: emit(config, out, predict_csv(predicted, computed)); break;
        case Format::Text:
            emit(config, out, "predicted " + format_sequence(predicted.values) + "\ncomputed  " +
                                  format_sequence(computed.values) + "\nmatch: " +
                                  (predicted == computed ? "true" : "false") + "\n");
            break;
        }
        return predicted == computed ? int{kPass} : int{kVerifiedFalse};
    }, err);
}

int cmd_hessian(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded([&] {
        const FamilySpec spec = family_of(config);
        check_budget(spec, config.budget);
        const auto weights = weights_of(config, spec);
        const Poly l = lefschetz_of(config, spec);
        const auto dets = hessian_determinants_at(make_invariant(spec), l, weights);
        bool all_nonzero = true;
        for (const auto& d : dets) all_nonzero = all_nonzero && d != 0;
        switch (config.format) {
        case Format::Json: {
            Json j;
            j["family"] = std::string(family_name(spec.kind()));
            j["n"] = spec.size();
            j["s"] = spec.power();
            j["L"] = linear_to_json(spec, l);
            j["determinants"] = Json::array();
            for (std::size_t i = 0; i < dets.size(); ++i) j["determinants"].push_back({{"i", i}, {"det", to_string(dets[i])}});
            j["criterion"] = all_nonzero;
            emit(config, out, dump(j));
            break;
        }
        case Format::Csv: {
            std::string s = "i,det\n";
            for (std::size_t i = 0; i < dets.size(); ++i) s += std::to_string(i) + "," + to_string(dets[i]) + "\n";
            emit(config, out, s);
            break;
        }
        case Format::Text: {
            std::string s;
            for (std::size_t i = 0; i < dets.size(); ++i) s += "i=" + std::to_string(i) + " det=" + to_string(dets[i]) + "\n";
            s += std::string("criterion: ") + (all_nonzero ? "true" : "false") + "\n";
            emit(config, out, s);
            break;
        }
        }
        return all_nonzero ? int{kPass} : int{kVerifiedFalse};
    }, err);
}

int cmd_annihilator(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded([&] {
        const FamilySpec spec = family_of(config);
        check_budget(spec, config.budget);
        const auto weights = weights_of(config, spec);
        const Poly f = make_invariant(spec);
        const auto basis = annihilator_basis(f, config.degree, weights);
        const auto names = spec.variable_names();
        switch (config.format) {
        case Format::Json: {
            Json j;
            j["family"] = std::string(family_name(spec.kind()));
            j["n"] = spec.size();
            j["s"] = spec.power();
            j["degree"] = config.degree;
            j["dim_R_i"] = monomial_count(spec.nvars(), config.degree);
            j["basis"] = Json::array();
            for (const auto& p : basis) j["basis"].push_back(format_poly(p, names));
            emit(config, out, dump(j));
            break;
        }
        case Format::Csv: {
            std::string s = "index,operator\n";
            for (std::size_t k = 0; k < basis.size(); ++k) s += std::to_string(k) + ",\"" + format_poly(basis[k], names) + "\"\n";
            emit(config, out, s);
            break;
        }
        case Format::Text: {
            std::string s;
            for (const auto& p : basis) s += format_poly(p, names) + "\n";
            emit(config, out, s);
            break;
        }
        }
        return int{kPass};
    }, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Lefschetz-property toolkit for relative-invariant Gorenstein algebras", "lefkit"};
    app.require_subcommand(1);
    RunConfig config;

    const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", config.family, "generic-det | sym-det | pfaffian | quadric")->required();
        sub->add_option("--n", config.n, "matrix size or vector dimension")->required();
        sub->add_option("--power", config.power, "exponent s of the invariant");
        sub->add_option("--format", config.format, "json | csv | text")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--out", config.out, "write the report to this file");
        sub->add_option("--seed", config.seed, "random seed");
        sub->add_option("--samples", config.samples, "number of random samples");
        sub->add_option("--budget", config.budget, "catalecticant cell budget")
            ->envname("LEFKIT_BUDGET")
            ->check(CLI::PositiveNumber);
        sub->add_option("--weights", config.weights, "apolarity weights: unit | trace | w1,w2,...");
    };
    auto add_lefschetz = [&](CLI::App* sub) {
        sub->add_option("--lefschetz", config.lefschetz, "canonical | random");
        sub->add_option("--lefschetz-file", config.lefschetz_file, "JSON object {variable: \"p/q\"}");
    };

    std::map<std::string, int (*)(const RunConfig&, std::ostream&, std::ostream&)> handlers;
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of R/Ann(F)");
    add_common(hilbert);
    handlers["hilbert"] = cmd_hilbert;
    auto* slp = app.add_subcommand("slp", "check whether L is a strong Lefschetz element");
    add_common(slp);
    add_lefschetz(slp);
    handlers["slp"] = cmd_slp;
    auto* verify = app.add_subcommand("verify", "cross-check Lefschetz verdicts against open-orbit membership");
    add_common(verify);
    handlers["verify"] = cmd_verify_theorem;
    auto* predict = app.add_subcommand("predict", "predicted vs computed Hilbert function (sym-det)");
    add_common(predict);
    handlers["predict"] = cmd_predict;
    auto* hessian = app.add_subcommand("hessian", "higher-Hessian determinants at the point dual to L");
    add_common(hessian);
    add_lefschetz(hessian);
    handlers["hessian"] = cmd_hessian;
    auto* annihilator = app.add_subcommand("annihilator", "basis of Ann(F) in one degree");
    add_common(annihilator);
    annihilator->add_option("--degree", config.degree, "degree of the annihilator piece");
    handlers["annihilator"] = cmd_annihilator;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? int{kPass} : int{kInputError};
    }
    for (const auto& [name, handler] : handlers) {
        if (app.got_subcommand(name)) {
            config.command = name;
            return handler(config, out, err);
        }
    }
    return kInputError;
}

} // namespace lefkit::cli
