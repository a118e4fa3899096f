#include "lefkit/report.hpp"

#include "lefkit/error.hpp"
#include "lefkit/poly_io.hpp"

#include <algorithm>
#include <sstream>

namespace lefkit {

std::string format_sequence(const std::vector<std::size_t>& values) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
    os << ')';
    return os.str();
}

Json linear_to_json(const FamilySpec& spec, const Poly& linear) {
    Json j = Json::object();
    for (std::size_t v = 0; v < spec.nvars(); ++v) {
        const Rational c = linear.coeff(Monomial::variable(spec.nvars(), v));
        if (c != 0) j[spec.layout()[v].name] = to_string(c);
    }
    return j;
}

Poly linear_from_json(const FamilySpec& spec, const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "Lefschetz file must hold a JSON object");
    Poly l(spec.nvars());
    const auto names = spec.variable_names();
    for (const auto& [key, value] : j.items()) {
        const auto it = std::find(names.begin(), names.end(), key);
        if (it == names.end()) throw Error(ErrorKind::Parse, "unknown variable '" + key + "'");
        Rational c;
        if (value.is_string()) c = parse_rational(value.get<std::string>());
        else if (value.is_number_integer()) c = parse_rational(value.dump());
        else throw Error(ErrorKind::Parse, "coefficient of '" + key + "' must be a rational string");
        l.add_term(Monomial::variable(spec.nvars(), static_cast<std::size_t>(it - names.begin())), c);
    }
    return l;
}

namespace {

Json family_header(const FamilySpec& spec) {
    Json j;
    j["family"] = std::string(family_name(spec.kind()));
    j["n"] = spec.size();
    j["s"] = spec.power();
    return j;
}

} // namespace

Json hilbert_json(const FamilySpec& spec, const HilbertFn& h, const std::vector<DegreeRow>& rows) {
    Json j = family_header(spec);
    j["c"] = h.socle_degree;
    j["hilbert"] = h.values;
    j["rows"] = Json::array();
    for (const auto& r : rows)
        j["rows"].push_back({{"degree", r.degree}, {"dim_R_i", r.dim_R}, {"rank", r.rank}, {"kernel_dim", r.kernel_dim}});
    return j;
}

std::string hilbert_csv(const std::vector<DegreeRow>& rows) {
    std::ostringstream os;
    os << "degree,dim_R_i,rank,kernel_dim\n";
    for (const auto& r : rows) os << r.degree << ',' << r.dim_R << ',' << r.rank << ',' << r.kernel_dim << '\n';
    return os.str();
}

Json slp_json(const SlpReport& report) {
    Json j;
    if (report.family) {
        j = family_header(*report.family);
        j["L"] = linear_to_json(*report.family, report.lefschetz);
    } else {
        j["L"] = Json::object();
    }
    j["c"] = report.socle_degree;
    j["rows"] = Json::array();
    for (const auto& r : report.rows)
        j["rows"].push_back({{"i", r.i}, {"required", r.required}, {"achieved", r.achieved}, {"pass", r.pass}});
    j["verdict"] = report.verdict;
    return j;
}

std::string slp_csv(const SlpReport& report) {
    std::ostringstream os;
    os << "i,required,achieved,pass\n";
    for (const auto& r : report.rows) os << r.i << ',' << r.required << ',' << r.achieved << ',' << (r.pass ? "true" : "false") << '\n';
    return os.str();
}

std::string slp_text(const SlpReport& report) {
    std::ostringstream os;
    if (report.family) os << "L = " << format_poly(report.lefschetz, report.family->variable_names()) << '\n';
    os << "c = " << report.socle_degree << '\n';
    for (const auto& r : report.rows)
        os << "i=" << r.i << " required=" << r.required << " achieved=" << r.achieved << (r.pass ? " pass" : " FAIL") << '\n';
    os << "verdict: " << (report.verdict ? "true" : "false") << '\n';
    return os.str();
}

Json verify_json(const TheoremSummary& summary) {
    Json j = family_header(summary.family);
    j["seed"] = summary.seed;
    j["samples"] = summary.samples.size();
    j["lefschetz"] = summary.lefschetz_count;
    j["mismatches"] = summary.mismatch_count;
    j["rows"] = Json::array();
    for (std::size_t k = 0; k < summary.samples.size(); ++k) {
        const auto& s = summary.samples[k];
        j["rows"].push_back({{"index", k},
                             {"boundary", s.boundary},
                             {"L", linear_to_json(summary.family, s.lefschetz)},
                             {"in_open_orbit", s.in_open_orbit},
                             {"slp_verdict", s.slp_verdict},
                             {"agree", s.agree()}});
    }
    j["counterexample"] = summary.counterexample ? linear_to_json(summary.family, summary.counterexample->lefschetz) : Json();
    return j;
}

std::string verify_csv(const TheoremSummary& summary) {
    std::ostringstream os;
    const auto names = summary.family.variable_names();
    os << "index,boundary,L,in_open_orbit,slp_verdict,agree\n";
    for (std::size_t k = 0; k < summary.samples.size(); ++k) {
        const auto& s = summary.samples[k];
        os << k << ',' << (s.boundary ? "true" : "false") << ",\"" << format_poly(s.lefschetz, names) << "\","
           << (s.in_open_orbit ? "true" : "false") << ',' << (s.slp_verdict ? "true" : "false") << ','
           << (s.agree() ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string verify_text(const TheoremSummary& summary) {
    std::ostringstream os;
    os << family_name(summary.family.kind()) << " n=" << summary.family.size() << " s=" << summary.family.power()
       << " seed=" << summary.seed << '\n';
    os << "samples: " << summary.samples.size() << '\n';
    os << "lefschetz: " << summary.lefschetz_count << '\n';
    os << "mismatches: " << summary.mismatch_count << '\n';
    if (summary.counterexample)
        os << "counterexample: " << format_poly(summary.counterexample->lefschetz, summary.family.variable_names()) << '\n';
    return os.str();
}

Json predict_json(const FamilySpec& spec, const HilbertFn& predicted, const HilbertFn& computed) {
    Json j = family_header(spec);
    j["predicted"] = predicted.values;
    j["computed"] = computed.values;
    j["match"] = predicted == computed;
    return j;
}

std::string predict_csv(const HilbertFn& predicted, const HilbertFn& computed) {
    std::ostringstream os;
    os << "degree,predicted,computed\n";
    const std::size_t n = std::max(predicted.values.size(), computed.values.size());
    for (std::size_t i = 0; i < n; ++i) {
        os << i << ',';
        if (i < predicted.values.size()) os << predicted.values[i];
        os << ',';
        if (i < computed.values.size()) os << computed.values[i];
        os << '\n';
    }
    return os.str();
}

} // namespace lefkit
