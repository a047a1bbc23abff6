#include "fewlee/report.hpp"

#include <sstream>

namespace fewlee {

std::string_view to_string(Method m) noexcept {
    switch (m) {
    case Method::Brute: return "brute";
    case Method::Analytic: return "analytic";
    case Method::Table: return "table";
    case Method::Auto: return "auto";
    }
    return "?";
}

Method parse_method(std::string_view text) {
    if (text == "brute") return Method::Brute;
    if (text == "analytic") return Method::Analytic;
    if (text == "table") return Method::Table;
    if (text == "auto") return Method::Auto;
    throw ParameterError("unknown method '" + std::string(text) + "' (expected brute, analytic, table or auto)");
}

WeightDistribution compute_distribution(const DownSet& delta, Variant variant, const AnalyzeOptions& opts,
                                        std::vector<std::string>* notes) {
    auto note = [&](std::string s) {
        if (notes) notes->push_back(std::move(s));
    };
    switch (opts.method) {
    case Method::Brute:
        return brute_force_distribution(DefiningSet::from_down_set(delta, variant), opts.budget, opts.threads);
    case Method::Analytic:
        return distribution_analytic(delta, variant, opts.budget);
    case Method::Table: {
        if (variant != Variant::Complement)
            throw ParameterError("closed-form tables describe the complement defining set only");
        const auto spec = FamilySpec::recognize(delta);
        if (!spec) throw ParameterError("down set " + delta.to_string() + " is not one of the tabulated families");
        const TableEvaluation t = table_distribution(*spec);
        if (!t.admissible()) {
            std::string msg = "closed-form table is not usable here:";
            for (const auto& d : t.diagnostics) msg += " " + d + ";";
            throw ParameterError(msg);
        }
        note("distribution from the family " + std::to_string(spec->family) + " table, r=" + std::to_string(spec->r));
        return t.distribution;
    }
    case Method::Auto:
        break;
    }

    if (!delta.prime().is_odd())
        return brute_force_distribution(DefiningSet::from_down_set(delta, variant), opts.budget, opts.threads);
    const WeightDistribution analytic = distribution_analytic(delta, variant, opts.budget);
    const DefiningSet L = DefiningSet::from_down_set(delta, variant);
    if (brute_force_cost(L) > opts.budget) {
        note("brute-force cross-check skipped: " + std::to_string(brute_force_cost(L)) +
             " coordinate evaluations exceed the budget");
        return analytic;
    }
    const WeightDistribution brute = brute_force_distribution(L, opts.budget, opts.threads);
    if (!(brute == analytic))
        throw VerificationMismatch("analytic distribution " + analytic.enumerator() +
                                   " differs from brute force " + brute.enumerator());
    note("analytic distribution confirmed by brute force");
    return analytic;
}

CodeReport analyze(const DownSet& delta, Variant variant, const AnalyzeOptions& opts) {
    CodeReport r;
    r.p = delta.prime().value();
    r.m = delta.dimension();
    for (const auto& g : delta.generators()) r.generators.emplace_back(g.entries().begin(), g.entries().end());
    r.variant = variant;

    r.distribution = compute_distribution(delta, variant, opts, &r.diagnostics);
    const DefiningSet L = DefiningSet::from_down_set(delta, variant);
    r.length_ring = L.length();
    r.n = 2 * r.length_ring;
    r.k = gray_rank(L);
    r.size = delta.prime().pow(static_cast<unsigned>(r.k));
    if (r.k != 2 * r.m)
        r.diagnostics.push_back("message map is not injective: Gray image has dimension " + std::to_string(r.k) +
                                " < 2m = " + std::to_string(2 * r.m));
    r.dual_distance_class = dual_distance_class(L);
    if (const auto d = r.distribution.min_nonzero()) {
        r.d = *d;
        r.verdict = distance_optimal_check(r.n, r.k, r.d, delta.prime());
    } else {
        r.diagnostics.push_back("code has no nonzero codeword; bounds not evaluated");
    }
    return r;
}

nlohmann::json to_json(const WeightDistribution& d) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, f] : d.entries()) arr.push_back({w, f});
    return arr;
}

nlohmann::json to_json(const CodeReport& r) {
    nlohmann::json j;
    j["p"] = r.p;
    j["m"] = r.m;
    j["generators"] = r.generators;
    j["variant"] = std::string(to_string(r.variant));
    j["length_ring"] = r.length_ring;
    j["n"] = r.n;
    j["k"] = r.k;
    j["size"] = r.size;
    j["d"] = r.d;
    j["distribution"] = to_json(r.distribution);
    j["dual_distance_class"] = std::string(to_string(r.dual_distance_class));
    j["griesmer_sum_d"] = r.verdict.griesmer_sum_d;
    j["griesmer_sum_d_plus_1"] = r.verdict.griesmer_sum_d_plus_1;
    j["meets_griesmer"] = r.verdict.meets_griesmer;
    j["distance_optimal"] = std::string(to_string(r.verdict.distance_optimal));
    j["diagnostics"] = r.diagnostics;
    return j;
}

std::string render_text(const CodeReport& r) {
    std::ostringstream os;
    os << "p = " << r.p << ", m = " << r.m << ", variant = " << to_string(r.variant) << '\n';
    os << "generators:";
    for (const auto& g : r.generators) {
        os << " (";
        for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
        os << ')';
    }
    if (r.generators.empty()) os << " (none)";
    os << '\n';
    os << "|L| = " << r.length_ring << '\n';
    os << "Gray image: [" << r.n << ", " << r.k << ", " << r.d << "], size " << r.size << '\n';
    os << "Lee (= Hamming) weight enumerator: " << r.distribution.enumerator() << '\n';
    os << "distinct nonzero weights: " << r.distribution.nonzero_weight_count() << '\n';
    os << "dual distance class: " << to_string(r.dual_distance_class) << '\n';
    if (r.d > 0) {
        os << "Griesmer sum (d) = " << r.verdict.griesmer_sum_d << ", (d+1) = " << r.verdict.griesmer_sum_d_plus_1
           << '\n';
        os << "optimality: " << optimality_label(r.verdict) << " (distance optimality "
           << to_string(r.verdict.distance_optimal) << ")\n";
    }
    for (const auto& d : r.diagnostics) os << "note: " << d << '\n';
    return os.str();
}

std::string render_csv(const CodeReport& r) {
    std::ostringstream os;
    os << "weight,frequency\n";
    for (const auto& [w, f] : r.distribution.entries()) os << w << ',' << f << '\n';
    return os.str();
}

} // namespace fewlee
