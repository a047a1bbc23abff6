#include "fewlee/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "fewlee/report.hpp"

namespace fewlee {

namespace {

struct Range {
    Residue lo = 0;
    Residue hi = 0;
};

Range parse_range(const std::string& text) {
    auto parse_one = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v > UINT32_MAX)
            throw ParameterError("bad --r value '" + text + "' (expected N or A..B)");
        return static_cast<Residue>(v);
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const Residue v = parse_one(text);
        return {v, v};
    }
    Range r{parse_one(std::string_view(text).substr(0, dots)), parse_one(std::string_view(text).substr(dots + 2))};
    if (r.lo > r.hi) throw ParameterError("empty --r range '" + text + "'");
    return r;
}

// Writes to --out when given, otherwise to the console stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ParameterError("cannot open output file '" + path + "'");
            os_ = &file_;
        }
    }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

struct CommonOptions {
    std::uint64_t p = 0;
    std::size_t m = 0;
    std::string variant = "complement";
    std::string method = "auto";
    std::uint64_t budget = kDefaultCoordinateBudget;
    std::string format = "text";
    std::string out;
    unsigned threads = 0;
};

DownSet parse_down_set(const CommonOptions& o, const std::string& gens, std::ostream& err) {
    std::size_t dropped = 0;
    DownSet delta = DownSet::parse(Prime(o.p), o.m, gens, &dropped);
    if (dropped > 0)
        err << "warning: dropped " << dropped << " dominated or duplicate generator(s); using \"" << delta.to_string()
            << "\"\n";
    return delta;
}

int cmd_analyze(const CommonOptions& o, const std::string& gens, std::ostream& out, std::ostream& err) {
    if (o.m == 0) throw ParameterError("--m must be at least 1");
    const DownSet delta = parse_down_set(o, gens, err);
    AnalyzeOptions opts{parse_method(o.method), o.budget, o.threads};
    const CodeReport report = analyze(delta, parse_variant(o.variant), opts);
    Sink sink(o.out, out);
    if (o.format == "json") sink.stream() << to_json(report).dump(2) << '\n';
    else if (o.format == "csv") sink.stream() << render_csv(report);
    else sink.stream() << render_text(report);
    return kExitOk;
}

int cmd_matrix(const CommonOptions& o, const std::string& gens, std::ostream& out, std::ostream& err) {
    if (o.m == 0) throw ParameterError("--m must be at least 1");
    const DownSet delta = parse_down_set(o, gens, err);
    const DefiningSet L = DefiningSet::from_down_set(delta, parse_variant(o.variant));
    const GeneratorMatrix g = gray_generator_matrix(L, o.budget);
    Sink sink(o.out, out);
    g.write_text(sink.stream());
    return kExitOk;
}

struct VerifyLine {
    std::string label;
    bool pass = true;
    WeightDistribution brute;
    WeightDistribution analytic;
    std::optional<WeightDistribution> table;
    std::vector<std::string> notes;
};

nlohmann::json to_json(const VerifyLine& v) {
    nlohmann::json j;
    j["case"] = v.label;
    j["pass"] = v.pass;
    j["brute"] = to_json(v.brute);
    j["analytic"] = to_json(v.analytic);
    j["table"] = v.table ? to_json(*v.table) : nlohmann::json(nullptr);
    j["notes"] = v.notes;
    return j;
}

void print_verify(const std::vector<VerifyLine>& lines, const std::string& format, std::ostream& os) {
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& l : lines) arr.push_back(to_json(l));
        os << arr.dump(2) << '\n';
        return;
    }
    std::size_t passed = 0;
    for (const auto& l : lines) {
        passed += l.pass;
        os << (l.pass ? "PASS " : "FAIL ") << l.label << ": " << l.analytic.enumerator() << '\n';
        for (const auto& n : l.notes) os << "     note: " << n << '\n';
        if (!l.pass) {
            os << "     brute:    " << l.brute.enumerator() << '\n';
            os << "     analytic: " << l.analytic.enumerator() << '\n';
            if (l.table) os << "     table:    " << l.table->enumerator() << '\n';
        }
    }
    os << passed << "/" << lines.size() << " cases passed\n";
}

VerifyLine verify_down_set(const DownSet& delta, const std::optional<FamilySpec>& spec, const CommonOptions& o) {
    VerifyLine line;
    line.label = "p=" + std::to_string(delta.prime().value()) + " m=" + std::to_string(delta.dimension()) +
                 " gens=\"" + delta.to_string() + "\"";
    if (spec) line.label = "family " + std::to_string(spec->family) + " r=" + std::to_string(spec->r) + " " + line.label;
    const DefiningSet L = DefiningSet::from_down_set(delta, Variant::Complement);
    line.brute = brute_force_distribution(L, o.budget, o.threads);
    line.analytic = distribution_analytic(delta, Variant::Complement, o.budget);
    line.pass = line.brute == line.analytic;
    if (spec) {
        const TableEvaluation t = table_distribution(*spec);
        if (t.admissible()) {
            line.table = t.distribution;
            line.pass = line.pass && t.distribution == line.analytic;
        } else {
            for (const auto& d : t.diagnostics) line.notes.push_back("table skipped: " + d);
        }
    }
    return line;
}

int cmd_verify(const CommonOptions& o, int family, const std::string& r_text, std::size_t random_count,
               std::uint64_t seed, std::ostream& out) {
    if (o.m == 0) throw ParameterError("--m must be at least 1");
    const Prime p(o.p);
    std::vector<VerifyLine> lines;
    if (random_count > 0) {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < random_count; ++i) {
            const DownSet delta = random_down_set(p, o.m, rng);
            lines.push_back(verify_down_set(delta, std::nullopt, o));
        }
    } else {
        if (family == 0) throw ParameterError("verify needs --family (with --r) or --random");
        const Range range = parse_range(r_text.empty() ? std::string("1..") + std::to_string(o.p - 1) : r_text);
        // validate the whole range before any expensive work
        std::vector<FamilySpec> specs;
        for (Residue r = range.lo; r <= range.hi; ++r) {
            FamilySpec spec{family, p, o.m, r};
            spec.validate();
            specs.push_back(spec);
        }
        for (const auto& spec : specs) {
            const std::uint64_t cost = brute_force_cost(DefiningSet::from_down_set(spec.down_set(), Variant::Complement));
            if (cost > o.budget)
                throw BudgetExceeded("family " + std::to_string(spec.family) + " r=" + std::to_string(spec.r) +
                                     ": brute force needs " + std::to_string(cost) + " coordinate evaluations");
        }
        for (const auto& spec : specs) lines.push_back(verify_down_set(spec.down_set(), spec, o));
    }
    Sink sink(o.out, out);
    print_verify(lines, o.format, sink.stream());
    const bool ok = std::all_of(lines.begin(), lines.end(), [](const VerifyLine& l) { return l.pass; });
    return ok ? kExitOk : kExitMismatch;
}

int cmd_table5(std::uint64_t p_value, const std::vector<std::size_t>& ms, const std::string& format,
               const std::string& out_path, std::ostream& out) {
    const Prime p(p_value);
    if (!p.is_odd()) throw ParameterError("table5 needs an odd prime p");
    if (ms.empty()) throw ParameterError("table5 needs at least one --m value");
    for (const auto m : ms)
        if (m < 3) throw ParameterError("table5 needs m >= 3");
    const auto rows = table5(p, ms);
    Sink sink(out_path, out);
    std::ostream& os = sink.stream();
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json j;
            j["p"] = r.p;
            j["m"] = r.m;
            j["family"] = r.family;
            j["r"] = r.r;
            j["n"] = r.n;
            j["k"] = r.k;
            j["d"] = r.d;
            j["label"] = r.label;
            j["meets_griesmer"] = r.verdict.meets_griesmer;
            j["distance_optimal"] = std::string(to_string(r.verdict.distance_optimal));
            j["flag"] = r.flag;
            arr.push_back(std::move(j));
        }
        os << arr.dump(2) << '\n';
    } else if (format == "csv") {
        os << "p,n,k,d,label,flag\n";
        for (const auto& r : rows) os << r.p << ',' << r.n << ',' << r.k << ',' << r.d << ',' << r.label << ",\"" << r.flag << "\"\n";
    } else {
        for (const auto& r : rows) {
            os << "p=" << r.p << " family " << r.family << " r=" << r.r << "  [" << r.n << ", " << r.k << ", " << r.d
               << "]  " << r.label;
            if (!r.flag.empty()) os << "  !! " << r.flag;
            os << '\n';
        }
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Few-Lee-weight codes over F_p + uF_p from down sets"};
    app.require_subcommand(1);

    CommonOptions o;
    std::string gens;
    int family = 0;
    std::string r_text;
    std::size_t random_count = 0;
    std::uint64_t seed = 1;
    std::vector<std::size_t> ms;

    const std::vector<std::string> formats = {"text", "json", "csv"};
    auto add_common = [&](CLI::App* sub, bool with_method) {
        sub->add_option("--p", o.p, "prime modulus")->required();
        sub->add_option("--budget", o.budget, "maximum coordinate evaluations");
        sub->add_option("--out", o.out, "write output to this file");
        sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
        if (with_method) sub->add_option("--method", o.method, "brute|analytic|table|auto");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "construct C_L and report its Gray image parameters");
    add_common(analyze_cmd, true);
    analyze_cmd->add_option("--m", o.m, "dimension")->required();
    analyze_cmd->add_option("--gens", gens, "down set generators, e.g. \"2,1,0;1,2,0\"")->required();
    analyze_cmd->add_option("--variant", o.variant, "complement|direct");
    analyze_cmd->add_option("--format", o.format, "text|json|csv")->check(CLI::IsMember(formats));

    auto* verify_cmd = app.add_subcommand("verify", "cross-check brute force, analytic and table distributions");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--m", o.m, "dimension")->required();
    verify_cmd->add_option("--family", family, "table family 1..4");
    verify_cmd->add_option("--r", r_text, "r value or range a..b");
    verify_cmd->add_option("--random", random_count, "number of random multi-generator down sets");
    verify_cmd->add_option("--seed", seed, "seed of the random down set generator");
    verify_cmd->add_option("--format", o.format, "text|json")->check(CLI::IsMember(formats));

    auto* table5_cmd = app.add_subcommand("table5", "optimal code parameters of families 1 and 2");
    table5_cmd->add_option("--p", o.p, "odd prime")->required();
    table5_cmd->add_option("--m", ms, "comma-separated dimensions")->required()->delimiter(',');
    table5_cmd->add_option("--format", o.format, "text|json|csv")->check(CLI::IsMember(formats));
    table5_cmd->add_option("--out", o.out, "write output to this file");

    auto* matrix_cmd = app.add_subcommand("matrix", "export the Gray-image generator matrix");
    add_common(matrix_cmd, false);
    matrix_cmd->add_option("--m", o.m, "dimension")->required();
    matrix_cmd->add_option("--gens", gens, "down set generators")->required();
    matrix_cmd->add_option("--variant", o.variant, "complement|direct");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(o, gens, out, err);
        if (*verify_cmd) return cmd_verify(o, family, r_text, random_count, seed, out);
        if (*table5_cmd) return cmd_table5(o.p, ms, o.format, o.out, out);
        if (*matrix_cmd) return cmd_matrix(o, gens, out, err);
    } catch (const BudgetExceeded& e) {
        err << "error: budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const VerificationMismatch& e) {
        err << "error: verification mismatch: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

} // namespace fewlee
