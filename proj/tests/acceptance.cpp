// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fewlee/analytic.hpp"
#include "fewlee/bounds.hpp"
#include "fewlee/codes.hpp"
#include "fewlee/poset.hpp"
#include "fewlee/ring.hpp"

using namespace fewlee;

namespace {

class Criterion {
public:
    Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

    void check(bool ok, const std::string& what) {
        if (ok) return;
        ok_ = false;
        failures_.push_back(what);
    }
    void note(const std::string& text) { notes_.push_back(text); }

    bool report() const {
        std::cout << (ok_ ? "PASS" : "FAIL") << "  criterion " << id_ << ": " << title_ << '\n';
        for (const auto& n : notes_) std::cout << "      " << n << '\n';
        for (const auto& f : failures_) std::cout << "      mismatch: " << f << '\n';
        return ok_;
    }

private:
    int id_;
    std::string title_;
    bool ok_ = true;
    std::vector<std::string> notes_;
    std::vector<std::string> failures_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

std::string params(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
    return "[" + std::to_string(n) + ", " + std::to_string(k) + ", " + std::to_string(d) + "]";
}

struct CodeUnderTest {
    std::string name;
    DefiningSet L;
    WeightDistribution distribution;
};

// Codes of criteria 1-3, collected for the first-moment check.
std::vector<CodeUnderTest> g_codes;

DefiningSet complement_of(const DownSet& d) { return DefiningSet::from_down_set(d, Variant::Complement); }

void example(Criterion& c, const char* name, Residue q, const char* gens, int family, Residue r, std::uint64_t n,
             std::uint64_t d, const std::string& enumerator, unsigned threads) {
    const Prime p(q);
    const DownSet delta = DownSet::parse(p, 3, gens);
    const DefiningSet L = complement_of(delta);

    const auto t0 = Clock::now();
    const WeightDistribution brute = brute_force_distribution(L, kDefaultCoordinateBudget, threads);
    const double brute_s = seconds_since(t0);
    const auto t1 = Clock::now();
    const WeightDistribution analytic = distribution_analytic(delta, Variant::Complement);
    const double analytic_s = seconds_since(t1);
    const auto spec = FamilySpec::recognize(delta);
    c.check(spec && spec->family == family && spec->r == r, std::string(name) + " not recognized as its family");
    const TableEvaluation table = table_distribution(FamilySpec{family, p, 3, r});

    const std::uint64_t k = gray_rank(L);
    c.check(brute.enumerator() == enumerator, std::string(name) + " brute force " + brute.enumerator());
    c.check(analytic.enumerator() == enumerator, std::string(name) + " analytic " + analytic.enumerator());
    c.check(table.admissible() && table.distribution.enumerator() == enumerator,
            std::string(name) + " table " + table.distribution.enumerator());
    c.check(2 * L.length() == n && k == 6 && brute.min_nonzero() == d,
            std::string(name) + " parameters " + params(2 * L.length(), k, brute.min_nonzero().value_or(0)));
    c.note(std::string(name) + ": " + params(2 * L.length(), k, brute.min_nonzero().value_or(0)) + " " +
           brute.enumerator());
    c.note("brute force " + std::to_string(brute_force_cost(L)) + " evaluations in " + fmt_seconds(brute_s) +
           (threads == 1 ? " (single thread)" : "") + ", analytic in " + fmt_seconds(analytic_s));
    g_codes.push_back({name, L, brute});
}

bool criterion1() {
    Criterion c(1, "example A, p=3 m=3 <(1,1,0)>: brute force, analytic and table agree exactly");
    const auto t0 = Clock::now();
    example(c, "example A", 3, "1,1,0", 3, 1, 1242, 810, "1+6z^810+702z^828+18z^864+2z^972", 0);
    const double s = seconds_since(t0);
    c.check(s < 1.0, "example A took " + fmt_seconds(s));
    return c.report();
}

bool criterion2() {
    Criterion c(2, "example B, p=5 m=3 <(2,2,0)>: brute force, analytic and table agree exactly");
    const auto t0 = Clock::now();
    example(c, "example B", 5, "2,2,0", 4, 2, 29000, 23000,
            "1+20z^23000+15500z^23200+40z^23250+60z^23500+4z^25000", 1);
    const double s = seconds_since(t0);
    c.check(s < 60.0, "example B took " + fmt_seconds(s));
    return c.report();
}

const PrintedTable5Entry* printed_row(Residue p, std::size_t k, int family, Residue r) {
    for (const auto& e : printed_table5())
        if (e.p == p && e.k == k && e.family == family && e.r == r) return &e;
    return nullptr;
}

std::string row_name(const Table5Row& row) {
    return "p=" + std::to_string(row.p) + " m=" + std::to_string(row.m) + " family " + std::to_string(row.family) +
           " r=" + std::to_string(row.r);
}

std::vector<Table5Row> g_table5;

bool criterion3() {
    Criterion c(3, "optimal-code table: p=3 rows exact with brute-force d, p=5 and p=7 rows analytic");
    const std::size_t ms[] = {3, 4};
    std::size_t brute_rows = 0;
    std::size_t flagged = 0;
    for (Residue q : {3u, 5u, 7u}) {
        const Prime p(q);
        for (const Table5Row& row : table5(p, ms)) {
            g_table5.push_back(row);
            const FamilySpec spec{row.family, p, row.m, row.r};
            const DownSet delta = spec.down_set();
            const DefiningSet L = complement_of(delta);
            const WeightDistribution analytic = distribution_analytic(delta, Variant::Complement);
            const std::string name = row_name(row);

            c.check(row.n == 2 * L.length(), name + " n");
            c.check(row.k == 2 * row.m && gray_rank(L) == row.k, name + " k");
            c.check(analytic.min_nonzero() == row.d, name + " analytic d");
            const PredictedParams pred = predicted_params(spec);
            c.check(pred.n == row.n && pred.d == row.d, name + " closed-form n, d");

            const PrintedTable5Entry* printed = printed_row(q, row.k, row.family, row.r);
            c.check(printed != nullptr, name + " missing from the printed table");
            if (!printed) continue;

            if (q == 3) {
                const WeightDistribution brute = brute_force_distribution(L);
                ++brute_rows;
                c.check(brute == analytic, name + " brute force distribution");
                c.check(brute.min_nonzero() == row.d, name + " brute-force d");
                g_codes.push_back({name, L, brute});
                // exact reproduction of the printed entry
                c.check(printed->n == row.n && printed->d == row.d && row.label == printed->label,
                        name + " computed " + params(row.n, row.k, row.d) + " " + row.label + ", printed " +
                            params(printed->n, row.k, printed->d) + " " + printed->label);
            } else {
                g_codes.push_back({name, L, analytic});
                const bool differs = printed->n != row.n || printed->d != row.d || row.label != printed->label;
                c.check(differs == !row.flag.empty(), name + " flag does not match the printed comparison");
                if (differs) {
                    ++flagged;
                    c.note("flagged " + name + ": " + row.flag);
                }
            }
            if (q == 7 && row.m == 4 && row.family == 2 && row.r == 3)
                c.check(row.n == 11395146 && printed->n == 11595146 && !row.flag.empty(),
                        name + " must be flagged against the printed n");
        }
    }
    c.note(std::to_string(g_table5.size()) + " rows, " + std::to_string(brute_rows) +
           " confirmed by brute force, " + std::to_string(flagged) + " flagged for p=5,7");
    return c.report();
}

bool criterion4() {
    Criterion c(4, "Griesmer equality exactly at r=(p-1)/2; distance optimality proven on every row");
    std::size_t meets = 0;
    for (const Table5Row& row : g_table5) {
        const Prime p(row.p);
        const OptimalityVerdict v = distance_optimal_check(row.n, row.k, row.d, p);
        const bool expect = 2 * row.r == row.p - 1;
        meets += v.meets_griesmer;
        c.check(v.meets_griesmer == expect, row_name(row) + " meets_griesmer=" + std::to_string(v.meets_griesmer));
        c.check(v.distance_optimal == DistanceOptimality::Proven, row_name(row) + " not proven distance optimal");
        c.check(row.verdict.meets_griesmer == v.meets_griesmer &&
                    row.verdict.distance_optimal == v.distance_optimal,
                row_name(row) + " table verdict");
    }
    c.note(std::to_string(meets) + " of " + std::to_string(g_table5.size()) + " rows meet the Griesmer bound");
    return c.report();
}

bool criterion5() {
    Criterion c(5, "dual distance class 2 for families 1 and 2 (p=3,5, m=3) and the binary example");
    std::size_t count = 0;
    for (Residue q : {3u, 5u})
        for (int family = 1; family <= 2; ++family)
            for (Residue r = 1; r < q; ++r) {
                const FamilySpec spec{family, Prime(q), 3, r};
                const DualDistanceClass cls = dual_distance_class(complement_of(spec.down_set()));
                ++count;
                c.check(cls == DualDistanceClass::Two, "p=" + std::to_string(q) + " family " +
                                                           std::to_string(family) + " r=" + std::to_string(r) +
                                                           " class " + std::string(to_string(cls)));
            }
    const Prime p2(2);
    const DefiningSet ex = DefiningSet::from_base(p2, 2, {FpVector(p2, {1, 0})});
    const GeneratorMatrix g = gray_generator_matrix(ex);
    c.check(dual_distance_class(g) == DualDistanceClass::Two, "binary example class");
    c.check(g.rank() == 3, "binary example rank " + std::to_string(g.rank()));
    c.note(std::to_string(count) + " family codes and the binary [8, 3] example");
    return c.report();
}

bool criterion6() {
    Criterion c(6, "complementary weight identity, exhaustive for p=3 m=2");
    const auto t0 = Clock::now();
    const Prime p(3);
    const std::size_t m = 2;
    std::size_t checks = 0;
    for (std::uint64_t gi = 0; gi < p.pow(m); ++gi) {
        const DownSet delta = DownSet::canonicalize(p, m, {FpVector::from_lex_index(p, m, gi)});
        const DefiningSet comp = DefiningSet::from_down_set(delta, Variant::Complement);
        const DefiningSet direct = DefiningSet::from_down_set(delta, Variant::Direct);
        for (std::uint64_t ai = 0; ai < p.pow(m); ++ai)
            for (std::uint64_t bi = 0; bi < p.pow(m); ++bi) {
                const FpVector alpha = FpVector::from_lex_index(p, m, ai);
                const FpVector beta = FpVector::from_lex_index(p, m, bi);
                const RingVector a(alpha, beta);
                const std::uint64_t lhs = codeword_lee_weight(a, comp) + codeword_lee_weight(a, direct);
                const std::uint64_t rhs = complementary_weight_sum(p, m, alpha, beta);
                const std::uint64_t analytic = lee_weight_analytic(alpha, beta, delta, Variant::Complement) +
                                               lee_weight_analytic(alpha, beta, delta, Variant::Direct);
                checks += 2;
                c.check(lhs == rhs && analytic == rhs,
                        delta.to_string() + " a=" + a.alpha().to_string() + "+u" + a.beta().to_string());
            }
    }
    const double s = seconds_since(t0);
    c.check(s < 1.0, "took " + fmt_seconds(s));
    c.note(std::to_string(checks) + " checks over " + std::to_string(p.pow(m)) + " down sets in " + fmt_seconds(s));
    return c.report();
}

bool criterion7() {
    Criterion c(7, "analytic distribution equals brute force on random multi-generator down sets");
    std::mt19937_64 rng(20240917);
    std::size_t cases = 0;
    for (Residue q : {3u, 5u})
        for (std::size_t m : {2u, 3u})
            for (int i = 0; i < 16; ++i) {
                const DownSet delta = random_down_set(Prime(q), m, rng, 2, 4);
                for (Variant v : {Variant::Complement, Variant::Direct}) {
                    const WeightDistribution a = distribution_analytic(delta, v);
                    const WeightDistribution b = brute_force_distribution(DefiningSet::from_down_set(delta, v));
                    c.check(a == b, "p=" + std::to_string(q) + " m=" + std::to_string(m) + " " + delta.to_string() +
                                        " " + std::string(to_string(v)));
                }
                ++cases;
            }
    c.note(std::to_string(cases) + " down sets, both variants");
    c.check(cases >= 50, "too few cases");
    return c.report();
}

RingVector random_ring_vector(Prime p, std::size_t m, std::mt19937_64& rng) {
    std::uniform_int_distribution<Residue> digit(0, p.value() - 1);
    std::vector<RingElement> e(m);
    for (auto& x : e) x = {digit(rng), digit(rng)};
    return RingVector(p, std::move(e));
}

bool criterion8() {
    Criterion c(8, "Gray map is an additive isometry");
    std::mt19937_64 rng(99);
    const std::size_t m = 6;
    for (Residue q : {2u, 3u, 5u}) {
        const Prime p(q);
        for (int i = 0; i < 10000; ++i) {
            const RingVector x = random_ring_vector(p, m, rng), y = random_ring_vector(p, m, rng);
            RingVector diff = x;
            diff -= y;
            RingVector sum = x;
            sum += y;
            FpVector image_sum = gray_map(x);
            image_sum += gray_map(y);
            c.check(lee_weight(diff) == hamming_distance(gray_map(x), gray_map(y)), "isometry p=" + std::to_string(q));
            c.check(gray_map(sum) == image_sum, "additivity p=" + std::to_string(q));
        }
    }
    c.note("10000 pairs per p in {2, 3, 5}, length " + std::to_string(m));
    return c.report();
}

bool criterion9() {
    Criterion c(9, "first moment of the weight distribution equals n(p-1)p^(2m-1)");
    std::size_t checked = 0;
    for (const CodeUnderTest& code : g_codes) {
        if (dual_distance_class(code.L) == DualDistanceClass::One) continue;
        const Prime p = code.L.prime();
        const std::size_t m = code.L.dimension();
        const std::uint64_t expect = 2 * code.L.length() * (p.value() - 1) * p.pow(static_cast<unsigned>(2 * m - 1));
        c.check(code.distribution.first_moment() == expect, code.name);
        ++checked;
    }
    c.note(std::to_string(checked) + " of " + std::to_string(g_codes.size()) + " codes have no zero column");
    c.check(checked > 0, "nothing checked");
    return c.report();
}

} // namespace

int main() {
    bool ok = true;
    try {
        ok &= criterion1();
        ok &= criterion2();
        ok &= criterion3();
        ok &= criterion4();
        ok &= criterion5();
        ok &= criterion6();
        ok &= criterion7();
        ok &= criterion8();
        ok &= criterion9();
    } catch (const std::exception& e) {
        std::cout << "FAIL  aborted: " << e.what() << '\n';
        return 1;
    }
    std::cout << (ok ? "all criteria passed" : "some criteria failed") << '\n';
    return ok ? 0 : 1;
}
