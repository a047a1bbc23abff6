#include "fewlee/analytic.hpp"

#include <algorithm>
#include <array>

namespace fewlee {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 x, const char* what) {
    if (x > INT64_MAX || x < INT64_MIN) throw ParameterError(std::string(what) + " overflows 64 bits");
    return static_cast<std::int64_t>(x);
}

void require_odd(Prime p) {
    if (!p.is_odd()) throw ParameterError("the character-sum weight formulas require an odd prime p (got p = 2)");
}

void check_shape(const FpVector& v, const DownSet& delta, const char* name) {
    if (!(v.prime() == delta.prime()) || v.size() != delta.dimension())
        throw DimensionError(std::string(name) + " does not lie in the ambient space of the down set");
}

std::uint64_t count_zero_dots(Prime p, std::span<const Residue> beta, const std::vector<FpVector>& members) {
    std::uint64_t n = 0;
    for (const auto& t : members) n += dot_raw(p, beta, t.entries()) == 0;
    return n;
}

// Weight for alpha = 0 given N_0(beta, Delta). S_B is the character sum over
// the base set B of the variant.
std::uint64_t alpha_zero_weight(Prime p, std::size_t m, std::uint64_t delta_size, bool beta_zero,
                                std::uint64_t zeros_in_delta, Variant variant) {
    const i128 q = p.value();
    const i128 space = p.pow(static_cast<unsigned>(m));
    const i128 base_size = variant == Variant::Direct ? i128(delta_size) : space - delta_size;
    const i128 length = base_size * space;
    const i128 zeros_in_space = beta_zero ? space : space / q;
    const i128 zeros_in_base = variant == Variant::Direct ? i128(zeros_in_delta) : zeros_in_space - zeros_in_delta;
    const i128 s = q * zeros_in_base - base_size;
    const i128 w = 2 * length * (q - 1) / q - 2 * (space / q) * s;
    return static_cast<std::uint64_t>(narrow(w, "Lee weight"));
}

std::uint64_t alpha_nonzero_weight(Prime p, std::size_t m, std::uint64_t delta_size, Variant variant) {
    const i128 q = p.value();
    const i128 space = p.pow(static_cast<unsigned>(m));
    const i128 base_size = variant == Variant::Direct ? i128(delta_size) : space - delta_size;
    return static_cast<std::uint64_t>(narrow(2 * base_size * space * (q - 1) / q, "Lee weight"));
}

Variant opposite(Variant v) { return v == Variant::Complement ? Variant::Direct : Variant::Complement; }

} // namespace

std::uint64_t zero_count(const FpVector& beta, const DownSet& delta) {
    check_shape(beta, delta, "beta");
    return count_zero_dots(delta.prime(), beta.entries(), delta.enumerate());
}

std::int64_t char_sum(const FpVector& beta, const DownSet& delta) {
    const std::int64_t zeros = static_cast<std::int64_t>(zero_count(beta, delta));
    return static_cast<std::int64_t>(delta.prime().value()) * zeros - static_cast<std::int64_t>(delta.size());
}

std::uint64_t lee_weight_analytic(const FpVector& alpha, const FpVector& beta, const DownSet& delta,
                                  Variant variant) {
    check_shape(alpha, delta, "alpha");
    check_shape(beta, delta, "beta");
    require_odd(delta.prime());
    if (!alpha.is_zero()) return alpha_nonzero_weight(delta.prime(), delta.dimension(), delta.size(), variant);
    return alpha_zero_weight(delta.prime(), delta.dimension(), delta.size(), beta.is_zero(), zero_count(beta, delta),
                             variant);
}

std::uint64_t complementary_weight_sum(Prime p, std::size_t m, const FpVector& alpha, const FpVector& beta) {
    const i128 q = p.value();
    const i128 top = i128(p.pow(static_cast<unsigned>(2 * m - 1))) * (q - 1);
    i128 sum = 2 * top;
    if (alpha.is_zero()) sum -= top * (i128(beta.is_zero()) + i128((alpha + beta).is_zero()));
    return static_cast<std::uint64_t>(narrow(sum, "weight sum"));
}

std::uint64_t lee_weight_analytic_via_identity(const FpVector& alpha, const FpVector& beta, const DownSet& delta,
                                               Variant variant) {
    const std::uint64_t other = lee_weight_analytic(alpha, beta, delta, opposite(variant));
    return complementary_weight_sum(delta.prime(), delta.dimension(), alpha, beta) - other;
}

WeightDistribution distribution_analytic(const DownSet& delta, Variant variant, std::uint64_t budget) {
    const Prime p = delta.prime();
    require_odd(p);
    const std::size_t m = delta.dimension();
    const std::uint64_t space = p.pow(static_cast<unsigned>(m));
    const std::uint64_t delta_size = delta.size();
    const std::uint64_t work = space * std::max<std::uint64_t>(delta_size, 1);
    if (work > budget)
        throw BudgetExceeded("analytic distribution needs " + std::to_string(work) + " steps, budget is " +
                             std::to_string(budget));
    const auto members = delta.enumerate(budget);

    WeightDistribution dist;
    dist.add(alpha_nonzero_weight(p, m, delta_size, variant), (space - 1) * space);
    std::vector<Residue> beta(m, 0);
    do {
        const bool beta_zero = std::all_of(beta.begin(), beta.end(), [](Residue x) { return x == 0; });
        dist.add(alpha_zero_weight(p, m, delta_size, beta_zero, count_zero_dots(p, beta, members), variant));
    } while (next_lex(beta, p.value()));
    return dist;
}

void FamilySpec::validate() const {
    const std::string where = "family " + std::to_string(family) + " (p=" + std::to_string(p.value()) +
                              ", m=" + std::to_string(m) + ", r=" + std::to_string(r) + "): ";
    if (family < 1 || family > 4) throw ParameterError("unknown family " + std::to_string(family) + "; expected 1..4");
    if (!p.is_odd()) throw ParameterError(where + "p must be an odd prime");
    const std::size_t min_m = family == 1 ? 2 : 3;
    if (m < min_m) throw ParameterError(where + "m must be at least " + std::to_string(min_m));
    const Residue r_max = family <= 2 ? p.value() - 1 : p.value() - 2;
    if (r < 1 || r > r_max) throw ParameterError(where + "r must lie in 1.." + std::to_string(r_max));
    if (family == 4 && p.value() < 5) throw ParameterError(where + "family 4 needs p >= 5");
}

DownSet FamilySpec::down_set() const {
    validate();
    std::vector<Residue> g(m, 0);
    if (family == 1) {
        g[0] = r;
    } else {
        g[0] = p.value() + 1 - static_cast<Residue>(family); // p-1, p-2, p-3
        g[1] = r;
    }
    return DownSet::canonicalize(p, m, {FpVector(p, std::move(g))});
}

std::uint64_t FamilySpec::length() const {
    validate();
    const std::uint64_t space = p.pow(static_cast<unsigned>(m));
    const std::uint64_t first = family == 1 ? 1 : p.value() + 1 - static_cast<Residue>(family) + 1;
    return space * (space - first * (r + 1));
}

std::optional<FamilySpec> FamilySpec::recognize(const DownSet& delta) {
    if (delta.generators().size() != 1 || !delta.prime().is_odd()) return std::nullopt;
    const FpVector& g = delta.generators().front();
    const Residue p = delta.prime().value();
    const std::size_t m = delta.dimension();
    for (std::size_t i = 2; i < m; ++i)
        if (g[i] != 0) return std::nullopt;
    std::optional<FamilySpec> found;
    auto attempt = [&](int family, Residue r) {
        FamilySpec s{family, delta.prime(), m, r};
        try {
            s.validate();
        } catch (const ParameterError&) {
            return;
        }
        if (!found) found = s;
    };
    if (m >= 2 && g[1] == 0) attempt(1, g[0]);
    if (m >= 2 && g[1] != 0) {
        if (g[0] == p - 1) attempt(2, g[1]);
        if (p >= 2 && g[0] == p - 2) attempt(3, g[1]);
        if (p >= 3 && g[0] == p - 3) attempt(4, g[1]);
    }
    return found;
}

TableEvaluation table_distribution(const FamilySpec& spec) {
    spec.validate();
    const i128 p = spec.p.value();
    const unsigned m = static_cast<unsigned>(spec.m);
    const i128 r = spec.r;
    const i128 pm = spec.p.pow(m), pm1 = pm / p, pm2 = pm1 / p;
    const i128 top = 2 * (pm * pm / p) * (p - 1); // 2p^{2m-1}(p-1)

    std::vector<std::array<i128, 2>> rows = {{0, 1}};
    switch (spec.family) {
    case 1:
        rows.push_back({top, pm1 - 1});
        rows.push_back({2 * pm * (pm - pm1 - r), pm1 * (p - 1)});
        rows.push_back({2 * pm1 * (p - 1) * (pm - r - 1), pm * (pm - 1)});
        break;
    case 2:
        rows.push_back({top, pm2 - 1});
        rows.push_back({2 * pm * p * (pm1 - pm2 - r), pm2 * (p - 1)});
        rows.push_back({2 * pm * (p - 1) * (pm1 - r - 1), pm * pm - pm1});
        break;
    case 3:
        rows.push_back({top, pm2 - 1});
        rows.push_back({2 * pm * (p - 1) * (pm1 - r), pm2 * (p - 1)});
        rows.push_back({top - 2 * pm * (p - 2) * (r + 1), pm2 * (p - 1) * (p - r)});
        rows.push_back({top - 2 * pm * (p * r + p - 2 * r - 1), pm2 * r * (p - 1)});
        rows.push_back({2 * pm1 * (p - 1) * (pm - (p - 1) * (r + 1)), pm * (pm - 1)});
        break;
    case 4: {
        const i128 half_r = r / 2;
        rows.push_back({top, pm2 - 1});
        rows.push_back({top - 2 * pm * (p - 2) * r, pm2 * (p - 1)});
        rows.push_back({top - 2 * pm * (p - 3) * (r + 1), pm2 * (p - 1) * ((p + 1) / 2 - r + half_r)});
        rows.push_back({top - 2 * pm * (p * r + p - 3 * r - 2), pm2 * (p - 1) * (p - 1 - 2 * half_r)});
        rows.push_back({top - 2 * pm * (p * r + p - 3 * r - 1), pm2 * (p - 1) * (half_r + r - (p - 1) / 2)});
        rows.push_back({2 * pm1 * (p - 1) * (pm - (p - 2) * (r + 1)), pm * (pm - 1)});
        break;
    }
    default: break;
    }

    TableEvaluation out;
    for (const auto& [w, f] : rows) {
        TableRow row{narrow(w, "table weight"), narrow(f, "table frequency")};
        out.rows.push_back(row);
        if (row.frequency < 0 || row.weight < 0) {
            out.diagnostics.push_back("row with weight " + std::to_string(row.weight) + " has negative frequency " +
                                      std::to_string(row.frequency));
        } else {
            out.distribution.add(static_cast<std::uint64_t>(row.weight), static_cast<std::uint64_t>(row.frequency));
        }
    }
    if (spec.family == 4 && 2 * r < p - 1)
        out.diagnostics.push_back("family 4 closed form does not hold for r < (p-1)/2; use the analytic method");
    return out;
}

PredictedParams predicted_params(const FamilySpec& spec) {
    spec.validate();
    if (spec.family != 1 && spec.family != 2)
        throw ParameterError("optimality predictions exist only for families 1 and 2");
    if (spec.m < 3) throw ParameterError("optimality predictions need m >= 3");
    const i128 p = spec.p.value();
    const i128 r = spec.r;
    const i128 pm = spec.p.pow(static_cast<unsigned>(spec.m)), pm1 = pm / p;
    PredictedParams out{};
    out.k = 2 * spec.m;
    if (spec.family == 1) {
        out.n = static_cast<std::uint64_t>(narrow(2 * pm * (pm - r - 1), "n"));
        out.d = static_cast<std::uint64_t>(narrow(2 * pm1 * (p - 1) * (pm - r - 1), "d"));
    } else {
        out.n = static_cast<std::uint64_t>(narrow(2 * pm * (pm - p * (r + 1)), "n"));
        out.d = static_cast<std::uint64_t>(narrow(2 * pm * (p - 1) * (pm1 - r - 1), "d"));
    }
    out.meets_griesmer = 2 * r == p - 1;
    out.distance_optimal = true;
    return out;
}

namespace {

constexpr const char* kStar = "Optimal*";
constexpr const char* kDist = "Distance optimal";

// clang-format off
constexpr PrintedTable5Entry kPrinted[] = {
    {3, 6, 1, 1, 1350, 900, kStar},       {3, 6, 1, 2, 1296, 864, kDist},
    {3, 6, 2, 1, 1134, 756, kStar},       {3, 6, 2, 2, 972, 648, kDist},
    {3, 8, 1, 1, 12798, 8532, kStar},     {3, 8, 1, 2, 12636, 8428, kDist},
    {3, 8, 2, 1, 12150, 8100, kStar},     {3, 8, 2, 2, 11664, 7776, kDist},

    {5, 6, 1, 1, 30750, 24600, kDist},    {5, 6, 1, 2, 30500, 24400, kStar},
    {5, 6, 1, 3, 30250, 24200, kDist},    {5, 6, 1, 4, 30000, 24000, kDist},
    {5, 6, 2, 1, 28750, 23000, kDist},    {5, 6, 2, 2, 27500, 22000, kStar},
    {5, 6, 2, 3, 26250, 21000, kDist},    {5, 6, 2, 4, 25000, 20000, kDist},
    {5, 8, 1, 1, 778750, 623000, kDist},  {5, 8, 1, 2, 777500, 622000, kStar},
    {5, 8, 1, 3, 776250, 621000, kDist},  {5, 8, 1, 4, 775000, 620000, kDist},
    {5, 8, 2, 1, 768750, 615000, kDist},  {5, 8, 2, 2, 762500, 610000, kStar},
    {5, 8, 2, 3, 756250, 605000, kDist},  {5, 8, 2, 4, 750000, 600000, kDist},

    {7, 6, 1, 1, 233926, 200508, kDist},  {7, 6, 1, 2, 233240, 199920, kDist},
    {7, 6, 1, 3, 232554, 199332, kStar},  {7, 6, 1, 4, 231868, 198744, kDist},
    {7, 6, 1, 5, 231182, 198156, kDist},  {7, 6, 1, 6, 230496, 197568, kDist},
    {7, 6, 2, 1, 225694, 193452, kDist},  {7, 6, 2, 2, 220892, 189336, kDist},
    {7, 6, 2, 3, 216090, 185220, kStar},  {7, 6, 2, 4, 211288, 181104, kDist},
    {7, 6, 2, 5, 206486, 176988, kDist},  {7, 6, 2, 6, 210684, 172872, kDist},
    {7, 8, 1, 1, 11519998, 9874284, kDist}, {7, 8, 1, 2, 11515196, 9870168, kDist},
    {7, 8, 1, 3, 11510394, 9866052, kStar}, {7, 8, 1, 4, 11505592, 9861936, kDist},
    {7, 8, 1, 5, 11500790, 9857820, kDist}, {7, 8, 1, 6, 11495988, 9853704, kDist},
    {7, 8, 2, 1, 11462374, 9824892, kDist}, {7, 8, 2, 2, 11428760, 9796080, kDist},
    {7, 8, 2, 3, 11595146, 9767268, kStar}, {7, 8, 2, 4, 11361532, 9738456, kDist},
    {7, 8, 2, 5, 11327918, 9709644, kDist}, {7, 8, 2, 6, 11294304, 9680832, kDist},
};
// clang-format on

const PrintedTable5Entry* find_printed(Residue p, std::size_t k, int family, Residue r) {
    for (const auto& e : kPrinted)
        if (e.p == p && e.k == k && e.family == family && e.r == r) return &e;
    return nullptr;
}

void append_flag(std::string& flag, const std::string& msg) {
    if (!flag.empty()) flag += "; ";
    flag += msg;
}

} // namespace

std::span<const PrintedTable5Entry> printed_table5() { return kPrinted; }

std::vector<Table5Row> table5(Prime p, std::span<const std::size_t> ms) {
    std::vector<Table5Row> out;
    for (const std::size_t m : ms) {
        for (int family = 1; family <= 2; ++family) {
            for (Residue r = 1; r < p.value(); ++r) {
                const FamilySpec spec{family, p, m, r};
                const PredictedParams pred = predicted_params(spec);
                Table5Row row{p.value(), m, family, r, pred.n, pred.k, pred.d, {}, {}, {}};
                row.verdict = distance_optimal_check(pred.n, pred.k, pred.d, p);
                row.label = pred.meets_griesmer ? kStar : kDist;
                if (row.verdict.meets_griesmer != pred.meets_griesmer ||
                    (row.verdict.distance_optimal == DistanceOptimality::Proven) != pred.distance_optimal)
                    append_flag(row.flag, "predicted label '" + row.label + "' but bounds give '" +
                                              optimality_label(row.verdict) + "'");
                if (const auto* printed = find_printed(p.value(), pred.k, family, r)) {
                    if (printed->n != pred.n)
                        append_flag(row.flag, "printed n=" + std::to_string(printed->n) + " differs from computed n=" +
                                                  std::to_string(pred.n));
                    if (printed->d != pred.d)
                        append_flag(row.flag, "printed d=" + std::to_string(printed->d) + " differs from computed d=" +
                                                  std::to_string(pred.d));
                    if (printed->label != row.label)
                        append_flag(row.flag, std::string("printed label '") + printed->label + "' differs");
                }
                out.push_back(std::move(row));
            }
        }
    }
    return out;
}

} // namespace fewlee
