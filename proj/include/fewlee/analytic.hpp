#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fewlee/bounds.hpp"
#include "fewlee/codes.hpp"

namespace fewlee {

/// #{t in Delta : beta.t = 0}
[[nodiscard]] std::uint64_t zero_count(const FpVector& beta, const DownSet& delta);

/// sum_{x in F_p^*} sum_{t in Delta} zeta_p^{x beta.t}, evaluated exactly as
/// p * #{t in Delta : beta.t = 0} - |Delta| using orthogonality of additive
/// characters. Always congruent to -|Delta| mod p.
[[nodiscard]] std::int64_t char_sum(const FpVector& beta, const DownSet& delta);

/// w_L(c_L(alpha + u beta)) from the character-sum formula. Requires odd p.
[[nodiscard]] std::uint64_t lee_weight_analytic(const FpVector& alpha, const FpVector& beta, const DownSet& delta,
                                                Variant variant);

/// The same weight assembled the other way: the sum identity for
/// w_L(c_{L^c}(a)) + w_L(c_L(a)) minus the formula weight of the opposite
/// variant.
[[nodiscard]] std::uint64_t lee_weight_analytic_via_identity(const FpVector& alpha, const FpVector& beta,
                                                             const DownSet& delta, Variant variant);

/// Right-hand side of the sum identity:
/// 2p^{2m-1}(p-1) - p^{2m-1}(p-1) [alpha=0]([beta=0] + [alpha+beta=0]).
[[nodiscard]] std::uint64_t complementary_weight_sum(Prime p, std::size_t m, const FpVector& alpha,
                                                     const FpVector& beta);

/// Exact Lee weight distribution of C_L from character sums: the alpha != 0
/// messages form one constant-weight class; the alpha = 0 messages are
/// enumerated over beta. Work is p^m * |Delta| and is checked against
/// `budget`. Requires odd p.
[[nodiscard]] WeightDistribution distribution_analytic(const DownSet& delta, Variant variant,
                                                       std::uint64_t budget = kDefaultCoordinateBudget);

/// Single-generator down set families with closed-form weight tables:
///   1: <(r, 0, ..., 0)>,         1 <= r <= p-1, m >= 2
///   2: <(p-1, r, 0, ..., 0)>,    1 <= r <= p-1, m >= 3
///   3: <(p-2, r, 0, ..., 0)>,    1 <= r <= p-2, m >= 3
///   4: <(p-3, r, 0, ..., 0)>,    1 <= r <= p-2, m >= 3, p >= 5
/// p is odd throughout.
struct FamilySpec {
    int family;
    Prime p;
    std::size_t m;
    Residue r;

    /// Throws ParameterError when the parameters fall outside the family.
    void validate() const;
    [[nodiscard]] DownSet down_set() const;
    /// |L| for the complement defining set.
    [[nodiscard]] std::uint64_t length() const;

    /// The family and r whose down set equals `delta`, if any.
    static std::optional<FamilySpec> recognize(const DownSet& delta);
};

struct TableRow {
    std::int64_t weight;
    std::int64_t frequency;
};

struct TableEvaluation {
    /// Rows exactly as the closed form lists them, before merging.
    std::vector<TableRow> rows;
    /// Rows with equal weight merged; zero-frequency rows dropped.
    WeightDistribution distribution;
    /// Non-empty when the closed form cannot be trusted for these parameters.
    std::vector<std::string> diagnostics;

    [[nodiscard]] bool admissible() const noexcept { return diagnostics.empty(); }
};

/// Evaluates the closed-form Lee weight table of a family (complement
/// defining set). Negative frequencies are reported as diagnostics, and so
/// is family 4 with 2r < p-1, where the table's case split does not match
/// the character-sum count.
[[nodiscard]] TableEvaluation table_distribution(const FamilySpec& spec);

struct PredictedParams {
    std::uint64_t n;
    std::uint64_t k;
    std::uint64_t d;
    bool meets_griesmer;
    bool distance_optimal;
};

/// [n, k, d] of the Gray image for families 1 and 2 (m >= 3), with the
/// optimality claims: distance optimal always, Griesmer-meeting iff
/// r = (p-1)/2.
[[nodiscard]] PredictedParams predicted_params(const FamilySpec& spec);

/// Reference row of the published table of optimal codes, transcribed as
/// printed (labels normalized).
struct PrintedTable5Entry {
    Residue p;
    std::size_t k;
    int family;
    Residue r;
    std::uint64_t n;
    std::uint64_t d;
    const char* label;
};

[[nodiscard]] std::span<const PrintedTable5Entry> printed_table5();

struct Table5Row {
    Residue p;
    std::size_t m;
    int family;
    Residue r;
    std::uint64_t n;
    std::uint64_t k;
    std::uint64_t d;
    std::string label;
    OptimalityVerdict verdict;
    /// Empty, or a description of every disagreement with the printed table
    /// or between the predicted and the computed verdict.
    std::string flag;
};

/// Family 1 rows for r = 1..p-1, then family 2 rows, for each m in order.
[[nodiscard]] std::vector<Table5Row> table5(Prime p, std::span<const std::size_t> ms);

} // namespace fewlee
