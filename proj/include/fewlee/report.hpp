#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fewlee/analytic.hpp"
#include "fewlee/bounds.hpp"
#include "fewlee/codes.hpp"
#include "json.hpp"

namespace fewlee {

/// Route used to obtain a weight distribution.
enum class Method {
    Brute,    ///< full enumeration of messages and coordinates
    Analytic, ///< character-sum counting
    Table,    ///< closed-form family table
    Auto,     ///< analytic (odd p), cross-checked by brute force within budget
};

[[nodiscard]] std::string_view to_string(Method m) noexcept;
[[nodiscard]] Method parse_method(std::string_view text);

/// Parameters of the Gray image phi(C_L) with its weight distribution and
/// optimality verdicts.
struct CodeReport {
    Residue p = 0;
    std::size_t m = 0;
    std::vector<std::vector<Residue>> generators;
    Variant variant = Variant::Complement;
    std::uint64_t length_ring = 0; ///< |L|
    std::uint64_t n = 0;           ///< 2|L|
    std::uint64_t k = 0;           ///< F_p-dimension of the Gray image
    std::uint64_t size = 0;        ///< p^k
    std::uint64_t d = 0;           ///< least nonzero weight, 0 if none
    WeightDistribution distribution;
    DualDistanceClass dual_distance_class = DualDistanceClass::AtLeastThree;
    OptimalityVerdict verdict;
    std::vector<std::string> diagnostics;
};

struct AnalyzeOptions {
    Method method = Method::Auto;
    std::uint64_t budget = kDefaultCoordinateBudget;
    unsigned threads = 0;
};

/// Weight distribution of C_L by the requested method. Auto runs the
/// analytic route for odd p and the brute-force oracle whenever it fits the
/// budget, and throws VerificationMismatch if both ran and disagree.
/// Notes about the route taken are appended to `notes`.
[[nodiscard]] WeightDistribution compute_distribution(const DownSet& delta, Variant variant,
                                                      const AnalyzeOptions& opts,
                                                      std::vector<std::string>* notes = nullptr);

[[nodiscard]] CodeReport analyze(const DownSet& delta, Variant variant, const AnalyzeOptions& opts = {});

/// Canonical JSON: sorted keys, integers only.
[[nodiscard]] nlohmann::json to_json(const CodeReport& r);
[[nodiscard]] std::string render_text(const CodeReport& r);
/// "weight,frequency" rows.
[[nodiscard]] std::string render_csv(const CodeReport& r);

[[nodiscard]] nlohmann::json to_json(const WeightDistribution& d);

} // namespace fewlee
