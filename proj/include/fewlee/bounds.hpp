#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fewlee/gf.hpp"

namespace fewlee {

/// sum_{i=0}^{k-1} ceil(d / p^i). Requires k >= 1 and d >= 1.
[[nodiscard]] std::uint64_t griesmer_sum(std::uint64_t k, std::uint64_t d, Prime p);

/// n equals the Griesmer sum of (k, d).
[[nodiscard]] bool meets_griesmer(std::uint64_t n, std::uint64_t k, std::uint64_t d, Prime p);

enum class DistanceOptimality {
    Proven,       ///< no [n, k, d+1] code can exist by the Griesmer bound
    Undetermined, ///< the Griesmer bound does not decide
};

[[nodiscard]] std::string_view to_string(DistanceOptimality d) noexcept;

struct OptimalityVerdict {
    bool meets_griesmer = false;
    DistanceOptimality distance_optimal = DistanceOptimality::Undetermined;
    std::uint64_t griesmer_sum_d = 0;
    std::uint64_t griesmer_sum_d_plus_1 = 0;
};

/// Distance optimality is PROVEN iff griesmer_sum(k, d+1) > n. The check is
/// sufficient only, so a failure is reported as UNDETERMINED, never as
/// "not optimal".
[[nodiscard]] OptimalityVerdict distance_optimal_check(std::uint64_t n, std::uint64_t k, std::uint64_t d, Prime p);

/// "Optimal*" when the Griesmer bound is met, "Distance optimal" when
/// distance optimality is proven, otherwise "Undetermined".
[[nodiscard]] std::string optimality_label(const OptimalityVerdict& v);

/// p^k * sum_{i=0}^{t} C(n, i) (p-1)^i <= p^n with t = floor((d-1)/2), in
/// exact integer arithmetic. The partial sum is abandoned as soon as it
/// exceeds p^{n-k}.
[[nodiscard]] bool sphere_packing_ok(std::uint64_t n, std::uint64_t k, std::uint64_t d, Prime p);

} // namespace fewlee
