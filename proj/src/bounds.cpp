#include "fewlee/bounds.hpp"

#include <gmpxx.h>

namespace fewlee {

std::uint64_t griesmer_sum(std::uint64_t k, std::uint64_t d, Prime p) {
    if (k == 0 || d == 0) throw ParameterError("Griesmer sum needs k >= 1 and d >= 1");
    std::uint64_t sum = 0, power = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (power > d) {
            // every remaining term is ceil(d / p^i) = 1
            sum += k - i;
            break;
        }
        sum += (d + power - 1) / power;
        power *= p.value();
    }
    return sum;
}

bool meets_griesmer(std::uint64_t n, std::uint64_t k, std::uint64_t d, Prime p) { return n == griesmer_sum(k, d, p); }

std::string_view to_string(DistanceOptimality d) noexcept {
    return d == DistanceOptimality::Proven ? "PROVEN" : "UNDETERMINED";
}

OptimalityVerdict distance_optimal_check(std::uint64_t n, std::uint64_t k, std::uint64_t d, Prime p) {
    OptimalityVerdict v;
    v.griesmer_sum_d = griesmer_sum(k, d, p);
    v.griesmer_sum_d_plus_1 = griesmer_sum(k, d + 1, p);
    v.meets_griesmer = n == v.griesmer_sum_d;
    v.distance_optimal = v.griesmer_sum_d_plus_1 > n ? DistanceOptimality::Proven : DistanceOptimality::Undetermined;
    return v;
}

std::string optimality_label(const OptimalityVerdict& v) {
    if (v.meets_griesmer) return "Optimal*";
    if (v.distance_optimal == DistanceOptimality::Proven) return "Distance optimal";
    return "Undetermined";
}

bool sphere_packing_ok(std::uint64_t n, std::uint64_t k, std::uint64_t d, Prime p) {
    if (d == 0) throw ParameterError("sphere packing check needs d >= 1");
    if (k > n) return false;
    const std::uint64_t t = (d - 1) / 2;
    mpz_class limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), p.value(), n - k);
    mpz_class term = 1, sum = 1;
    for (std::uint64_t i = 0; i < t && i < n; ++i) {
        // C(n, i+1)(p-1)^{i+1} from C(n, i)(p-1)^i
        term *= n - i;
        term *= p.value() - 1;
        term /= i + 1;
        sum += term;
        if (sum > limit) return false;
    }
    return sum <= limit;
}

} // namespace fewlee
