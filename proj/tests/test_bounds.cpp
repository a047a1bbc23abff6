#include <array>
#include <random>

#include "doctest.h"
#include "fewlee/bounds.hpp"

using namespace fewlee;

TEST_SUITE("bounds") {

TEST_CASE("griesmer_sum examples") {
    const Prime p3(3);
    CHECK(griesmer_sum(6, 900, p3) == 1350);
    CHECK(griesmer_sum(6, 649, p3) == 976);
    CHECK(griesmer_sum(6, 648, p3) == 971);
    CHECK(griesmer_sum(1, 17, p3) == 17);
    CHECK(griesmer_sum(4, 3, Prime(2)) == 7);
    CHECK(griesmer_sum(60, 1, Prime(7)) == 60);
    CHECK_THROWS_AS((void)griesmer_sum(0, 3, p3), ParameterError);
    CHECK_THROWS_AS((void)griesmer_sum(3, 0, p3), ParameterError);
}

TEST_CASE("griesmer_sum is monotone and agrees with a naive ceiling sum") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const Residue q = std::array<Residue, 4>{2, 3, 5, 7}[rng() % 4];
        const std::uint64_t k = 1 + rng() % 12, d = 1 + rng() % 100000;
        std::uint64_t naive = 0, pi = 1;
        for (std::uint64_t j = 0; j < k; ++j, pi *= q) naive += (d + pi - 1) / pi;
        CHECK(griesmer_sum(k, d, Prime(q)) == naive);
        CHECK(griesmer_sum(k, d + 1, Prime(q)) > griesmer_sum(k, d, Prime(q)));
        CHECK(griesmer_sum(k + 1, d, Prime(q)) > griesmer_sum(k, d, Prime(q)));
    }
}

TEST_CASE("meets_griesmer and distance optimality") {
    const Prime p3(3);
    CHECK(meets_griesmer(1350, 6, 900, p3));
    CHECK_FALSE(meets_griesmer(972, 6, 648, p3));

    const auto v = distance_optimal_check(972, 6, 648, p3);
    CHECK_FALSE(v.meets_griesmer);
    CHECK(v.distance_optimal == DistanceOptimality::Proven);
    CHECK(v.griesmer_sum_d == 971);
    CHECK(v.griesmer_sum_d_plus_1 == 976);
    CHECK(optimality_label(v) == "Distance optimal");

    const auto u = distance_optimal_check(976, 6, 648, p3);
    CHECK(u.distance_optimal == DistanceOptimality::Undetermined);
    CHECK(optimality_label(u) == "Undetermined");

    CHECK(optimality_label(distance_optimal_check(1350, 6, 900, p3)) == "Optimal*");
    CHECK(to_string(DistanceOptimality::Proven) == "PROVEN");
    CHECK(to_string(DistanceOptimality::Undetermined) == "UNDETERMINED");
}

TEST_CASE("meeting the bound implies proven distance optimality") {
    for (Residue q : {2u, 3u, 5u})
        for (std::uint64_t k = 1; k <= 6; ++k)
            for (std::uint64_t d = 1; d <= 300; ++d) {
                const std::uint64_t n = griesmer_sum(k, d, Prime(q));
                const auto v = distance_optimal_check(n, k, d, Prime(q));
                CHECK(v.meets_griesmer);
                CHECK(v.distance_optimal == DistanceOptimality::Proven);
                CHECK(distance_optimal_check(n + 1, k, d, Prime(q)).meets_griesmer == false);
            }
}

TEST_CASE("sphere packing") {
    CHECK(sphere_packing_ok(3, 1, 3, Prime(2)));
    CHECK(sphere_packing_ok(7, 4, 3, Prime(2)));
    CHECK_FALSE(sphere_packing_ok(7, 5, 3, Prime(2)));
    CHECK(sphere_packing_ok(23, 12, 7, Prime(2)));
    CHECK(sphere_packing_ok(1296, 1295, 2, Prime(3)));
    CHECK_FALSE(sphere_packing_ok(1296, 1290, 3, Prime(3)));
    CHECK_FALSE(sphere_packing_ok(4, 5, 1, Prime(3)));
    CHECK(sphere_packing_ok(1350, 1344, 3, Prime(3)) == false);
}

}
