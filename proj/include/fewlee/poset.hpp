#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fewlee/gf.hpp"

namespace fewlee {

/// Default cap on the number of vectors an enumeration may produce.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 26;

/// Componentwise order on canonical representatives: v <= w iff v_i <= w_i.
[[nodiscard]] bool leq(const FpVector& v, const FpVector& w);

/// (v join w, v meet w): componentwise max and min.
[[nodiscard]] std::pair<FpVector, FpVector> join_meet(const FpVector& v, const FpVector& w);

/// The maximal elements of a finite set of vectors, in lexicographic order.
[[nodiscard]] std::vector<FpVector> maximal_elements(std::vector<FpVector> vs);

/// A down set of F_p^m, held as the antichain of its maximal elements.
///
/// An empty generator list denotes the empty down set. Generators are kept
/// in lexicographic order; the object is immutable once built.
class DownSet {
public:
    /// Drops duplicate and dominated generators.
    static DownSet canonicalize(Prime p, std::size_t m, std::vector<FpVector> generators);

    /// Parses "2,1,0;1,2,0". `dropped`, if given, receives the number of
    /// generators removed by canonicalization. An empty string is the
    /// empty down set.
    static DownSet parse(Prime p, std::size_t m, std::string_view text, std::size_t* dropped = nullptr);

    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return m_; }
    [[nodiscard]] const std::vector<FpVector>& generators() const noexcept { return gens_; }
    [[nodiscard]] bool empty() const noexcept { return gens_.empty(); }

    [[nodiscard]] bool contains(const FpVector& v) const;
    /// Unchecked membership on raw residues of length m.
    [[nodiscard]] bool contains_raw(std::span<const Residue> v) const noexcept;

    /// |Delta| by inclusion-exclusion over generator subsets.
    [[nodiscard]] std::uint64_t size() const;

    /// Members in lexicographic order.
    [[nodiscard]] std::vector<FpVector> enumerate(std::uint64_t budget = kDefaultEnumerationBudget) const;
    /// Members of the complement F_p^m \ Delta in lexicographic order.
    [[nodiscard]] std::vector<FpVector> complement_enumerate(std::uint64_t budget = kDefaultEnumerationBudget) const;

    /// Text form accepted by parse().
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const DownSet& a, const DownSet& b) {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.gens_ == b.gens_;
    }

private:
    DownSet(Prime p, std::size_t m, std::vector<FpVector> gens) : p_(p), m_(m), gens_(std::move(gens)) {}

    std::vector<FpVector> filter(bool members, std::uint64_t budget) const;

    Prime p_;
    std::size_t m_;
    std::vector<FpVector> gens_;
};

/// A random down set with at least `min_generators` maximal elements, drawn
/// by canonicalizing random generator lists until the antichain is large
/// enough. Deterministic for a given engine state.
[[nodiscard]] DownSet random_down_set(Prime p, std::size_t m, std::mt19937_64& rng, std::size_t min_generators = 2,
                                      std::size_t max_generators = 4);

} // namespace fewlee
