#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fewlee/poset.hpp"
#include "fewlee/ring.hpp"

namespace fewlee {

/// Default cap on coordinate evaluations (messages x code length) for the
/// brute-force oracle, and on matrix entries for generator matrices.
inline constexpr std::uint64_t kDefaultCoordinateBudget = 5'000'000'000ULL;

/// How the defining set L is derived from a down set Delta.
enum class Variant {
    Complement, ///< L = Delta^c + uF_p^m
    Direct,     ///< L = Delta + uF_p^m
};

[[nodiscard]] std::string_view to_string(Variant v) noexcept;
/// "complement" or "direct"; throws ParameterError otherwise.
[[nodiscard]] Variant parse_variant(std::string_view text);

/// L = B + uF_p^m for a base set B of F_p^m.
///
/// Coordinates are ordered with c running over B in lexicographic order
/// (outer) and d over F_p^m in lexicographic order (inner); element
/// (c, d) is the ring vector c + ud.
class DefiningSet {
public:
    static DefiningSet from_down_set(const DownSet& delta, Variant variant,
                                     std::uint64_t budget = kDefaultEnumerationBudget);
    /// Arbitrary base set; sorted and deduplicated.
    static DefiningSet from_base(Prime p, std::size_t m, std::vector<FpVector> base);

    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return m_; }
    [[nodiscard]] std::size_t base_count() const noexcept { return base_count_; }
    /// Row-major base_count x m residues.
    [[nodiscard]] std::span<const Residue> base_raw() const noexcept { return base_; }
    [[nodiscard]] FpVector base_element(std::size_t j) const;
    /// |L| = |B| * p^m.
    [[nodiscard]] std::uint64_t length() const noexcept { return base_count_ * space_; }
    /// p^m
    [[nodiscard]] std::uint64_t space_size() const noexcept { return space_; }

    [[nodiscard]] const std::optional<DownSet>& down_set() const noexcept { return delta_; }
    [[nodiscard]] std::optional<Variant> variant() const noexcept { return variant_; }

    /// The coordinate-th element of L.
    [[nodiscard]] RingVector element(std::uint64_t coordinate) const;

private:
    DefiningSet(Prime p, std::size_t m) : p_(p), m_(m) {}

    Prime p_;
    std::size_t m_;
    std::uint64_t space_ = 0;
    std::size_t base_count_ = 0;
    std::vector<Residue> base_;
    std::optional<DownSet> delta_;
    std::optional<Variant> variant_;
};

/// Exact histogram weight -> number of messages.
class WeightDistribution {
public:
    WeightDistribution() = default;
    explicit WeightDistribution(std::map<std::uint64_t, std::uint64_t> entries);

    void add(std::uint64_t weight, std::uint64_t count = 1);
    void merge(const WeightDistribution& other);

    [[nodiscard]] const std::map<std::uint64_t, std::uint64_t>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::uint64_t total() const noexcept;
    [[nodiscard]] std::uint64_t frequency(std::uint64_t weight) const noexcept;
    /// Least weight > 0, if any.
    [[nodiscard]] std::optional<std::uint64_t> min_nonzero() const noexcept;
    [[nodiscard]] std::size_t nonzero_weight_count() const noexcept;
    /// Sum of weight * frequency.
    [[nodiscard]] std::uint64_t first_moment() const;
    /// "1+6z^810+702z^828"
    [[nodiscard]] std::string enumerator() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

private:
    std::map<std::uint64_t, std::uint64_t> entries_;
};

/// c_L(a) = (<a, l>)_{l in L} in coordinate order.
[[nodiscard]] RingVector codeword(const RingVector& a, const DefiningSet& L,
                                  std::uint64_t budget = kDefaultCoordinateBudget);

/// Lee weight of c_L(a) without materializing the codeword.
[[nodiscard]] std::uint64_t codeword_lee_weight(const RingVector& a, const DefiningSet& L);

/// Histogram of w_L(c_L(a)) over all p^{2m} messages a, by full enumeration.
/// Messages are split into contiguous ranges over `threads` workers
/// (0 = hardware concurrency); the result does not depend on the split.
[[nodiscard]] WeightDistribution brute_force_distribution(const DefiningSet& L,
                                                          std::uint64_t budget = kDefaultCoordinateBudget,
                                                          unsigned threads = 0);

/// Work count of brute_force_distribution: p^{2m} * |L|.
[[nodiscard]] std::uint64_t brute_force_cost(const DefiningSet& L);

/// Generator matrix of the Gray image: 2m rows, 2|L| columns. Row i < m is
/// phi(c_L(e_i)), row m + i is phi(c_L(u e_i)). Columns follow the Gray
/// layout: the b-block over all coordinates, then the (a+b)-block.
class GeneratorMatrix {
public:
    GeneratorMatrix(Prime p, std::size_t rows, std::size_t cols, std::vector<Residue> data);

    static constexpr std::string_view kColumnOrder = "gray-b-then-a+b;base-lex-outer;space-lex-inner";

    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    [[nodiscard]] std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::vector<Residue> column(std::size_t c) const;
    [[nodiscard]] std::size_t rank() const;

    /// "p m rows cols" then one row per line as space-separated digits.
    void write_text(std::ostream& os) const;
    static GeneratorMatrix read_text(std::istream& is);

    friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

private:
    Prime p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

[[nodiscard]] GeneratorMatrix gray_generator_matrix(const DefiningSet& L,
                                                    std::uint64_t budget = kDefaultCoordinateBudget);

/// Visit the columns of the Gray generator matrix of C_L in matrix order
/// without building the matrix. A column is a vector of length 2m.
void for_each_gray_column(const DefiningSet& L, const std::function<void(std::span<const Residue>)>& fn);

/// Rank of the Gray generator matrix from streamed columns.
[[nodiscard]] std::size_t gray_rank(const DefiningSet& L);

/// Minimum distance class of the dual of the row space.
enum class DualDistanceClass {
    One = 1,          ///< a zero column exists
    Two = 2,          ///< no zero column, two proportional columns
    AtLeastThree = 3, ///< columns pairwise independent
};

[[nodiscard]] std::string_view to_string(DualDistanceClass c) noexcept;

[[nodiscard]] DualDistanceClass dual_distance_class(const GeneratorMatrix& g);
/// Same classification on the streamed columns of C_L's Gray image.
[[nodiscard]] DualDistanceClass dual_distance_class(const DefiningSet& L);

} // namespace fewlee
