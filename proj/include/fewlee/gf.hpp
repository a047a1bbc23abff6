#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fewlee/errors.hpp"

namespace fewlee {

/// Canonical representative 0..p-1 of a residue class.
using Residue = std::uint32_t;

/// A prime modulus. Primality is checked by trial division, and p must be
/// below 2^32 so that products of two residues fit in 64 bits.
class Prime {
public:
    explicit Prime(std::uint64_t p);

    [[nodiscard]] Residue value() const noexcept { return p_; }
    [[nodiscard]] bool is_odd() const noexcept { return p_ != 2; }

    [[nodiscard]] Residue reduce(std::uint64_t x) const noexcept { return static_cast<Residue>(x % p_); }
    [[nodiscard]] Residue add(Residue a, Residue b) const noexcept { return reduce(std::uint64_t{a} + b); }
    [[nodiscard]] Residue sub(Residue a, Residue b) const noexcept { return reduce(std::uint64_t{a} + p_ - b); }
    [[nodiscard]] Residue mul(Residue a, Residue b) const noexcept { return reduce(std::uint64_t{a} * b); }
    [[nodiscard]] Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    /// Multiplicative inverse; `a` must be nonzero.
    [[nodiscard]] Residue inverse(Residue a) const;

    /// p^e, throwing ParameterError on 64-bit overflow.
    [[nodiscard]] std::uint64_t pow(unsigned e) const;

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    Residue p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Element of F_p^m.
class FpVector {
public:
    FpVector(Prime p, std::vector<Residue> entries);
    FpVector(Prime p, std::initializer_list<Residue> entries)
        : FpVector(p, std::vector<Residue>(entries)) {}

    static FpVector zero(Prime p, std::size_t m);
    /// i-th standard basis vector (0-based).
    static FpVector unit(Prime p, std::size_t m, std::size_t i);
    /// Inverse of lex_index: the index-th vector of F_p^m in lexicographic
    /// order (first coordinate most significant).
    static FpVector from_lex_index(Prime p, std::size_t m, std::uint64_t index);

    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] std::size_t size() const noexcept { return e_.size(); }
    [[nodiscard]] Residue operator[](std::size_t i) const { return e_[i]; }
    [[nodiscard]] std::span<const Residue> entries() const noexcept { return e_; }
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] std::uint64_t lex_index() const;

    FpVector& operator+=(const FpVector& o);
    FpVector& operator-=(const FpVector& o);
    [[nodiscard]] FpVector operator-() const;
    [[nodiscard]] FpVector scaled(Residue lambda) const;

    friend FpVector operator+(FpVector a, const FpVector& b) { return a += b; }
    friend FpVector operator-(FpVector a, const FpVector& b) { return a -= b; }

    friend bool operator==(const FpVector& a, const FpVector& b) { return a.p_ == b.p_ && a.e_ == b.e_; }
    /// Lexicographic on the residues; operands must share p.
    friend std::strong_ordering operator<=>(const FpVector& a, const FpVector& b) { return a.e_ <=> b.e_; }

    [[nodiscard]] std::string to_string() const;

private:
    void check_compatible(const FpVector& o) const;

    Prime p_;
    std::vector<Residue> e_;
};

[[nodiscard]] std::size_t hamming_weight(const FpVector& v) noexcept;
[[nodiscard]] std::size_t hamming_distance(const FpVector& v, const FpVector& w);
[[nodiscard]] Residue dot(const FpVector& v, const FpVector& w);

/// Raw dot product on residue spans of equal length; no checks.
[[nodiscard]] inline Residue dot_raw(Prime p, std::span<const Residue> v, std::span<const Residue> w) noexcept {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += std::uint64_t{v[i]} * w[i] % p.value();
    return p.reduce(acc);
}

/// Advance `digits` to the lexicographic successor in F_p^m. Returns false
/// after the last vector (digits wrap to zero).
bool next_lex(std::span<Residue> digits, Residue p) noexcept;

/// Visit every vector of F_p^m in lexicographic order.
void for_each_vector(Prime p, std::size_t m, const std::function<void(std::span<const Residue>)>& fn);

} // namespace fewlee
