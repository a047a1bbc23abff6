#pragma once

#include <vector>

#include "fewlee/gf.hpp"

namespace fewlee {

/// a + u*b in R = F_p + uF_p with u^2 = 0.
struct RingElement {
    Residue a = 0;
    Residue b = 0;

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

[[nodiscard]] inline RingElement ring_add(Prime p, RingElement x, RingElement y) noexcept {
    return {p.add(x.a, y.a), p.add(x.b, y.b)};
}

/// (a+ub)(c+ud) = ac + u(ad + bc)
[[nodiscard]] inline RingElement ring_mul(Prime p, RingElement x, RingElement y) noexcept {
    return {p.mul(x.a, y.a), p.add(p.mul(x.a, y.b), p.mul(x.b, y.a))};
}

/// Element of R^m, stored as (a, b) pairs so a coordinate is one cache line
/// touch.
class RingVector {
public:
    RingVector(Prime p, std::vector<RingElement> pairs);
    /// alpha + u*beta
    RingVector(const FpVector& alpha, const FpVector& beta);

    static RingVector zero(Prime p, std::size_t m);

    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] std::size_t size() const noexcept { return e_.size(); }
    [[nodiscard]] const RingElement& operator[](std::size_t i) const { return e_[i]; }
    [[nodiscard]] std::span<const RingElement> pairs() const noexcept { return e_; }

    [[nodiscard]] FpVector alpha() const;
    [[nodiscard]] FpVector beta() const;
    [[nodiscard]] bool is_zero() const noexcept;

    RingVector& operator+=(const RingVector& o);
    RingVector& operator-=(const RingVector& o);
    /// Multiplication by a scalar of F_p (not of R).
    [[nodiscard]] RingVector scaled(Residue lambda) const;

    friend RingVector operator+(RingVector x, const RingVector& y) { return x += y; }
    friend RingVector operator-(RingVector x, const RingVector& y) { return x -= y; }
    friend bool operator==(const RingVector& x, const RingVector& y) { return x.p_ == y.p_ && x.e_ == y.e_; }

private:
    void check_compatible(const RingVector& o) const;

    Prime p_;
    std::vector<RingElement> e_;
};

/// <x, y> = a.c + u(a.d + b.c) for x = a + ub, y = c + ud.
[[nodiscard]] RingElement inner_product(const RingVector& x, const RingVector& y);

/// phi(a + ub) = (b, a + b): the b-block followed by the (a+b)-block.
[[nodiscard]] FpVector gray_map(const RingVector& x);

/// Hamming weight of the Gray image: w_H(b) + w_H(a + b).
[[nodiscard]] std::size_t lee_weight(const RingVector& x) noexcept;

/// Lee weight of one ring element.
[[nodiscard]] inline unsigned lee_weight(Prime p, RingElement x) noexcept {
    return (x.b != 0) + (p.add(x.a, x.b) != 0);
}

} // namespace fewlee
