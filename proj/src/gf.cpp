#include "fewlee/gf.hpp"

#include <limits>

namespace fewlee {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(std::uint64_t p) {
    if (p > std::numeric_limits<Residue>::max())
        throw ParameterError("modulus " + std::to_string(p) + " too large: p^2 must fit in 64 bits");
    if (!is_prime(p))
        throw ParameterError(std::to_string(p) + " is not prime");
    p_ = static_cast<Residue>(p);
}

Residue Prime::inverse(Residue a) const {
    if (a % p_ == 0) throw ParameterError("zero has no inverse mod " + std::to_string(p_));
    // a^(p-2) by square and multiply
    Residue result = 1, base = a % p_;
    for (std::uint64_t e = p_ - 2; e > 0; e >>= 1) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

std::uint64_t Prime::pow(unsigned e) const {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / p_)
            throw ParameterError(std::to_string(p_) + "^" + std::to_string(e) + " overflows 64 bits");
        r *= p_;
    }
    return r;
}

FpVector::FpVector(Prime p, std::vector<Residue> entries) : p_(p), e_(std::move(entries)) {
    if (e_.empty()) throw DimensionError("vector length must be at least 1");
    for (Residue x : e_)
        if (x >= p_.value())
            throw ParameterError("entry " + std::to_string(x) + " is not a residue mod " + std::to_string(p_.value()));
}

FpVector FpVector::zero(Prime p, std::size_t m) { return FpVector(p, std::vector<Residue>(m, 0)); }

FpVector FpVector::unit(Prime p, std::size_t m, std::size_t i) {
    std::vector<Residue> e(m, 0);
    e.at(i) = 1;
    return FpVector(p, std::move(e));
}

FpVector FpVector::from_lex_index(Prime p, std::size_t m, std::uint64_t index) {
    std::vector<Residue> e(m, 0);
    for (std::size_t i = m; i-- > 0;) {
        e[i] = static_cast<Residue>(index % p.value());
        index /= p.value();
    }
    return FpVector(p, std::move(e));
}

bool FpVector::is_zero() const noexcept {
    for (Residue x : e_)
        if (x != 0) return false;
    return true;
}

std::uint64_t FpVector::lex_index() const {
    std::uint64_t idx = 0;
    for (Residue x : e_) idx = idx * p_.value() + x;
    return idx;
}

void FpVector::check_compatible(const FpVector& o) const {
    if (!(p_ == o.p_) || e_.size() != o.e_.size())
        throw DimensionError("vector mismatch: (p=" + std::to_string(p_.value()) + ", m=" + std::to_string(e_.size()) +
                             ") vs (p=" + std::to_string(o.p_.value()) + ", m=" + std::to_string(o.e_.size()) + ")");
}

FpVector& FpVector::operator+=(const FpVector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = p_.add(e_[i], o.e_[i]);
    return *this;
}

FpVector& FpVector::operator-=(const FpVector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = p_.sub(e_[i], o.e_[i]);
    return *this;
}

FpVector FpVector::operator-() const {
    FpVector r = *this;
    for (Residue& x : r.e_) x = p_.neg(x);
    return r;
}

FpVector FpVector::scaled(Residue lambda) const {
    FpVector r = *this;
    lambda %= p_.value();
    for (Residue& x : r.e_) x = p_.mul(x, lambda);
    return r;
}

std::string FpVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e_[i]);
    }
    return s + ')';
}

std::size_t hamming_weight(const FpVector& v) noexcept {
    std::size_t w = 0;
    for (Residue x : v.entries()) w += (x != 0);
    return w;
}

std::size_t hamming_distance(const FpVector& v, const FpVector& w) { return hamming_weight(v - w); }

Residue dot(const FpVector& v, const FpVector& w) {
    if (!(v.prime() == w.prime()) || v.size() != w.size())
        throw DimensionError("dot: operands differ in length or modulus");
    return dot_raw(v.prime(), v.entries(), w.entries());
}

bool next_lex(std::span<Residue> digits, Residue p) noexcept {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < p) return true;
        digits[i] = 0;
    }
    return false;
}

void for_each_vector(Prime p, std::size_t m, const std::function<void(std::span<const Residue>)>& fn) {
    std::vector<Residue> digits(m, 0);
    do {
        fn(digits);
    } while (next_lex(digits, p.value()));
}

} // namespace fewlee
