#include "fewlee/ring.hpp"

namespace fewlee {

RingVector::RingVector(Prime p, std::vector<RingElement> pairs) : p_(p), e_(std::move(pairs)) {
    if (e_.empty()) throw DimensionError("ring vector length must be at least 1");
    for (const auto& x : e_)
        if (x.a >= p.value() || x.b >= p.value())
            throw ParameterError("ring vector entry is not reduced mod " + std::to_string(p.value()));
}

RingVector::RingVector(const FpVector& alpha, const FpVector& beta) : p_(alpha.prime()) {
    if (!(alpha.prime() == beta.prime()) || alpha.size() != beta.size())
        throw DimensionError("alpha and beta differ in length or modulus");
    e_.reserve(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) e_.push_back({alpha[i], beta[i]});
}

RingVector RingVector::zero(Prime p, std::size_t m) { return RingVector(p, std::vector<RingElement>(m)); }

FpVector RingVector::alpha() const {
    std::vector<Residue> v;
    v.reserve(e_.size());
    for (const auto& x : e_) v.push_back(x.a);
    return FpVector(p_, std::move(v));
}

FpVector RingVector::beta() const {
    std::vector<Residue> v;
    v.reserve(e_.size());
    for (const auto& x : e_) v.push_back(x.b);
    return FpVector(p_, std::move(v));
}

bool RingVector::is_zero() const noexcept {
    for (const auto& x : e_)
        if (x.a != 0 || x.b != 0) return false;
    return true;
}

void RingVector::check_compatible(const RingVector& o) const {
    if (!(p_ == o.p_) || e_.size() != o.e_.size())
        throw DimensionError("ring vectors differ in length or modulus");
}

RingVector& RingVector::operator+=(const RingVector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = ring_add(p_, e_[i], o.e_[i]);
    return *this;
}

RingVector& RingVector::operator-=(const RingVector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = {p_.sub(e_[i].a, o.e_[i].a), p_.sub(e_[i].b, o.e_[i].b)};
    return *this;
}

RingVector RingVector::scaled(Residue lambda) const {
    RingVector r = *this;
    lambda %= p_.value();
    for (auto& x : r.e_) x = {p_.mul(x.a, lambda), p_.mul(x.b, lambda)};
    return r;
}

RingElement inner_product(const RingVector& x, const RingVector& y) {
    if (!(x.prime() == y.prime()) || x.size() != y.size())
        throw DimensionError("inner product: operands differ in length or modulus");
    const Prime p = x.prime();
    RingElement acc;
    for (std::size_t i = 0; i < x.size(); ++i) acc = ring_add(p, acc, ring_mul(p, x[i], y[i]));
    return acc;
}

FpVector gray_map(const RingVector& x) {
    const Prime p = x.prime();
    const std::size_t m = x.size();
    std::vector<Residue> img(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        img[i] = x[i].b;
        img[m + i] = p.add(x[i].a, x[i].b);
    }
    return FpVector(p, std::move(img));
}

std::size_t lee_weight(const RingVector& x) noexcept {
    std::size_t w = 0;
    for (const auto& e : x.pairs()) w += lee_weight(x.prime(), e);
    return w;
}

} // namespace fewlee
