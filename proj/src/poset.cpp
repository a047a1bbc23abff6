#include "fewlee/poset.hpp"

#include <algorithm>
#include <charconv>

namespace fewlee {

namespace {

void check_pair(const FpVector& v, const FpVector& w) {
    if (!(v.prime() == w.prime()) || v.size() != w.size())
        throw DimensionError("order comparison between vectors of different shape");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Sum over nonempty subsets S of (-1)^{|S|+1} * |box(meet S)|, walking the
// subset lattice depth first with the running meet.
std::int64_t inclusion_exclusion(const std::vector<FpVector>& gens, std::size_t from, std::vector<Residue>& meet,
                                 bool odd) {
    std::int64_t total = 0;
    std::vector<Residue> saved(meet.size());
    for (std::size_t j = from; j < gens.size(); ++j) {
        saved = meet;
        std::int64_t box = 1;
        for (std::size_t i = 0; i < meet.size(); ++i) {
            meet[i] = std::min(meet[i], gens[j][i]);
            box *= std::int64_t{meet[i]} + 1;
        }
        total += odd ? box : -box;
        total += inclusion_exclusion(gens, j + 1, meet, !odd);
        meet = saved;
    }
    return total;
}

constexpr std::size_t kMaxInclusionExclusionGenerators = 24;

} // namespace

bool leq(const FpVector& v, const FpVector& w) {
    check_pair(v, w);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] > w[i]) return false;
    return true;
}

std::pair<FpVector, FpVector> join_meet(const FpVector& v, const FpVector& w) {
    check_pair(v, w);
    std::vector<Residue> hi(v.size()), lo(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        hi[i] = std::max(v[i], w[i]);
        lo[i] = std::min(v[i], w[i]);
    }
    return {FpVector(v.prime(), std::move(hi)), FpVector(v.prime(), std::move(lo))};
}

std::vector<FpVector> maximal_elements(std::vector<FpVector> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<FpVector> out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < vs.size() && !dominated; ++j)
            dominated = j != i && leq(vs[i], vs[j]);
        if (!dominated) out.push_back(vs[i]);
    }
    return out;
}

DownSet DownSet::canonicalize(Prime p, std::size_t m, std::vector<FpVector> generators) {
    if (m == 0) throw DimensionError("down set dimension must be at least 1");
    for (const auto& g : generators)
        if (!(g.prime() == p) || g.size() != m)
            throw DimensionError("generator " + g.to_string() + " does not lie in F_" + std::to_string(p.value()) +
                                 "^" + std::to_string(m));
    return DownSet(p, m, maximal_elements(std::move(generators)));
}

DownSet DownSet::parse(Prime p, std::size_t m, std::string_view text, std::size_t* dropped) {
    std::vector<FpVector> gens;
    text = trim(text);
    while (!text.empty()) {
        const auto semi = text.find(';');
        std::string_view item = trim(text.substr(0, semi));
        text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
        if (item.empty()) throw ParameterError("empty generator in down set text");
        std::vector<Residue> coords;
        while (true) {
            const auto comma = item.find(',');
            std::string_view tok = trim(item.substr(0, comma));
            std::uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParameterError("bad coordinate '" + std::string(tok) + "' in down set text");
            if (value >= p.value())
                throw ParameterError("coordinate " + std::to_string(value) + " is not a residue mod " +
                                     std::to_string(p.value()));
            coords.push_back(static_cast<Residue>(value));
            if (comma == std::string_view::npos) break;
            item = item.substr(comma + 1);
        }
        if (coords.size() != m)
            throw ParameterError("generator has " + std::to_string(coords.size()) + " coordinates, expected " +
                                 std::to_string(m));
        gens.emplace_back(p, std::move(coords));
    }
    const std::size_t given = gens.size();
    DownSet d = canonicalize(p, m, std::move(gens));
    if (dropped) *dropped = given - d.gens_.size();
    return d;
}

bool DownSet::contains(const FpVector& v) const {
    if (!(v.prime() == p_) || v.size() != m_) throw DimensionError("membership test with vector of wrong shape");
    return contains_raw(v.entries());
}

bool DownSet::contains_raw(std::span<const Residue> v) const noexcept {
    for (const auto& g : gens_) {
        bool below = true;
        for (std::size_t i = 0; i < m_ && below; ++i) below = v[i] <= g[i];
        if (below) return true;
    }
    return false;
}

std::uint64_t DownSet::size() const {
    if (gens_.size() > kMaxInclusionExclusionGenerators) {
        // 2^t subsets is out of reach; count members directly instead.
        std::uint64_t n = 0;
        for_each_vector(p_, m_, [&](std::span<const Residue> v) { n += contains_raw(v); });
        return n;
    }
    std::vector<Residue> meet(m_, p_.value() - 1);
    return static_cast<std::uint64_t>(inclusion_exclusion(gens_, 0, meet, true));
}

std::vector<FpVector> DownSet::filter(bool members, std::uint64_t budget) const {
    const std::uint64_t space = p_.pow(static_cast<unsigned>(m_));
    if (space > budget)
        throw BudgetExceeded("enumerating F_" + std::to_string(p_.value()) + "^" + std::to_string(m_) + " needs " +
                             std::to_string(space) + " steps, budget is " + std::to_string(budget));
    std::vector<FpVector> out;
    for_each_vector(p_, m_, [&](std::span<const Residue> v) {
        if (contains_raw(v) == members) out.emplace_back(p_, std::vector<Residue>(v.begin(), v.end()));
    });
    return out;
}

std::vector<FpVector> DownSet::enumerate(std::uint64_t budget) const { return filter(true, budget); }

std::vector<FpVector> DownSet::complement_enumerate(std::uint64_t budget) const { return filter(false, budget); }

std::string DownSet::to_string() const {
    std::string s;
    for (std::size_t j = 0; j < gens_.size(); ++j) {
        if (j) s += ';';
        for (std::size_t i = 0; i < m_; ++i) {
            if (i) s += ',';
            s += std::to_string(gens_[j][i]);
        }
    }
    return s;
}

DownSet random_down_set(Prime p, std::size_t m, std::mt19937_64& rng, std::size_t min_generators,
                        std::size_t max_generators) {
    if (min_generators > max_generators) throw ParameterError("min_generators exceeds max_generators");
    if (min_generators > 1 && (m < 2 || p.value() < 2))
        throw ParameterError("F_p^m has no antichain of size " + std::to_string(min_generators) + " for m = 1");
    std::uniform_int_distribution<Residue> coord(0, p.value() - 1);
    std::uniform_int_distribution<std::size_t> count(min_generators, max_generators);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<FpVector> gens;
        const std::size_t t = count(rng);
        for (std::size_t j = 0; j < t; ++j) {
            std::vector<Residue> v(m);
            for (auto& x : v) x = coord(rng);
            gens.emplace_back(p, std::move(v));
        }
        DownSet d = DownSet::canonicalize(p, m, std::move(gens));
        if (d.generators().size() >= min_generators) return d;
    }
    throw ParameterError("could not draw a down set with " + std::to_string(min_generators) + " generators");
}

} // namespace fewlee
