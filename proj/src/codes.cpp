#include "fewlee/codes.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <thread>
#include <unordered_set>

namespace fewlee {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
    if (a != 0 && b > UINT64_MAX / a) throw BudgetExceeded(std::string(what) + " overflows 64-bit work count");
    return a * b;
}

// Incremental row echelon basis of F_p^dim, fed one vector at a time.
class EchelonBasis {
public:
    EchelonBasis(Prime p, std::size_t dim) : p_(p), dim_(dim) {}

    void insert(std::span<const Residue> v) {
        if (rank() == dim_) return;
        work_.assign(v.begin(), v.end());
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const Residue coeff = work_[pivots_[k]];
            if (coeff == 0) continue;
            for (std::size_t i = 0; i < dim_; ++i)
                work_[i] = p_.sub(work_[i], p_.mul(coeff, basis_[k][i]));
        }
        const auto it = std::find_if(work_.begin(), work_.end(), [](Residue x) { return x != 0; });
        if (it == work_.end()) return;
        const std::size_t pivot = static_cast<std::size_t>(it - work_.begin());
        const Residue inv = p_.inverse(*it);
        for (auto& x : work_) x = p_.mul(x, inv);
        // keep the basis fully reduced so pivots are unit columns
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const Residue coeff = basis_[k][pivot];
            if (coeff == 0) continue;
            for (std::size_t i = 0; i < dim_; ++i)
                basis_[k][i] = p_.sub(basis_[k][i], p_.mul(coeff, work_[i]));
        }
        basis_.push_back(work_);
        pivots_.push_back(pivot);
    }

    [[nodiscard]] std::size_t rank() const noexcept { return basis_.size(); }

private:
    Prime p_;
    std::size_t dim_;
    std::vector<std::vector<Residue>> basis_;
    std::vector<std::size_t> pivots_;
    std::vector<Residue> work_;
};

// Detects zero columns and pairs of F_p-proportional columns. Each nonzero
// column is scaled so its first nonzero entry is 1 and then hashed.
class ColumnClassifier {
public:
    ColumnClassifier(Prime p, std::size_t rows) : p_(p), rows_(rows) {
        std::uint64_t cap = 1;
        packed_ = true;
        for (std::size_t i = 0; i < rows && packed_; ++i) {
            if (cap > UINT64_MAX / p.value()) packed_ = false;
            else cap *= p.value();
        }
    }

    void add(std::span<const Residue> col) {
        if (zero_) return;
        const auto it = std::find_if(col.begin(), col.end(), [](Residue x) { return x != 0; });
        if (it == col.end()) {
            zero_ = true;
            return;
        }
        if (proportional_) return;
        const Residue inv = p_.inverse(*it);
        if (packed_) {
            std::uint64_t key = 0;
            for (Residue x : col) key = key * p_.value() + p_.mul(x, inv);
            proportional_ = !packed_keys_.insert(key).second;
        } else {
            std::string key;
            for (Residue x : col) {
                key += std::to_string(p_.mul(x, inv));
                key += ',';
            }
            proportional_ = !string_keys_.insert(std::move(key)).second;
        }
    }

    [[nodiscard]] DualDistanceClass result() const noexcept {
        if (zero_) return DualDistanceClass::One;
        if (proportional_) return DualDistanceClass::Two;
        return DualDistanceClass::AtLeastThree;
    }

private:
    Prime p_;
    std::size_t rows_;
    bool packed_ = true;
    bool zero_ = false;
    bool proportional_ = false;
    std::unordered_set<std::uint64_t> packed_keys_;
    std::unordered_set<std::string> string_keys_;
};

} // namespace

std::string_view to_string(Variant v) noexcept { return v == Variant::Complement ? "complement" : "direct"; }

Variant parse_variant(std::string_view text) {
    if (text == "complement") return Variant::Complement;
    if (text == "direct") return Variant::Direct;
    throw ParameterError("unknown variant '" + std::string(text) + "' (expected complement or direct)");
}

DefiningSet DefiningSet::from_down_set(const DownSet& delta, Variant variant, std::uint64_t budget) {
    const auto base = variant == Variant::Complement ? delta.complement_enumerate(budget) : delta.enumerate(budget);
    DefiningSet L = from_base(delta.prime(), delta.dimension(), base);
    L.delta_ = delta;
    L.variant_ = variant;
    return L;
}

DefiningSet DefiningSet::from_base(Prime p, std::size_t m, std::vector<FpVector> base) {
    if (m == 0) throw DimensionError("dimension must be at least 1");
    for (const auto& c : base)
        if (!(c.prime() == p) || c.size() != m) throw DimensionError("base element " + c.to_string() + " has wrong shape");
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    DefiningSet L(p, m);
    L.space_ = p.pow(static_cast<unsigned>(m));
    L.base_count_ = base.size();
    L.base_.reserve(base.size() * m);
    for (const auto& c : base) L.base_.insert(L.base_.end(), c.entries().begin(), c.entries().end());
    return L;
}

FpVector DefiningSet::base_element(std::size_t j) const {
    const auto s = base_raw().subspan(j * m_, m_);
    return FpVector(p_, std::vector<Residue>(s.begin(), s.end()));
}

RingVector DefiningSet::element(std::uint64_t coordinate) const {
    if (coordinate >= length()) throw DimensionError("coordinate out of range");
    const FpVector c = base_element(static_cast<std::size_t>(coordinate / space_));
    const FpVector d = FpVector::from_lex_index(p_, m_, coordinate % space_);
    return RingVector(c, d);
}

WeightDistribution::WeightDistribution(std::map<std::uint64_t, std::uint64_t> entries) {
    for (const auto& [w, f] : entries) add(w, f);
}

void WeightDistribution::add(std::uint64_t weight, std::uint64_t count) {
    if (count != 0) entries_[weight] += count;
}

void WeightDistribution::merge(const WeightDistribution& other) {
    for (const auto& [w, f] : other.entries_) add(w, f);
}

std::uint64_t WeightDistribution::total() const noexcept {
    std::uint64_t t = 0;
    for (const auto& [w, f] : entries_) t += f;
    return t;
}

std::uint64_t WeightDistribution::frequency(std::uint64_t weight) const noexcept {
    const auto it = entries_.find(weight);
    return it == entries_.end() ? 0 : it->second;
}

std::optional<std::uint64_t> WeightDistribution::min_nonzero() const noexcept {
    const auto it = entries_.upper_bound(0);
    if (it == entries_.end()) return std::nullopt;
    return it->first;
}

std::size_t WeightDistribution::nonzero_weight_count() const noexcept {
    return entries_.size() - entries_.count(0);
}

std::uint64_t WeightDistribution::first_moment() const {
    std::uint64_t s = 0;
    for (const auto& [w, f] : entries_) {
        const std::uint64_t term = checked_mul(w, f, "first moment");
        if (s > UINT64_MAX - term) throw BudgetExceeded("first moment overflows 64 bits");
        s += term;
    }
    return s;
}

std::string WeightDistribution::enumerator() const {
    std::string s;
    for (const auto& [w, f] : entries_) {
        if (!s.empty()) s += '+';
        if (w == 0) {
            s += std::to_string(f);
        } else {
            if (f != 1) s += std::to_string(f);
            s += "z^" + std::to_string(w);
        }
    }
    return s.empty() ? "0" : s;
}

std::uint64_t brute_force_cost(const DefiningSet& L) {
    const std::uint64_t messages = L.prime().pow(static_cast<unsigned>(2 * L.dimension()));
    return checked_mul(messages, L.length(), "brute-force cost");
}

RingVector codeword(const RingVector& a, const DefiningSet& L, std::uint64_t budget) {
    if (!(a.prime() == L.prime()) || a.size() != L.dimension())
        throw DimensionError("message does not lie in R^m of the defining set");
    if (L.length() > budget)
        throw BudgetExceeded("codeword length " + std::to_string(L.length()) + " exceeds budget " +
                             std::to_string(budget));
    const Prime p = L.prime();
    const std::size_t m = L.dimension();
    const FpVector alpha = a.alpha(), beta = a.beta();
    std::vector<RingElement> out;
    out.reserve(L.length());
    std::vector<Residue> d(m, 0);
    for (std::size_t j = 0; j < L.base_count(); ++j) {
        const auto c = L.base_raw().subspan(j * m, m);
        const Residue ac = dot_raw(p, alpha.entries(), c);
        const Residue bc = dot_raw(p, beta.entries(), c);
        std::fill(d.begin(), d.end(), 0);
        do {
            out.push_back({ac, p.add(dot_raw(p, alpha.entries(), d), bc)});
        } while (next_lex(d, p.value()));
    }
    return RingVector(p, std::move(out));
}

namespace {

// Lee weight of c_L(alpha + u beta); the hot loop of the oracle. Every
// coordinate (c, d) is evaluated: a = alpha.c, b = alpha.d + beta.c.
std::uint64_t lee_weight_of_message(Prime p, std::size_t m, std::span<const Residue> base, std::size_t base_count,
                                    std::span<const Residue> alpha, std::span<const Residue> beta,
                                    std::vector<Residue>& alpha_dot_d, std::vector<Residue>& scratch) {
    const Residue q = p.value();
    // alpha.d for every d in lex order
    std::fill(scratch.begin(), scratch.end(), 0);
    std::size_t idx = 0;
    do {
        alpha_dot_d[idx++] = dot_raw(p, alpha, scratch);
    } while (next_lex(scratch, q));

    std::uint64_t weight = 0;
    for (std::size_t j = 0; j < base_count; ++j) {
        const auto c = base.subspan(j * m, m);
        const Residue a = dot_raw(p, alpha, c);
        const Residue bc = dot_raw(p, beta, c);
        std::uint64_t w = 0;
        for (const Residue ad : alpha_dot_d) {
            Residue b = ad + bc;
            if (b >= q) b -= q;
            Residue s = a + b;
            if (s >= q) s -= q;
            w += (b != 0) + (s != 0);
        }
        weight += w;
    }
    return weight;
}

} // namespace

std::uint64_t codeword_lee_weight(const RingVector& a, const DefiningSet& L) {
    if (!(a.prime() == L.prime()) || a.size() != L.dimension())
        throw DimensionError("message does not lie in R^m of the defining set");
    const std::size_t m = L.dimension();
    std::vector<Residue> ad(L.space_size()), scratch(m);
    const FpVector alpha = a.alpha(), beta = a.beta();
    return lee_weight_of_message(L.prime(), m, L.base_raw(), L.base_count(), alpha.entries(), beta.entries(), ad,
                                 scratch);
}

WeightDistribution brute_force_distribution(const DefiningSet& L, std::uint64_t budget, unsigned threads) {
    const std::uint64_t cost = brute_force_cost(L);
    if (cost > budget)
        throw BudgetExceeded("brute force needs " + std::to_string(cost) + " coordinate evaluations, budget is " +
                             std::to_string(budget));
    const Prime p = L.prime();
    const std::size_t m = L.dimension();
    const std::uint64_t space = L.space_size();
    const std::uint64_t messages = space * space;

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    // small jobs are not worth a thread each
    const std::uint64_t min_per_worker = 1'000'000;
    threads = static_cast<unsigned>(std::clamp<std::uint64_t>(cost / min_per_worker, 1, threads));
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, messages));

    std::vector<WeightDistribution> partial(threads);
    auto work = [&](unsigned t) {
        const std::uint64_t lo = messages * t / threads, hi = messages * (t + 1) / threads;
        std::vector<Residue> ad(space), scratch(m);
        const FpVector first = FpVector::from_lex_index(p, 2 * m, lo);
        std::vector<Residue> msg(first.entries().begin(), first.entries().end()); // alpha then beta
        const std::span<const Residue> all(msg);
        for (std::uint64_t i = lo; i < hi; ++i) {
            partial[t].add(lee_weight_of_message(p, m, L.base_raw(), L.base_count(), all.first(m), all.last(m), ad,
                                                 scratch));
            next_lex(msg, p.value());
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    WeightDistribution result;
    for (const auto& part : partial) result.merge(part);
    return result;
}

GeneratorMatrix::GeneratorMatrix(Prime p, std::size_t rows, std::size_t cols, std::vector<Residue> data)
    : p_(p), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("generator matrix data does not match its shape");
    for (Residue x : data_)
        if (x >= p.value()) throw ParameterError("generator matrix entry is not reduced");
}

std::vector<Residue> GeneratorMatrix::column(std::size_t c) const {
    std::vector<Residue> col(rows_);
    for (std::size_t r = 0; r < rows_; ++r) col[r] = at(r, c);
    return col;
}

std::size_t GeneratorMatrix::rank() const {
    EchelonBasis basis(p_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) basis.insert(row(r));
    return basis.rank();
}

void GeneratorMatrix::write_text(std::ostream& os) const {
    os << p_.value() << ' ' << rows_ / 2 << ' ' << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << at(r, c);
        }
        os << '\n';
    }
}

GeneratorMatrix GeneratorMatrix::read_text(std::istream& is) {
    std::uint64_t p = 0, m = 0, rows = 0, cols = 0;
    if (!(is >> p >> m >> rows >> cols)) throw ParameterError("generator matrix header must be 'p m rows cols'");
    std::vector<Residue> data(rows * cols);
    for (auto& x : data)
        if (!(is >> x)) throw ParameterError("generator matrix body is truncated");
    return GeneratorMatrix(Prime(p), rows, cols, std::move(data));
}

GeneratorMatrix gray_generator_matrix(const DefiningSet& L, std::uint64_t budget) {
    const Prime p = L.prime();
    const std::size_t m = L.dimension();
    const std::uint64_t n = L.length();
    const std::uint64_t entries = checked_mul(2 * m, 2 * n, "generator matrix size");
    if (entries > budget)
        throw BudgetExceeded("generator matrix has " + std::to_string(entries) + " entries, budget is " +
                             std::to_string(budget));
    if (n == 0) return GeneratorMatrix(p, 2 * m, 0, {});
    std::vector<Residue> data;
    data.reserve(entries);
    const FpVector zero = FpVector::zero(p, m);
    for (std::size_t row = 0; row < 2 * m; ++row) {
        const FpVector e = FpVector::unit(p, m, row % m);
        const RingVector msg = row < m ? RingVector(e, zero) : RingVector(zero, e);
        const FpVector img = gray_map(codeword(msg, L, budget));
        data.insert(data.end(), img.entries().begin(), img.entries().end());
    }
    return GeneratorMatrix(p, 2 * m, 2 * n, std::move(data));
}

void for_each_gray_column(const DefiningSet& L, const std::function<void(std::span<const Residue>)>& fn) {
    // Column of coordinate c + ud: rows e_i give (a, b) = (c_i, d_i) and rows
    // u e_i give (0, c_i). The b-block column is (d; c), the (a+b)-block
    // column is (c + d; c).
    const Prime p = L.prime();
    const std::size_t m = L.dimension();
    std::vector<Residue> col(2 * m), d(m);
    for (int block = 0; block < 2; ++block) {
        for (std::size_t j = 0; j < L.base_count(); ++j) {
            const auto c = L.base_raw().subspan(j * m, m);
            std::fill(d.begin(), d.end(), 0);
            do {
                for (std::size_t i = 0; i < m; ++i) {
                    col[i] = block == 0 ? d[i] : p.add(c[i], d[i]);
                    col[m + i] = c[i];
                }
                fn(col);
            } while (next_lex(d, p.value()));
        }
    }
}

std::size_t gray_rank(const DefiningSet& L) {
    EchelonBasis basis(L.prime(), 2 * L.dimension());
    for_each_gray_column(L, [&](std::span<const Residue> col) { basis.insert(col); });
    return basis.rank();
}

std::string_view to_string(DualDistanceClass c) noexcept {
    switch (c) {
    case DualDistanceClass::One: return "1";
    case DualDistanceClass::Two: return "2";
    case DualDistanceClass::AtLeastThree: return ">=3";
    }
    return "?";
}

DualDistanceClass dual_distance_class(const GeneratorMatrix& g) {
    ColumnClassifier cls(g.prime(), g.rows());
    for (std::size_t c = 0; c < g.cols(); ++c) cls.add(g.column(c));
    return cls.result();
}

DualDistanceClass dual_distance_class(const DefiningSet& L) {
    ColumnClassifier cls(L.prime(), 2 * L.dimension());
    for_each_gray_column(L, [&](std::span<const Residue> col) { cls.add(col); });
    return cls.result();
}

} // namespace fewlee
