#include "prmhull/linear_code.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "prmhull/kernels.hpp"

namespace prmhull {

LinearCode::LinearCode(Field field, std::size_t n) : field_(std::move(field)), n_(n) {
    if (!field_) throw std::invalid_argument("code without a field");
}

std::vector<std::size_t> rref_in_place(const FieldContext& f, std::vector<Symbol>& rows, std::size_t n) {
    if (n == 0) {
        rows.clear();
        return {};
    }
    if (rows.size() % n != 0) throw std::invalid_argument("matrix size is not a multiple of the row length");
    const std::size_t m = rows.size() / n;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    auto row = [&](std::size_t i) { return std::span<Symbol>(rows.data() + i * n, n); };
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && rows[piv * n + col] == 0) ++piv;
        if (piv == m) continue;
        if (piv != rank) std::swap_ranges(row(piv).begin(), row(piv).end(), row(rank).begin());
        const Symbol lead = rows[rank * n + col];
        if (lead != 1) kernels::scale(f, row(rank).subspan(col), f.inv(lead));
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank) continue;
            const Symbol factor = rows[i * n + col];
            if (factor == 0) continue;
            kernels::axpy(f, row(i).subspan(col), row(rank).subspan(col), f.neg(factor));
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank * n);
    return pivots;
}

LinearCode LinearCode::from_matrix(Field field, std::size_t n, std::vector<Symbol> rows) {
    LinearCode c(std::move(field), n);
    for (Symbol s : rows)
        if (s >= c.field_->size()) throw std::out_of_range("matrix entry out of range for " + c.field_->name());
    c.pivots_ = rref_in_place(*c.field_, rows, n);
    c.rows_ = std::move(rows);
    return c;
}

LinearCode code_from_rows(Field field, std::size_t n, const std::vector<std::vector<Symbol>>& rows) {
    std::vector<Symbol> flat;
    flat.reserve(rows.size() * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("ragged generator rows");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return LinearCode::from_matrix(std::move(field), n, std::move(flat));
}

bool LinearCode::contains(std::span<const Symbol> v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length does not match code length");
    std::vector<Symbol> w(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Symbol c = w[pivots_[i]];
        if (c != 0) kernels::axpy(*field_, w, row(i), field_->neg(c));
    }
    return kernels::count_nonzero(w) == 0;
}

namespace {

void check_same_space(const LinearCode& a, const LinearCode& b) {
    if (a.length() != b.length()) throw std::invalid_argument("codes have different lengths");
    if (a.field()->characteristic() != b.field()->characteristic() || a.field()->degree() != b.field()->degree())
        throw std::invalid_argument("codes over different fields");
}

}  // namespace

bool LinearCode::contains(const LinearCode& sub) const {
    check_same_space(*this, sub);
    for (std::size_t i = 0; i < sub.dimension(); ++i)
        if (!contains(sub.row(i))) return false;
    return true;
}

bool LinearCode::operator==(const LinearCode& o) const {
    return n_ == o.n_ && field_->size() == o.field_->size() && pivots_ == o.pivots_ && rows_ == o.rows_;
}

LinearCode dual(const LinearCode& c) {
    const std::size_t n = c.length(), k = c.dimension();
    const FieldContext& f = *c.field();
    std::vector<bool> is_pivot(n, false);
    for (auto p : c.pivots()) is_pivot[p] = true;
    std::vector<Symbol> rows;
    rows.reserve((n - k) * n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        const std::size_t base = rows.size();
        rows.resize(base + n, 0);
        rows[base + free] = 1;
        for (std::size_t i = 0; i < k; ++i) rows[base + c.pivots()[i]] = f.neg(c.row(i)[free]);
    }
    return LinearCode::from_matrix(c.field(), n, std::move(rows));
}

LinearCode sum(const LinearCode& a, const LinearCode& b) {
    check_same_space(a, b);
    std::vector<Symbol> rows = a.matrix();
    rows.insert(rows.end(), b.matrix().begin(), b.matrix().end());
    return LinearCode::from_matrix(a.field(), a.length(), std::move(rows));
}

LinearCode intersect(const LinearCode& a, const LinearCode& b) {
    check_same_space(a, b);
    return dual(sum(dual(a), dual(b)));
}

LinearCode hermitian_dual(const LinearCode& c, std::uint32_t q) {
    const FieldContext& f = *c.field();
    if (static_cast<std::uint64_t>(q) * q != f.size())
        throw std::invalid_argument("hermitian_dual: " + f.name() + " is not GF(" + std::to_string(q) + "^2)");
    std::vector<Symbol> rows = dual(c).matrix();
    for (auto& s : rows) s = f.frobenius(s, q);
    return LinearCode::from_matrix(c.field(), c.length(), std::move(rows));
}

std::uint64_t codeword_count(const LinearCode& c) {
    std::uint64_t r = 1;
    const std::uint64_t q = c.field()->size();
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        r *= q;
    }
    return r;
}

unsigned worker_threads() {
    unsigned n = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("PRMHULL_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) n = static_cast<unsigned>(v);
    }
    return std::max(1u, n);
}

namespace {

// Enumerates every GF(p)-combination of `basis` (rows of length n) with a
// p-ary modular Gray code, so consecutive codewords differ by one basis row.
// Only codewords with a nonzero digit at index >= first_counted are scored.
class GrayEnumerator {
public:
    GrayEnumerator(const FieldContext& f, std::vector<std::vector<Symbol>> basis, std::size_t n, std::size_t first_counted)
        : f_(f), basis_(std::move(basis)), n_(n), first_counted_(first_counted) {}

    std::optional<std::size_t> run() const {
        const std::uint32_t p = f_.characteristic();
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < basis_.size(); ++i) total *= p;
        const unsigned threads = total < (1u << 16) ? 1u : worker_threads();
        if (threads == 1) return scan(0, total);

        std::vector<std::optional<std::size_t>> results(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
            pool.emplace_back([this, &results, t, lo, hi] { results[t] = scan(lo, hi); });
        }
        for (auto& th : pool) th.join();
        std::optional<std::size_t> best;
        for (const auto& r : results)
            if (r && (!best || *r < *best)) best = r;
        return best;
    }

private:
    std::optional<std::size_t> scan(std::uint64_t lo, std::uint64_t hi) const {
        if (lo >= hi) return std::nullopt;
        const std::uint32_t p = f_.characteristic();
        const std::size_t len = basis_.size();
        // counter = base-p digits of t; gray digit j = counter_j - counter_{j+1} mod p.
        std::vector<std::uint32_t> counter(len + 1, 0);
        std::uint64_t t = lo;
        for (std::size_t j = 0; j < len; ++j, t /= p) counter[j] = static_cast<std::uint32_t>(t % p);
        std::vector<std::uint32_t> gray(len);
        std::vector<Symbol> word(n_, 0);
        std::size_t counted_nonzero = 0;
        for (std::size_t j = 0; j < len; ++j) {
            gray[j] = (counter[j] + p - counter[j + 1]) % p;
            if (gray[j] != 0 && j >= first_counted_) ++counted_nonzero;
            if (gray[j] != 0) kernels::axpy(f_, word, basis_[j], static_cast<Symbol>(gray[j]));
        }

        std::optional<std::size_t> best;
        for (std::uint64_t step = lo;;) {
            if (counted_nonzero > 0) {
                const std::size_t w = kernels::count_nonzero(word);
                if (!best || w < *best) best = w;
            }
            if (++step >= hi) break;
            std::size_t j = 0;
            while (counter[j] == p - 1) counter[j++] = 0;
            ++counter[j];
            const bool was_zero = gray[j] == 0;
            gray[j] = gray[j] + 1 == p ? 0 : gray[j] + 1;
            if (j >= first_counted_) {
                if (was_zero) ++counted_nonzero;
                else if (gray[j] == 0) --counted_nonzero;
            }
            kernels::add(f_, word, basis_[j]);
        }
        return best;
    }

    const FieldContext& f_;
    std::vector<std::vector<Symbol>> basis_;
    std::size_t n_;
    std::size_t first_counted_;
};

void check_budget(const LinearCode& c, std::uint64_t cap) {
    const std::uint64_t count = codeword_count(c);
    if (count > cap)
        throw InfeasibleError("infeasible: enumerating " + std::to_string(c.field()->size()) + "^" +
                              std::to_string(c.dimension()) + " codewords exceeds the cap of " + std::to_string(cap));
}

// GF(p)-basis {x^b * g : b < e} for each generator g, where x has encoding p.
void append_prime_basis(const FieldContext& f, std::vector<std::vector<Symbol>>& out, std::span<const Symbol> g) {
    Symbol scalar = 1;
    for (std::uint32_t b = 0; b < f.degree(); ++b) {
        std::vector<Symbol> v(g.begin(), g.end());
        kernels::scale(f, v, scalar);
        out.push_back(std::move(v));
        scalar = static_cast<Symbol>(scalar * f.characteristic());
    }
}

std::uint64_t choose(std::uint64_t n, std::uint64_t r) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / (n - r + i)) return std::numeric_limits<std::uint64_t>::max();
        out = out * (n - r + i) / i;
    }
    return out;
}

// Smallest w such that some w-set of coordinates carries a codeword of c outside sub.
std::optional<std::size_t> support_search(const LinearCode& c, const LinearCode* sub, std::uint64_t budget) {
    const std::size_t n = c.length(), k = c.dimension();
    const FieldContext& f = *c.field();
    std::uint64_t examined = 0;
    std::vector<bool> in_support(n);
    std::vector<Symbol> cols, word(n);
    for (std::size_t w = 1; w <= n; ++w) {
        const std::uint64_t subsets = choose(n, w);
        if (subsets > budget || examined > budget - subsets)
            throw InfeasibleError("infeasible: support search needs more than " + std::to_string(budget) +
                                  " coordinate subsets at weight " + std::to_string(w));
        examined += subsets;
        std::vector<std::size_t> T(w);
        for (std::size_t i = 0; i < w; ++i) T[i] = i;
        for (;;) {
            std::fill(in_support.begin(), in_support.end(), false);
            for (auto t : T) in_support[t] = true;
            // u G vanishes off T  <=>  u is orthogonal to every column of G outside T.
            cols.clear();
            for (std::size_t j = 0; j < n; ++j) {
                if (in_support[j]) continue;
                for (std::size_t i = 0; i < k; ++i) cols.push_back(c.row(i)[j]);
            }
            const LinearCode kernel = dual(LinearCode::from_matrix(c.field(), k, cols));
            for (std::size_t r = 0; r < kernel.dimension(); ++r) {
                std::fill(word.begin(), word.end(), 0);
                for (std::size_t i = 0; i < k; ++i)
                    if (kernel.row(r)[i] != 0) kernels::axpy(f, word, c.row(i), kernel.row(r)[i]);
                if (!sub || !sub->contains(word)) return w;
            }
            std::size_t i = w;
            while (i > 0 && T[i - 1] == n - w + i - 1) --i;
            if (i == 0) break;
            ++T[i - 1];
            for (std::size_t j = i; j < w; ++j) T[j] = T[j - 1] + 1;
        }
    }
    return std::nullopt;
}

// Subset budget matching the cost of `cap` enumeration steps.
std::uint64_t support_budget(const LinearCode& c, std::uint64_t cap) {
    const std::uint64_t k = std::max<std::size_t>(1, c.dimension());
    return cap / (k * k);
}

}  // namespace

std::size_t min_weight_by_support(const LinearCode& c, std::uint64_t max_subsets) {
    if (c.dimension() == 0) throw std::invalid_argument("min_weight: zero code has no nonzero codeword");
    return *support_search(c, nullptr, max_subsets);
}

std::optional<std::size_t> min_weight_excluding_by_support(const LinearCode& c, const LinearCode& sub,
                                                           std::uint64_t max_subsets) {
    check_same_space(c, sub);
    if (!c.contains(sub)) throw std::invalid_argument("min_weight_excluding: subcode is not contained in the code");
    if (sub.dimension() == c.dimension()) return std::nullopt;
    return support_search(c, &sub, max_subsets);
}

std::size_t min_weight(const LinearCode& c, std::uint64_t cap) {
    if (c.dimension() == 0) throw std::invalid_argument("min_weight: zero code has no nonzero codeword");
    if (codeword_count(c) > cap) {
        try {
            return min_weight_by_support(c, support_budget(c, cap));
        } catch (const InfeasibleError&) {
            check_budget(c, cap);
        }
    }
    const FieldContext& f = *c.field();
    std::vector<std::vector<Symbol>> basis;
    for (std::size_t i = 0; i < c.dimension(); ++i) append_prime_basis(f, basis, c.row(i));
    return *GrayEnumerator(f, std::move(basis), c.length(), 0).run();
}

std::optional<std::size_t> min_weight_excluding(const LinearCode& c, const LinearCode& sub, std::uint64_t cap) {
    check_same_space(c, sub);
    if (!c.contains(sub)) throw std::invalid_argument("min_weight_excluding: subcode is not contained in the code");
    if (sub.dimension() == c.dimension()) return std::nullopt;
    if (codeword_count(c) > cap) {
        try {
            return min_weight_excluding_by_support(c, sub, support_budget(c, cap));
        } catch (const InfeasibleError&) {
            check_budget(c, cap);
        }
    }
    const FieldContext& f = *c.field();

    // Extend a basis of sub to one of c with rows of c outside the running span.
    std::vector<std::vector<Symbol>> basis;
    for (std::size_t i = 0; i < sub.dimension(); ++i) append_prime_basis(f, basis, sub.row(i));
    const std::size_t first_counted = basis.size();
    LinearCode span = sub;
    for (std::size_t i = 0; i < c.dimension() && span.dimension() < c.dimension(); ++i) {
        if (span.contains(c.row(i))) continue;
        append_prime_basis(f, basis, c.row(i));
        std::vector<Symbol> rows = span.matrix();
        rows.insert(rows.end(), c.row(i).begin(), c.row(i).end());
        span = LinearCode::from_matrix(c.field(), c.length(), std::move(rows));
    }
    return GrayEnumerator(f, std::move(basis), c.length(), first_counted).run();
}

}  // namespace prmhull
