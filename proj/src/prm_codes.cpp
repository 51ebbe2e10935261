#include "prmhull/prm_codes.hpp"

#include <stdexcept>
#include <string>

#include "prmhull/quotient_poly.hpp"

namespace prmhull {

std::int64_t binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

std::string family_name(Family f) { return f == Family::prm ? "prm" : "rm"; }

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

void check_q(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    std::uint32_t p = 2;
    while (q % p) ++p;
    std::uint32_t r = q;
    while (r % p == 0) r /= p;
    if (r != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

void check_prm_range(std::uint32_t q, unsigned m, std::uint32_t d) {
    check_q(q);
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (d < 1 || d > m * (q - 1))
        throw std::invalid_argument("PRM degree " + std::to_string(d) + " outside [1, " + std::to_string(m * (q - 1)) + "]");
}

void check_rm_range(std::uint32_t q, unsigned m, std::uint32_t d) {
    check_q(q);
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (d > m * (q - 1))
        throw std::invalid_argument("RM degree " + std::to_string(d) + " outside [0, " + std::to_string(m * (q - 1)) + "]");
}

// (q - s) q^(m - r - 1) with e = r(q-1) + s.
std::uint64_t footprint_weight(std::uint32_t q, unsigned m, std::uint32_t e) {
    const std::uint32_t r = e / (q - 1), s = e % (q - 1);
    if (r + 1 > m) return (q - s) / q;  // r = m forces s = 0: weight 1
    return (q - s) * ipow(q, m - r - 1);
}

LinearCode evaluation_code(const Field& field, const PointSet& pts, const std::vector<Monomial>& monomials) {
    std::vector<Symbol> rows;
    rows.reserve(monomials.size() * pts.size());
    for (const auto& mono : monomials) {
        const auto v = evaluate(mono, pts);
        rows.insert(rows.end(), v.begin(), v.end());
    }
    return LinearCode::from_matrix(field, pts.size(), std::move(rows));
}

}  // namespace

LinearCode all_ones_code(const Field& field, std::size_t n) {
    return LinearCode::from_matrix(field, n, std::vector<Symbol>(n, 1));
}

LinearCode prm_code(const Field& field, unsigned m, std::uint32_t d) {
    const auto pts = projective_points(field, m);
    if (d == 0) return all_ones_code(field, pts.size());
    check_prm_range(field->size(), m, d);
    return evaluation_code(field, pts, homogeneous_monomials(m + 1, d));
}

LinearCode rm_code(const Field& field, unsigned m, std::uint32_t d) {
    const std::uint32_t q = field->size();
    check_rm_range(q, m, d);
    std::vector<Monomial> monomials;
    for (std::uint32_t t = 0; t <= d; ++t)
        for (auto& mono : homogeneous_monomials(m, t)) {
            bool ok = true;
            for (auto a : mono.exponents) ok = ok && a <= q - 1;
            if (ok) monomials.push_back(std::move(mono));
        }
    return evaluation_code(field, affine_points(field, m), monomials);
}

CodeParams prm_params(std::uint32_t q, unsigned m, std::uint32_t d) {
    check_prm_range(q, m, d);
    std::int64_t k = 0;
    for (std::int64_t t = d; t > 0; t -= q - 1) {
        for (std::int64_t j = 0; j <= m + 1; ++j) {
            const std::int64_t term = binomial(m + 1, j) * binomial(t - j * q + m, t - j * q);
            k += j % 2 ? -term : term;
        }
    }
    const std::uint64_t n = (ipow(q, m + 1) - 1) / (q - 1);
    return {Family::prm, q, m, d, n, static_cast<std::uint64_t>(k), footprint_weight(q, m, d - 1)};
}

CodeParams rm_params(std::uint32_t q, unsigned m, std::uint32_t d) {
    check_rm_range(q, m, d);
    std::int64_t k = 0;
    for (std::int64_t t = 0; t <= d; ++t) {
        for (std::int64_t j = 0; j <= m; ++j) {
            const std::int64_t term = binomial(m, j) * binomial(t - j * q + m - 1, t - j * q);
            k += j % 2 ? -term : term;
        }
    }
    return {Family::rm, q, m, d, ipow(q, m), static_cast<std::uint64_t>(k), footprint_weight(q, m, d)};
}

PrmDual prm_dual_description(std::uint32_t q, unsigned m, std::uint32_t d) {
    check_prm_range(q, m, d);
    const std::uint32_t top = m * (q - 1);
    return {top - d, d % (q - 1) == 0 && d < top};
}

LinearCode prm_dual_code(const Field& field, unsigned m, std::uint32_t d) {
    const auto desc = prm_dual_description(field->size(), m, d);
    LinearCode c = prm_code(field, m, desc.dual_degree);
    if (desc.extra_all_ones) c = sum(c, all_ones_code(field, c.length()));
    return c;
}

std::uint32_t rm_dual_degree(std::uint32_t q, unsigned m, std::uint32_t d) {
    check_rm_range(q, m, d);
    if (d == m * (q - 1)) throw std::invalid_argument("RM_d with d = m(q-1) is the full space; its dual is zero");
    return m * (q - 1) - d - 1;
}

}  // namespace prmhull
