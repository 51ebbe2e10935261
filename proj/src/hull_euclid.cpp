#include "prmhull/hull_euclid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "prmhull/prm_codes.hpp"

namespace prmhull {

namespace {

Monomial mono(std::uint64_t a0, std::uint64_t a1, std::uint64_t a2) {
    return {static_cast<std::uint32_t>(a0), static_cast<std::uint32_t>(a1), static_cast<std::uint32_t>(a2)};
}

void check_degrees(std::uint32_t q, std::uint32_t d1, std::uint32_t d2) {
    const std::uint32_t top = 2 * (q - 1);
    if (d1 < 1 || d2 < 1 || d1 > top || d2 > top)
        throw std::invalid_argument("degrees must lie in [1, " + std::to_string(top) + "]");
}

}  // namespace

std::vector<SparsePolynomial> EuclidHullBasis::elements(const Field& field) const {
    std::vector<SparsePolynomial> out;
    for (const auto& m : part_A1) out.push_back(SparsePolynomial::from_monomial(field, m));
    for (const auto& m : part_Y) out.push_back(SparsePolynomial::from_monomial(field, m));
    if (part_Q) out.push_back(*part_Q);
    return out;
}

QPolynomial q_polynomial(const Field& field, std::uint32_t d1, std::uint32_t d2) {
    const std::uint32_t q = field->size();
    if (!(q <= d1 && d1 < d2 && d2 <= 2 * (q - 1)) || (d2 - d1) % (q - 1) == 0)
        throw std::invalid_argument("q_polynomial needs q <= d1 < d2 <= 2(q-1) with d1, d2 not congruent mod q-1");
    const auto o1 = overline(d1, q), o2 = overline(d2, q);
    QPolynomial out{SparsePolynomial(field, 3), SparsePolynomial(field, 3)};
    out.q.add_term(mono(0, 0, d1), 1);
    out.q.add_term(mono(0, d1 - o2, o2), 1);
    out.q.add_term(mono(d1 - o2, 0, o2), 1);
    out.q.add_term(mono(d1 - o2, o2 - o1, o1), 1);
    out.companion.add_term(mono(0, 0, d2), 1);
    out.companion.add_term(mono(0, d2 - o1, o1), 1);
    out.companion.add_term(mono(d2 - o1, 0, o1), 1);
    out.companion.add_term(mono(d2 - d1, d1 - o2, o2), 1);
    return out;
}

EuclidHullBasis relative_hull_basis(const Field& field, std::uint32_t d1, std::uint32_t d2) {
    const std::uint32_t q = field->size();
    check_degrees(q, d1, d2);
    if (d1 > d2) std::swap(d1, d2);
    EuclidHullBasis b;
    b.q = q;
    b.d1 = d1;
    b.d2 = d2;
    b.dual_not_prm = d2 == q - 1;
    const auto A = basis_Ad(q, d1);
    if ((d2 - d1) % (q - 1) == 0) {
        b.congruent_case = true;
        b.part_A1 = A.all();
        return b;
    }
    b.part_A1 = A.A1;
    if (d2 >= q) {
        const std::uint32_t top = std::min(d1 - 1, d2 - q);
        for (std::uint32_t a2 = 0; a2 <= top; ++a2) {
            b.Y.push_back(a2);
            b.part_Y.push_back(mono(0, d1 - a2, a2));
        }
    }
    if (q <= d1) b.part_Q = q_polynomial(field, d1, d2).q;
    return b;
}

std::uint64_t relative_hull_dim(std::uint32_t q, std::uint32_t d1, std::uint32_t d2) {
    check_degrees(q, d1, d2);
    if (d1 > d2) std::swap(d1, d2);
    if ((d2 - d1) % (q - 1) == 0) return prm_params(q, 2, d1).k;
    const std::uint64_t k1 = rm_params(q, 2, d1 - 1).k;
    if (d2 <= q - 1) return k1;
    if (d1 <= q - 1) return k1 + std::min<std::uint64_t>(d1, d2 - (q - 1));
    return k1 + d2 - q + 2;
}

std::uint64_t hull_with_dual_dim(std::uint32_t q, std::uint32_t d1, std::uint32_t d2) {
    check_degrees(q, d1, d2);
    if (d2 == q - 1) throw std::invalid_argument("d2 = q-1: dual is not a PRM code");
    if (d2 == 2 * (q - 1)) return 0;  // the dual is <1>, which meets no PRM_{d1}
    const std::uint32_t d2_perp = 2 * (q - 1) - d2;
    return relative_hull_dim(q, d1, d2_perp);
}

std::uint64_t hull_with_dual_oracle(const Field& field, std::uint32_t d1, std::uint32_t d2) {
    check_degrees(field->size(), d1, d2);
    return intersect(prm_code(field, 2, d1), dual(prm_code(field, 2, d2))).dimension();
}

EuclidHullBasis self_hull_basis(const Field& field, std::uint32_t d) {
    const std::uint32_t q = field->size();
    if (d < 1 || d > q - 1) throw std::invalid_argument("self hull degree must lie in [1, q-1]");
    if ((2 * d) % (q - 1) == 0) {
        EuclidHullBasis b;
        b.q = q;
        b.d1 = b.d2 = d;
        b.congruent_case = true;
        b.part_A1 = basis_Ad(q, d).all();
        return b;
    }
    return relative_hull_basis(field, d, 2 * (q - 1) - d);
}

std::uint64_t self_hull_dim(std::uint32_t q, std::uint32_t d) {
    if (d < 1 || d > q - 1) throw std::invalid_argument("self hull degree must lie in [1, q-1]");
    if ((2 * d) % (q - 1) == 0) return prm_params(q, 2, d).k;
    return rm_params(q, 2, d - 1).k + std::min(d, q - d - 1);
}

LinearCode span_of(const Field& field, const std::vector<SparsePolynomial>& polys) {
    const auto pts = projective_points(field, 2);
    std::vector<Symbol> rows;
    rows.reserve(polys.size() * pts.size());
    for (const auto& f : polys) {
        const auto v = evaluate(f, pts);
        rows.insert(rows.end(), v.begin(), v.end());
    }
    return LinearCode::from_matrix(field, pts.size(), std::move(rows));
}

EuclidHullReport verify_relative_hull(const Field& field, std::uint32_t d1, std::uint32_t d2) {
    const std::uint32_t q = field->size();
    const auto basis = relative_hull_basis(field, d1, d2);
    const LinearCode oracle = intersect(prm_code(field, 2, basis.d1), prm_code(field, 2, basis.d2));
    const LinearCode spanned = span_of(field, basis.elements(field));
    return {q, basis.d1, basis.d2, relative_hull_dim(q, d1, d2), oracle.dimension(), basis.size(), spanned == oracle};
}

std::pair<SparsePolynomial, SparsePolynomial> y_identity(const Field& field, std::uint32_t d1, std::uint32_t d2,
                                                         std::uint32_t a2) {
    const std::uint32_t q = field->size();
    check_degrees(q, d1, d2);
    const auto o2 = overline(d2, q);
    if (!(d1 < d2 && a2 < d1 && a2 + q <= d2 && a2 <= o2))
        throw std::invalid_argument("y_identity needs d1 < d2 and a2 in Y");
    auto lhs = SparsePolynomial::from_monomial(field, mono(0, d1 - a2, a2));
    SparsePolynomial rhs(field, 3);
    rhs.add_term(mono(0, d2 - a2, a2), 1);
    rhs.add_term(mono(d2 - o2, o2 - a2, a2), field->neg(1));
    rhs.add_term(mono(d2 - d1, d1 - a2, a2), 1);
    return {lhs, rhs};
}

}  // namespace prmhull
