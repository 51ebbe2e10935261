#include "prmhull/hull_herm.hpp"

#include <algorithm>
#include <stdexcept>

#include "prmhull/hull_euclid.hpp"
#include "prmhull/prm_codes.hpp"

namespace prmhull {

namespace {

using i64 = std::int64_t;

Monomial mono(i64 a0, i64 a1, i64 a2) {
    return {static_cast<std::uint32_t>(a0), static_cast<std::uint32_t>(a1), static_cast<std::uint32_t>(a2)};
}

std::uint64_t square(std::uint32_t q) { return static_cast<std::uint64_t>(q) * q; }

void check_q(std::uint32_t q) {
    if (q < 2 || q > 256) throw std::invalid_argument("base q must lie in [2, 256]");
}

// 1 <= d <= q^2 - 1 (inclusive upper end allowed for the sets).
void check_set_range(std::uint32_t q, std::uint32_t d) {
    check_q(q);
    if (d < 1 || d > square(q) - 1)
        throw std::invalid_argument("degree " + std::to_string(d) + " outside [1, " + std::to_string(square(q) - 1) + "]");
}

void check_hull_range(std::uint32_t q, std::uint32_t d) {
    check_q(q);
    if (d < 1 || d >= square(q) - 1)
        throw std::invalid_argument("degree " + std::to_string(d) + " outside [1, " + std::to_string(square(q) - 2) + "]");
}

i64 ov(i64 z, std::uint32_t q) { return static_cast<i64>(overline(static_cast<std::uint64_t>(z), square(q))); }

i64 dual_degree(std::uint32_t q, std::uint32_t d) { return 2 * (static_cast<i64>(square(q)) - 1) - d; }

bool congruent(std::uint32_t q, std::uint32_t d) { return q == 2 || d % (q - 1) == 0; }

// Indices a2 admitted by the defining conditions of W.
std::vector<std::uint32_t> w_indices(std::uint32_t q, std::uint32_t d) {
    const i64 Q1 = static_cast<i64>(square(q)) - 1, dp = dual_degree(q, d);
    std::vector<std::uint32_t> out;
    for (i64 a2 = 0; a2 <= d; ++a2) {
        const i64 gap = dp - ov(q * a2, q);
        const i64 e1 = ov(q * dp - a2, q);
        if (Q1 >= gap && gap > ov(q * (d - a2), q) && d - a2 > e1) out.push_back(static_cast<std::uint32_t>(a2));
    }
    return out;
}

USize u_formula(std::uint32_t q, i64 bound, i64 dperp) {
    const i64 qq = q;
    const i64 b0 = bound % qq, b1 = bound / qq;
    const i64 rest = dperp - qq * qq;
    const i64 l0 = rest % qq, l1 = rest / qq;
    USize u{};
    u.rm_dim = static_cast<i64>(rm_params(static_cast<std::uint32_t>(square(q)), 2, static_cast<std::uint32_t>(bound)).k);
    const i64 cl = binomial(qq - l1 - 1, qq - l1 - 3);
    const i64 cb = binomial(b1, b1 - 2);
    u.B1 = cl * cb;
    u.B2 = std::max<i64>(b1 * (cl - binomial(qq - b0 - 1, qq - b0 - 3)), 0);
    u.B3 = std::max<i64>((qq - 1 - l1) * (cb - binomial(l0 + 1, l0 - 1)), 0);
    u.B4 = b1 * (qq - 1 - l1) * binomial(b0 - l1, b0 - l1) * binomial(b1 - l0 - 1, b1 - l0 - 1);
    u.total = u.rm_dim - u.B1 - u.B2 - u.B3 - u.B4;
    return u;
}

LinearCode span_affine(const Field& field, const std::vector<Monomial>& monomials) {
    const auto pts = affine_points(field, 2);
    std::vector<Symbol> rows;
    for (const auto& m : monomials) {
        const auto v = evaluate(m, pts);
        rows.insert(rows.end(), v.begin(), v.end());
    }
    return LinearCode::from_matrix(field, pts.size(), std::move(rows));
}

}  // namespace

QadicPair qadic(std::uint32_t d, std::uint32_t q) {
    if (d >= square(q)) throw std::invalid_argument("q-adic pair needs d < q^2");
    return {d % q, d / q};
}

std::vector<Monomial> affine_hull_monomials(std::uint32_t q, std::uint32_t d1, std::uint32_t d2) {
    check_q(q);
    const i64 Q1 = static_cast<i64>(square(q)) - 1;
    if (d1 > 2 * Q1 || d2 > 2 * Q1) throw std::invalid_argument("affine degrees must lie in [0, 2(q^2-1)]");
    const i64 bound = 2 * Q1 - d2 - 1;
    std::vector<Monomial> out;
    for (i64 a1 = 0; a1 <= std::min<i64>(d1, Q1); ++a1)
        for (i64 a2 = 0; a2 <= std::min<i64>(d1 - a1, Q1); ++a2)
            if (ov(q * a1, q) + ov(q * a2, q) <= bound)
                out.push_back({static_cast<std::uint32_t>(a1), static_cast<std::uint32_t>(a2)});
    return out;
}

std::vector<Monomial> set_U(std::uint32_t q, std::uint32_t d) {
    check_set_range(q, d);
    const i64 bound = dual_degree(q, d) - 1;
    std::vector<Monomial> out;
    for (const auto& m : basis_Ad(static_cast<std::uint32_t>(square(q)), d).A1)
        if (ov(q * static_cast<i64>(m[1]), q) + ov(q * static_cast<i64>(m[2]), q) <= bound) out.push_back(m);
    return out;
}

std::vector<std::uint32_t> set_T(std::uint32_t q, std::uint32_t d) {
    check_set_range(q, d);
    const i64 Q1 = static_cast<i64>(square(q)) - 1, dp = dual_degree(q, d);
    std::vector<std::uint32_t> out;
    for (i64 a2 = 0; a2 < d; ++a2)
        if (dp > ov(q * a2, q) + Q1) out.push_back(static_cast<std::uint32_t>(a2));
    return out;
}

std::vector<Monomial> set_V(std::uint32_t q, std::uint32_t d) {
    std::vector<Monomial> out;
    for (auto a2 : set_T(q, d)) out.push_back(mono(0, d - a2, a2));
    return out;
}

std::vector<SparsePolynomial> set_W(std::uint32_t q, std::uint32_t d, bool literal) {
    check_set_range(q, d);
    std::vector<SparsePolynomial> out;
    if (!literal && d <= 2 * (q - 1)) return out;
    const Field F = field_of_order(static_cast<std::uint32_t>(square(q)));
    const i64 dp = dual_degree(q, d);
    for (auto a2 : w_indices(q, d)) {
        const i64 e1 = ov(q * dp - a2, q);
        SparsePolynomial w(F, 3);
        w.add_term(mono(0, d - a2, a2), 1);
        w.add_term(mono(d - e1 - a2, e1, a2), 1);
        out.push_back(std::move(w));
    }
    return out;
}

std::uint64_t t_size(std::uint32_t q, std::uint32_t d) {
    check_set_range(q, d);
    const auto [b0, b1] = qadic(d, q);
    return static_cast<std::uint64_t>(b1) * (q - 1 - b1) + std::min(b0, q - 1 - b1) + std::min(b1, q - 1 - b0);
}

std::uint64_t t_size_by_branch(std::uint32_t q, std::uint32_t d) {
    check_set_range(q, d);
    const auto [b0, b1] = qadic(d, q);
    const i64 base = static_cast<i64>(d) - static_cast<i64>(b1) * b1;
    if (b0 + b1 <= q - 1) return static_cast<std::uint64_t>(base);
    return static_cast<std::uint64_t>(base - 2 * (static_cast<i64>(b0) + b1 - (q - 1)));
}

USize u_size(std::uint32_t q, std::uint32_t d) {
    check_hull_range(q, d);
    return u_formula(q, d - 1, dual_degree(q, d));
}

USize affine_u_size(std::uint32_t q, std::uint32_t d) {
    check_q(q);
    if (d >= square(q) - 1) throw std::invalid_argument("affine degree must lie in [0, q^2-2]");
    return u_formula(q, d, dual_degree(q, d));
}

std::string exactness_name(Exactness e) { return e == Exactness::exact ? "exact" : "lower_bound"; }

std::string herm_mode_name(HermMode m) {
    switch (m) {
        case HermMode::exact_basis_congruent: return "exact_basis_congruent";
        case HermMode::exact_basis_small: return "exact_basis_small";
        case HermMode::lower_bound_set: return "lower_bound_set";
    }
    return "unknown";
}

HermDim hermitian_hull_dim(std::uint32_t q, std::uint32_t d) {
    check_hull_range(q, d);
    const auto Q = static_cast<std::uint32_t>(square(q));
    const bool small = d <= 2 * (q - 1);
    if (congruent(q, d)) {
        if (small) return {prm_params(Q, 2, d).k, Exactness::exact};
        return {static_cast<std::uint64_t>(u_size(q, d).total) + d + 1, Exactness::exact};
    }
    if (small) {
        const auto b1 = qadic(d, q).high;
        return {rm_params(Q, 2, d - 1).k + d - static_cast<std::uint64_t>(b1) * b1, Exactness::exact};
    }
    const auto bound = static_cast<std::uint64_t>(u_size(q, d).total) + t_size(q, d) + set_W(q, d).size();
    return {bound, Exactness::lower_bound};
}

std::vector<SparsePolynomial> HermHullBasis::elements() const {
    const Field F = field_of_order(static_cast<std::uint32_t>(square(q)));
    std::vector<SparsePolynomial> out;
    for (const auto& m : U) out.push_back(SparsePolynomial::from_monomial(F, m));
    for (const auto& m : A23) out.push_back(SparsePolynomial::from_monomial(F, m));
    for (const auto& m : V) out.push_back(SparsePolynomial::from_monomial(F, m));
    out.insert(out.end(), W.begin(), W.end());
    return out;
}

HermHullBasis hermitian_hull_basis(std::uint32_t q, std::uint32_t d) {
    check_hull_range(q, d);
    HermHullBasis b;
    b.q = q;
    b.d = d;
    b.U = set_U(q, d);
    if (congruent(q, d)) {
        b.mode = HermMode::exact_basis_congruent;
        const auto A = basis_Ad(static_cast<std::uint32_t>(square(q)), d);
        b.A23 = A.A2;
        b.A23.insert(b.A23.end(), A.A3.begin(), A.A3.end());
        return b;
    }
    b.V = set_V(q, d);
    if (d <= 2 * (q - 1)) {
        b.mode = HermMode::exact_basis_small;
    } else {
        b.mode = HermMode::lower_bound_set;
        b.W = set_W(q, d);
    }
    return b;
}

bool HermHullReport::ok() const {
    if (!independent || !contained) return false;
    if (closed_form.exactness == Exactness::exact) return spans_or_bound_tight;
    return closed_form.value <= oracle_dim;
}

HermHullReport verify_hermitian_hull(std::uint32_t q, std::uint32_t d) {
    const Field F = field_of_order(static_cast<std::uint32_t>(square(q)));
    const auto basis = hermitian_hull_basis(q, d);
    const LinearCode code = prm_code(F, 2, d);
    const LinearCode hull = intersect(code, hermitian_dual(code, q));
    const auto elements = basis.elements();
    const LinearCode spanned = span_of(F, elements);
    bool contained = true;
    const auto pts = projective_points(F, 2);
    for (const auto& f : elements) contained = contained && hull.contains(evaluate(f, pts));

    HermHullReport r{};
    r.q = q;
    r.d = d;
    r.mode = basis.mode;
    r.closed_form = hermitian_hull_dim(q, d);
    r.oracle_dim = hull.dimension();
    r.size_U = basis.U.size();
    r.size_V = basis.V.size();
    r.size_W = basis.W.size();
    r.independent = spanned.dimension() == elements.size();
    r.contained = contained;
    r.spans_or_bound_tight = r.closed_form.value == r.oracle_dim;
    return r;
}

std::uint64_t affine_hermitian_hull_dim(std::uint32_t q, std::uint32_t d) {
    check_q(q);
    if (d >= square(q) - 1) throw std::invalid_argument("affine degree must lie in [0, q^2-2]");
    if (d < 2 * (q - 1)) return rm_params(static_cast<std::uint32_t>(square(q)), 2, d).k;
    return static_cast<std::uint64_t>(affine_u_size(q, d).total);
}

bool AffineHermReport::ok() const {
    return closed_form == oracle_dim && formula_u == enumerated_u && basis_spans &&
           self_orthogonal == (d < 2 * (q - 1));
}

AffineHermReport verify_affine_hermitian(std::uint32_t q, std::uint32_t d) {
    const Field F = field_of_order(static_cast<std::uint32_t>(square(q)));
    const LinearCode code = rm_code(F, 2, d);
    const LinearCode hdual = hermitian_dual(code, q);
    const LinearCode hull = intersect(code, hdual);
    const auto monomials = affine_hull_monomials(q, d, d);
    AffineHermReport r{};
    r.q = q;
    r.d = d;
    r.closed_form = affine_hermitian_hull_dim(q, d);
    r.formula_u = static_cast<std::uint64_t>(affine_u_size(q, d).total);
    r.enumerated_u = monomials.size();
    r.oracle_dim = hull.dimension();
    r.self_orthogonal = hdual.contains(code);
    r.basis_spans = span_affine(F, monomials) == hull;
    return r;
}

std::pair<SparsePolynomial, SparsePolynomial> v_identity(std::uint32_t q, std::uint32_t d, std::uint32_t a2) {
    const auto T = set_T(q, d);
    if (std::find(T.begin(), T.end(), a2) == T.end()) throw std::invalid_argument("v_identity needs a2 in T");
    const Field F = field_of_order(static_cast<std::uint32_t>(square(q)));
    const i64 Q1 = static_cast<i64>(square(q)) - 1, dp = dual_degree(q, d);
    const i64 g1 = ov(q * (static_cast<i64>(d) - a2), q), g2 = ov(q * static_cast<i64>(a2), q);
    const i64 dp_bar = ov(dp, q);
    SparsePolynomial inner(F, 3);
    inner.add_term(mono(0, dp - g2, g2), 1);
    inner.add_term(mono(Q1, dp_bar - g2, g2), F->neg(1));
    inner.add_term(mono(dp - g1 - g2, g1, g2), 1);
    return {SparsePolynomial::from_monomial(F, mono(0, d - a2, a2)), inner.power_of_char(q)};
}

std::pair<SparsePolynomial, SparsePolynomial> w_identity(std::uint32_t q, std::uint32_t d, std::uint32_t a2) {
    const auto idx = w_indices(q, d);
    if (std::find(idx.begin(), idx.end(), a2) == idx.end()) throw std::invalid_argument("w_identity needs a qualifying a2");
    const Field F = field_of_order(static_cast<std::uint32_t>(square(q)));
    const i64 dp = dual_degree(q, d);
    const i64 e1 = ov(q * dp - a2, q);
    const i64 g1 = ov(q * (static_cast<i64>(d) - a2), q), g2 = ov(q * static_cast<i64>(a2), q);
    SparsePolynomial lhs(F, 3);
    lhs.add_term(mono(0, d - a2, a2), 1);
    lhs.add_term(mono(d - e1 - a2, e1, a2), 1);
    SparsePolynomial inner(F, 3);
    inner.add_term(mono(0, dp - g2, g2), 1);
    inner.add_term(mono(dp - g1 - g2, g1, g2), 1);
    return {lhs, inner.power_of_char(q)};
}

}  // namespace prmhull
