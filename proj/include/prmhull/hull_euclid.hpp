#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "prmhull/linear_code.hpp"
#include "prmhull/quotient_poly.hpp"

namespace prmhull {

// Basis of the intersection of degree-d1 and degree-d2 forms modulo I(P^2),
// d1 <= d2.
struct EuclidHullBasis {
    std::uint32_t q = 0, d1 = 0, d2 = 0;
    bool congruent_case = false;  // d1 = d2 mod q-1: basis is all of A^{d1}
    // d2 = q-1: the intersection is defined but is not a hull of PRM codes.
    bool dual_not_prm = false;
    std::vector<Monomial> part_A1;  // A_1^{d1}, or A^{d1} in the congruent case
    std::vector<std::uint32_t> Y;
    std::vector<Monomial> part_Y;   // x1^(d1-a2) x2^a2, a2 in Y
    std::optional<SparsePolynomial> part_Q;

    std::size_t size() const { return part_A1.size() + part_Y.size() + (part_Q ? 1 : 0); }
    std::vector<SparsePolynomial> elements(const Field& field) const;
};

struct QPolynomial {
    SparsePolynomial q;          // degree d1
    SparsePolynomial companion;  // degree d2, same evaluation on P^2
};

// q <= d1 < d2 <= 2(q-1), d1 and d2 not congruent mod q-1.
QPolynomial q_polynomial(const Field& field, std::uint32_t d1, std::uint32_t d2);

// Inputs are normalized so d1 <= d2; 1 <= d1, d2 <= 2(q-1).
EuclidHullBasis relative_hull_basis(const Field& field, std::uint32_t d1, std::uint32_t d2);
std::uint64_t relative_hull_dim(std::uint32_t q, std::uint32_t d1, std::uint32_t d2);

// dim PRM_{d1} cap PRM_{d2}^perp.  Throws for d2 = q-1, where the dual is
// PRM_{q-1} + <1>; only hull_with_dual_oracle covers that case.
std::uint64_t hull_with_dual_dim(std::uint32_t q, std::uint32_t d1, std::uint32_t d2);
// Oracle for PRM_{d1} cap PRM_{d2}^perp, any 1 <= d1, d2 <= 2(q-1).
std::uint64_t hull_with_dual_oracle(const Field& field, std::uint32_t d1, std::uint32_t d2);

// PRM_d cap PRM_d^perp for 1 <= d <= q-1.
EuclidHullBasis self_hull_basis(const Field& field, std::uint32_t d);
std::uint64_t self_hull_dim(std::uint32_t q, std::uint32_t d);

struct EuclidHullReport {
    std::uint32_t q, d1, d2;
    std::uint64_t formula_dim;
    std::uint64_t oracle_dim;
    std::uint64_t basis_size;
    bool basis_spans;  // evaluated basis has the same RREF as the oracle
    bool ok() const { return formula_dim == oracle_dim && basis_size == oracle_dim && basis_spans; }
};

EuclidHullReport verify_relative_hull(const Field& field, std::uint32_t d1, std::uint32_t d2);

// x1^(d1-a2) x2^a2 and its degree-d2 rewriting; equal on P^2 for a2 in Y.
std::pair<SparsePolynomial, SparsePolynomial> y_identity(const Field& field, std::uint32_t d1, std::uint32_t d2,
                                                         std::uint32_t a2);

// Row space of the evaluations at P^2.
LinearCode span_of(const Field& field, const std::vector<SparsePolynomial>& polys);

}  // namespace prmhull
