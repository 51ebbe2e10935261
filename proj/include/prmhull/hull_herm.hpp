#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "prmhull/linear_code.hpp"
#include "prmhull/quotient_poly.hpp"

// Hermitian hulls of degree-d codes on P^2 and A^2 over GF(q^2).  Every
// function takes the base q; exponent classes are taken mod q^2 - 1.
namespace prmhull {

struct QadicPair {
    std::uint32_t low;   // beta_0
    std::uint32_t high;  // beta_1
};

// d = low + high * q with both digits in [0, q-1].
QadicPair qadic(std::uint32_t d, std::uint32_t q);

// Affine monomials x1^a1 x2^a2 (two exponents) with ai <= q^2-1,
// a1 + a2 <= d1 and ov(q a1) + ov(q a2) <= 2(q^2-1) - d2 - 1.
std::vector<Monomial> affine_hull_monomials(std::uint32_t q, std::uint32_t d1, std::uint32_t d2);

// Homogenized U_{d-1,d}, in A_1^d order.
std::vector<Monomial> set_U(std::uint32_t q, std::uint32_t d);
std::vector<std::uint32_t> set_T(std::uint32_t q, std::uint32_t d);
std::vector<Monomial> set_V(std::uint32_t q, std::uint32_t d);
// Empty for d <= 2(q-1) unless `literal`, which applies the defining
// conditions at every d.
std::vector<SparsePolynomial> set_W(std::uint32_t q, std::uint32_t d, bool literal = false);

std::uint64_t t_size(std::uint32_t q, std::uint32_t d);
// The two-branch closed form of the same count.
std::uint64_t t_size_by_branch(std::uint32_t q, std::uint32_t d);

struct USize {
    std::int64_t total;
    std::int64_t rm_dim;  // dim RM of the degree bound over GF(q^2)
    std::int64_t B1, B2, B3, B4;
};

// |U| by the binomial counting formula, 1 <= d < q^2-1.
USize u_size(std::uint32_t q, std::uint32_t d);
// |U_{d,d}| by the same formula with degree bound d, 0 <= d < q^2-1.
USize affine_u_size(std::uint32_t q, std::uint32_t d);

enum class Exactness { exact, lower_bound };
std::string exactness_name(Exactness e);

struct HermDim {
    std::uint64_t value;
    Exactness exactness;
};

// Dimension of PRM_d(q^2,2) cap its Hermitian dual, 1 <= d < q^2-1.
HermDim hermitian_hull_dim(std::uint32_t q, std::uint32_t d);

enum class HermMode { exact_basis_congruent, exact_basis_small, lower_bound_set };
std::string herm_mode_name(HermMode m);

struct HermHullBasis {
    std::uint32_t q = 0, d = 0;
    HermMode mode = HermMode::exact_basis_small;
    std::vector<Monomial> U;
    std::vector<Monomial> V;
    std::vector<SparsePolynomial> W;
    std::vector<Monomial> A23;  // A_2^d and A_3^d, congruent mode only

    std::size_t size() const { return U.size() + V.size() + W.size() + A23.size(); }
    std::vector<SparsePolynomial> elements() const;
};

HermHullBasis hermitian_hull_basis(std::uint32_t q, std::uint32_t d);

struct HermHullReport {
    std::uint32_t q, d;
    HermMode mode;
    HermDim closed_form;
    std::uint64_t oracle_dim;
    std::size_t size_U, size_V, size_W;
    bool independent;           // evaluations of the basis set have full rank
    bool contained;             // every evaluation lies in the oracle hull
    bool spans_or_bound_tight;  // closed form equals the oracle
    bool ok() const;
};

HermHullReport verify_hermitian_hull(std::uint32_t q, std::uint32_t d);

// Dimension of RM_d(q^2,2) cap its Hermitian dual, 0 <= d < q^2-1.
std::uint64_t affine_hermitian_hull_dim(std::uint32_t q, std::uint32_t d);

struct AffineHermReport {
    std::uint32_t q, d;
    std::uint64_t closed_form;
    std::uint64_t formula_u;     // affine_u_size(q, d).total
    std::uint64_t enumerated_u;  // |affine_hull_monomials(q, d, d)|
    std::uint64_t oracle_dim;
    bool self_orthogonal;        // RM_d inside its Hermitian dual
    bool basis_spans;            // evaluated U_{d,d} equals the oracle hull
    bool ok() const;
};

AffineHermReport verify_affine_hermitian(std::uint32_t q, std::uint32_t d);

// Both sides of the rewriting of x1^(d-a2) x2^a2 as a q-th power, a2 in T.
std::pair<SparsePolynomial, SparsePolynomial> v_identity(std::uint32_t q, std::uint32_t d, std::uint32_t a2);
// Both sides of the q-th power rewriting of the W element indexed by a2.
std::pair<SparsePolynomial, SparsePolynomial> w_identity(std::uint32_t q, std::uint32_t d, std::uint32_t a2);

}  // namespace prmhull
