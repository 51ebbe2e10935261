#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "prmhull/finite_field.hpp"
#include "prmhull/projective_space.hpp"

namespace prmhull {

// Exponent vector (a_0, ..., a_m).
struct Monomial {
    std::vector<std::uint32_t> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}
    Monomial(std::initializer_list<std::uint32_t> e) : exponents(e) {}

    std::size_t nvars() const { return exponents.size(); }
    std::uint32_t operator[](std::size_t i) const { return exponents[i]; }
    std::uint64_t degree() const;
    // x0^a0*x1^a1*..., zero exponents omitted, "1" for the constant.  Affine
    // monomials in x1, x2 pass first_index = 1.
    std::string to_string(std::size_t first_index = 0) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order with x0 < x1 < ... < xm.
bool grlex_less(const Monomial& a, const Monomial& b);
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

class SparsePolynomial {
public:
    // Iterates from the leading term down.
    using Terms = std::map<Monomial, Symbol, GrlexGreater>;

    SparsePolynomial(Field field, std::size_t nvars);
    static SparsePolynomial from_monomial(Field field, const Monomial& m, Symbol coef = 1);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    std::uint64_t degree() const;  // max total degree; 0 for the zero polynomial

    // Accumulates coef * m, dropping the term if it cancels.
    void add_term(const Monomial& m, Symbol coef);

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial operator-() const;
    SparsePolynomial scaled(Symbol c) const;

    // f^r for r a power of the characteristic: coefficients c -> c^r,
    // exponents multiplied by r.
    SparsePolynomial power_of_char(std::uint32_t r) const;

    std::string to_string() const;

    bool operator==(const SparsePolynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

private:
    void check_compatible(const SparsePolynomial& o) const;

    Field field_;
    std::size_t nvars_;
    Terms terms_;
};

// Inverse of SparsePolynomial::to_string.  A term may carry a leading '-'.
SparsePolynomial parse_polynomial(std::string_view text, const Field& field, std::size_t nvars = 3);

// 0 for z = 0, otherwise the representative of z mod (Q - 1) in [1, Q - 1].
std::uint64_t overline(std::uint64_t z, std::uint64_t Q);

// Normal form modulo the vanishing ideal of P^2 over GF(Q), Q = field size.
// The output is supported on standard_basis_P2(Q).
SparsePolynomial reduce_mod_IP2(const SparsePolynomial& f);
SparsePolynomial reduce_mod_IP2(const SparsePolynomial& f, std::uint32_t Q);

// Evaluation at every point, in point order; 0^0 = 1.
std::vector<Symbol> evaluate(const SparsePolynomial& f, const PointSet& pts);
std::vector<Symbol> evaluate(const Monomial& m, const PointSet& pts);

struct HomogeneousBasis {
    std::vector<Monomial> A1;  // a0 > 0, a1, a2 <= Q-1
    std::vector<Monomial> A2;  // a0 = 0, a1 > 0, a2 <= Q-1
    std::vector<Monomial> A3;  // x2^d

    std::vector<Monomial> all() const;
    std::size_t size() const { return A1.size() + A2.size() + A3.size(); }
};

// Monomial basis of degree-d forms modulo I(P^2), 1 <= d <= 2(Q-1).
// A1 is listed by a0 descending then a1 descending; A2 by a1 descending.
HomogeneousBasis basis_Ad(std::uint32_t Q, std::uint32_t d);

// {x1^a1 x2^a2, x0 x2^a2, x0 x1 : 0 <= ai <= Q-1}, q^2 + q + 1 monomials.
std::vector<Monomial> standard_basis_P2(std::uint32_t Q);

// Every monomial in nvars variables of total degree d.
std::vector<Monomial> homogeneous_monomials(std::size_t nvars, std::uint32_t d);

// Generators of the ideal of polynomials vanishing on the normalized
// representatives of P^m (m + 1 variables).  Not homogeneous.
std::vector<SparsePolynomial> vanishing_ideal_generators(const Field& field, unsigned m);

}  // namespace prmhull
