#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace prmhull {

// Encoded field element: base-p digits of the residue polynomial, little-endian.
using Symbol = std::uint16_t;

class FieldContext;
using Field = std::shared_ptr<const FieldContext>;

// Lookup tables consumed by the vector kernels (see kernels.hpp).  Only
// populated for fields the SIMD backends understand; `mode == none` means
// every kernel call falls back to the scalar path.
struct SimdTables {
    enum class AddMode : std::uint8_t { none, xor_bits, mod_prime, two_digit };

    AddMode add = AddMode::none;
    // Byte shuffle tables for multiplication by each constant c: the product
    // c*s is mul_lo[c][s & 15] ^ mul_hi[c][s >> 4] in characteristic 2, and
    // mul_lo[c][s] for q <= 16 in odd characteristic.
    std::vector<std::array<std::uint8_t, 16>> mul_lo;
    std::vector<std::array<std::uint8_t, 16>> mul_hi;
    // two_digit: s = lo + p*hi with lo, hi < p.
    std::array<std::uint8_t, 16> digit_lo{};
    std::array<std::uint8_t, 16> digit_hi{};
    std::uint8_t p = 0;
};

// GF(p^e) with the lexicographically smallest monic irreducible modulus.
// Immutable after construction.
class FieldContext {
public:
    static Field make(std::uint32_t p, std::uint32_t e);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return e_; }
    std::uint32_t size() const { return q_; }
    // Coefficients c_0..c_e of the monic modulus (c_e == 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Symbol generator() const { return generator_; }
    bool is_prime_field() const { return e_ == 1; }

    Symbol add(Symbol a, Symbol b) const;
    Symbol sub(Symbol a, Symbol b) const { return add(a, neg(b)); }
    Symbol neg(Symbol a) const { return neg_[a]; }
    Symbol mul(Symbol a, Symbol b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Symbol inv(Symbol a) const;
    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
    Symbol pow(Symbol a, std::uint64_t k) const;
    // a^base_q; requires size() == base_q^2.
    Symbol frobenius(Symbol a, std::uint32_t base_q) const;

    std::uint32_t log(Symbol a) const { return log_[a]; }
    Symbol exp(std::uint32_t k) const { return exp_[k % (q_ - 1)]; }

    const SimdTables& simd() const { return simd_; }

    std::string name() const;

private:
    FieldContext(std::uint32_t p, std::uint32_t e);
    void build_tables();
    void build_simd_tables();
    Symbol poly_mul(Symbol a, Symbol b) const;
    Symbol digit_add(Symbol a, Symbol b) const;

    std::uint32_t p_;
    std::uint32_t e_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    Symbol generator_ = 1;
    std::vector<std::uint32_t> log_;
    std::vector<Symbol> exp_;  // length 2(q-1) so log sums need no reduction
    std::vector<Symbol> neg_;
    std::vector<Symbol> add_table_;  // q*q entries when q <= 256
    SimdTables simd_;
};

// A value bound to its field.  Arithmetic between different fields throws.
class FieldElement {
public:
    FieldElement(Field field, Symbol value);

    const Field& field() const { return field_; }
    Symbol value() const { return value_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t k) const;
    FieldElement frobenius(std::uint32_t base_q) const;

    bool operator==(const FieldElement& o) const;

private:
    const FieldContext& same_field(const FieldElement& o) const;

    Field field_;
    Symbol value_;
};

bool is_prime(std::uint64_t n);

// GF(q) for a prime power q, built once per process and shared.
Field field_of_order(std::uint32_t q);

// Monic polynomials over GF(p) as little-endian coefficient vectors.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p);

}  // namespace prmhull
