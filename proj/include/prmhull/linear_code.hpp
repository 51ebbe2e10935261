#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "prmhull/finite_field.hpp"

namespace prmhull {

// Raised when exhaustive enumeration would exceed the caller's budget.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultWeightCap = 20'000'000;

// Length-n code held as its reduced row-echelon generator matrix.  Two codes
// are equal iff their matrices are identical.
class LinearCode {
public:
    // The zero code.
    LinearCode(Field field, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return pivots_.size(); }
    std::span<const Symbol> row(std::size_t i) const { return {rows_.data() + i * n_, n_}; }
    const std::vector<Symbol>& matrix() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const Symbol> v) const;
    bool contains(const LinearCode& sub) const;

    bool operator==(const LinearCode& o) const;

    // Takes a row-major matrix with any number of rows and reduces it.
    static LinearCode from_matrix(Field field, std::size_t n, std::vector<Symbol> rows);

private:
    Field field_;
    std::size_t n_;
    std::vector<Symbol> rows_;
    std::vector<std::size_t> pivots_;
};

// Reduces a row-major matrix in place; returns the pivot columns.  Zero rows
// end up at the bottom and are erased.
std::vector<std::size_t> rref_in_place(const FieldContext& f, std::vector<Symbol>& rows, std::size_t n);

LinearCode code_from_rows(Field field, std::size_t n, const std::vector<std::vector<Symbol>>& rows);

LinearCode dual(const LinearCode& c);
LinearCode sum(const LinearCode& a, const LinearCode& b);
LinearCode intersect(const LinearCode& a, const LinearCode& b);
// Componentwise x -> x^q of the Euclidean dual; the field must have q^2 elements.
LinearCode hermitian_dual(const LinearCode& c, std::uint32_t q);

// Exact minimum Hamming weight over nonzero codewords.  Enumerates all q^k
// codewords when that fits under cap, else searches coordinate supports of
// increasing size with a budget of cap / k^2 subsets.  Throws InfeasibleError
// when neither fits and std::invalid_argument for the zero code.
std::size_t min_weight(const LinearCode& c, std::uint64_t cap = kDefaultWeightCap);

// Minimum weight over c minus sub, same strategy.  Empty when c == sub.
// Throws std::invalid_argument unless sub is a subcode of c.
std::optional<std::size_t> min_weight_excluding(const LinearCode& c, const LinearCode& sub,
                                                std::uint64_t cap = kDefaultWeightCap);

// The support search alone: checks every coordinate set of size 1, 2, ...
// for a codeword (outside sub) living on it.  Throws InfeasibleError once
// more than max_subsets sets would be needed.
std::size_t min_weight_by_support(const LinearCode& c, std::uint64_t max_subsets);
std::optional<std::size_t> min_weight_excluding_by_support(const LinearCode& c, const LinearCode& sub,
                                                           std::uint64_t max_subsets);

// q^k saturating at UINT64_MAX.
std::uint64_t codeword_count(const LinearCode& c);

// Worker threads for enumeration: PRMHULL_THREADS if set, else the hardware count.
unsigned worker_threads();

}  // namespace prmhull
