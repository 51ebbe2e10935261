#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "prmhull/finite_field.hpp"

namespace prmhull {

enum class Ambient { projective, affine };

// Ordered point representatives; the order fixes code coordinates.
class PointSet {
public:
    PointSet(Ambient ambient, Field field, unsigned m, std::vector<Symbol> coords);

    Ambient ambient() const { return ambient_; }
    const Field& field() const { return field_; }
    unsigned dimension() const { return m_; }
    // Coordinates per point: m + 1 for projective, m for affine.
    unsigned arity() const { return ambient_ == Ambient::projective ? m_ + 1 : m_; }
    std::size_t size() const { return coords_.size() / arity(); }
    std::span<const Symbol> point(std::size_t i) const { return {coords_.data() + i * arity(), arity()}; }

private:
    Ambient ambient_;
    Field field_;
    unsigned m_;
    std::vector<Symbol> coords_;  // row-major, size() * arity()
};

// Leftmost nonzero coordinate normalized to 1.  Chart {1} x F^m first, then
// {0} x {1} x F^(m-1), ..., ending with (0,...,0,1).  Inside a chart the free
// coordinates run lexicographically, leftmost slowest.
PointSet projective_points(const Field& field, unsigned m);

// All of F^m, lexicographic, first coordinate slowest.
PointSet affine_points(const Field& field, unsigned m);

}  // namespace prmhull
