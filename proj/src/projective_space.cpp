#include "prmhull/projective_space.hpp"

#include <stdexcept>

namespace prmhull {

PointSet::PointSet(Ambient ambient, Field field, unsigned m, std::vector<Symbol> coords)
    : ambient_(ambient), field_(std::move(field)), m_(m), coords_(std::move(coords)) {}

namespace {

constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 28;

std::uint64_t checked_pow(std::uint64_t q, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= q;
        if (r > kMaxPoints) throw std::length_error("point set too large");
    }
    return r;
}

// Appends every tuple of F^k (leftmost slowest) to out, each preceded by prefix.
void append_tuples(std::vector<Symbol>& out, const std::vector<Symbol>& prefix, unsigned k, std::uint32_t q) {
    const std::uint64_t count = checked_pow(q, k);
    std::vector<Symbol> digits(k, 0);
    for (std::uint64_t t = 0; t < count; ++t) {
        out.insert(out.end(), prefix.begin(), prefix.end());
        out.insert(out.end(), digits.begin(), digits.end());
        for (unsigned i = k; i-- > 0;) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
    }
}

}  // namespace

PointSet projective_points(const Field& field, unsigned m) {
    if (!field) throw std::invalid_argument("projective_points: null field");
    if (m < 1) throw std::invalid_argument("projective_points: dimension must be >= 1");
    const std::uint32_t q = field->size();
    std::vector<Symbol> coords;
    coords.reserve(static_cast<std::size_t>(checked_pow(q, m) * 2) * (m + 1));
    for (unsigned chart = 0; chart <= m; ++chart) {
        std::vector<Symbol> prefix(chart, 0);
        prefix.push_back(1);
        append_tuples(coords, prefix, m - chart, q);
    }
    return PointSet(Ambient::projective, field, m, std::move(coords));
}

PointSet affine_points(const Field& field, unsigned m) {
    if (!field) throw std::invalid_argument("affine_points: null field");
    if (m < 1) throw std::invalid_argument("affine_points: dimension must be >= 1");
    std::vector<Symbol> coords;
    coords.reserve(static_cast<std::size_t>(checked_pow(field->size(), m)) * m);
    append_tuples(coords, {}, m, field->size());
    return PointSet(Ambient::affine, field, m, std::move(coords));
}

}  // namespace prmhull
