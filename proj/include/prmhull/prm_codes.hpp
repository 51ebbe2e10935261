#pragma once

#include <cstdint>
#include <string>

#include "prmhull/linear_code.hpp"
#include "prmhull/projective_space.hpp"

namespace prmhull {

// C(n, r) with C(n, r) = 0 for r < 0 or r > n.
std::int64_t binomial(std::int64_t n, std::int64_t r);

enum class Family { prm, rm };

struct CodeParams {
    Family family;
    std::uint32_t q;
    unsigned m;
    std::uint32_t d;
    std::uint64_t n;
    std::uint64_t k;
    std::uint64_t wt;
};

// Evaluations of all degree-d forms at projective_points(field, m),
// 1 <= d <= m(q-1).  d = 0 gives the all-ones code.
LinearCode prm_code(const Field& field, unsigned m, std::uint32_t d);
// Evaluations of monomials with exponents <= q-1 and degree <= d at F^m.
LinearCode rm_code(const Field& field, unsigned m, std::uint32_t d);
LinearCode all_ones_code(const Field& field, std::size_t n);

CodeParams prm_params(std::uint32_t q, unsigned m, std::uint32_t d);
CodeParams rm_params(std::uint32_t q, unsigned m, std::uint32_t d);

struct PrmDual {
    std::uint32_t dual_degree;  // m(q-1) - d
    bool extra_all_ones;        // dual is PRM_{dual_degree} + <1>
};

PrmDual prm_dual_description(std::uint32_t q, unsigned m, std::uint32_t d);
// The code named by prm_dual_description.
LinearCode prm_dual_code(const Field& field, unsigned m, std::uint32_t d);

std::uint32_t rm_dual_degree(std::uint32_t q, unsigned m, std::uint32_t d);

std::string family_name(Family f);

}  // namespace prmhull
