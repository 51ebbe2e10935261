#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prmhull/linear_code.hpp"

namespace prmhull {

enum class Provenance { closed_form, oracle, bound };
std::string provenance_name(Provenance p);

// [[n, kappa, delta_z/delta_x; c]]_q, or [[n, kappa, delta; c]]_q when
// `delta` is set.  `tags` records how each number was obtained.
struct EaqeccParams {
    std::string construction;  // asym, symmetric, herm_prm, herm_rm, codes
    std::uint32_t base_q = 0;
    std::uint32_t d1 = 0, d2 = 0;  // d1 alone for single-degree constructions
    std::uint64_t n = 0;
    std::uint64_t k1 = 0, k2 = 0;  // dimensions of the classical codes used
    std::int64_t kappa = 0;
    std::int64_t c = 0;
    std::optional<std::uint64_t> delta_z, delta_x, delta;
    std::optional<bool> pure;
    std::map<std::string, Provenance> tags;
    std::string note;

    // kappa against its defining identity.
    bool kappa_consistent() const;
};

// Generic CSS-type construction from two codes of equal length.  Weights are
// enumerated only when they fit under cap; otherwise left empty with a note.
EaqeccParams asym_from_codes(const LinearCode& c1, const LinearCode& c2, std::uint64_t weight_cap = kDefaultWeightCap);

// 1 <= d1 <= d2 < 2(q-1), d1 != q-1 != d2.  Sums d1 + d2 that are multiples
// of q-1 are served for q-1, 2(q-1) and 3(q-1) only.
EaqeccParams prm_asym_eaqecc(std::uint32_t q, std::uint32_t d1, std::uint32_t d2);

// The d2 = d1 choice; needs 2 d1 not divisible by q-1.
EaqeccParams prm_symmetric_best(std::uint32_t q, std::uint32_t d1);

// C = PRM_d(q^2, 2), 1 <= d < q^2-1.  delta is a lower bound.
EaqeccParams herm_eaqecc_prm(std::uint32_t q, std::uint32_t d);
// Same construction with c from the Hermitian hull oracle.
EaqeccParams herm_eaqecc_prm_oracle(std::uint32_t q, std::uint32_t d);

// C = RM_d(q^2, 2), 0 <= d < q^2-1.
EaqeccParams herm_eaqecc_rm(std::uint32_t q, std::uint32_t d);
EaqeccParams herm_eaqecc_rm_oracle(std::uint32_t q, std::uint32_t d);

struct PurityReport {
    std::uint32_t q, d1, d2;
    std::size_t wt_full;
    std::optional<std::size_t> wt_excluding;  // empty: PRM_{d1} inside PRM_{d2}
    bool pure() const { return !wt_excluding || *wt_excluding == wt_full; }
};

// Minimum weight of PRM_{d1}(q,2) with and without the part shared with PRM_{d2}(q,2).
PurityReport purity_probe(std::uint32_t q, std::uint32_t d1, std::uint32_t d2, std::uint64_t cap = kDefaultWeightCap);

// Whether prm_asym_eaqecc accepts (q, d1, d2).
bool prm_asym_admissible(std::uint32_t q, std::uint32_t d1, std::uint32_t d2);

// Every accepted (d1, d2) for prm_asym_eaqecc, d1 then d2 ascending.
std::vector<EaqeccParams> asym_table(std::uint32_t q);
// herm_eaqecc_prm for 1 <= d < q^2-1 and herm_eaqecc_rm for 0 <= d < q^2-1.
std::vector<EaqeccParams> herm_table(std::uint32_t q);
std::vector<EaqeccParams> affine_herm_table(std::uint32_t q);

std::string format_params(const EaqeccParams& p);

}  // namespace prmhull
