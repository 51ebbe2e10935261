#include "prmhull/eaqecc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "prmhull/hull_herm.hpp"
#include "prmhull/prm_codes.hpp"

namespace prmhull {

namespace {

using i64 = std::int64_t;

std::uint32_t square(std::uint32_t q) { return q * q; }

void check_base(std::uint32_t q) {
    if (q < 2 || q > 256 || !field_of_order(q)) throw std::invalid_argument("q must be a prime power in [2, 256]");
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument("hypothesis failed: " + what);
}

// Minimum distance of the dual of PRM_d(Q,2) when d is not a multiple of Q-1.
std::uint64_t prm_dual_weight(std::uint32_t Q, std::uint32_t d) { return prm_params(Q, 2, 2 * (Q - 1) - d).wt; }

std::optional<std::uint64_t> try_weight(const LinearCode& c, const LinearCode& sub, std::uint64_t cap) {
    try {
        auto w = min_weight_excluding(c, sub, cap);
        if (!w) return std::nullopt;
        return *w;
    } catch (const InfeasibleError&) {
        return std::nullopt;
    }
}

std::optional<std::uint64_t> try_weight(const LinearCode& c, std::uint64_t cap) {
    if (c.dimension() == 0) return std::nullopt;
    try {
        return min_weight(c, cap);
    } catch (const InfeasibleError&) {
        return std::nullopt;
    }
}

}  // namespace

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::closed_form: return "closed_form";
        case Provenance::oracle: return "oracle";
        case Provenance::bound: return "bound";
    }
    return "unknown";
}

bool EaqeccParams::kappa_consistent() const {
    return kappa == static_cast<i64>(n) - static_cast<i64>(k1) - static_cast<i64>(k2) + c;
}

EaqeccParams asym_from_codes(const LinearCode& c1, const LinearCode& c2, std::uint64_t weight_cap) {
    if (c1.length() != c2.length()) throw std::invalid_argument("codes have different lengths");
    EaqeccParams p;
    p.construction = "codes";
    p.base_q = c1.field()->size();
    p.n = c1.length();
    p.k1 = c1.dimension();
    p.k2 = c2.dimension();
    const LinearCode d1 = dual(c1), d2 = dual(c2);
    p.c = static_cast<i64>(p.k1) - static_cast<i64>(intersect(c1, d2).dimension());
    p.kappa = static_cast<i64>(p.n) - static_cast<i64>(p.k1 + p.k2) + p.c;
    p.tags = {{"n", Provenance::oracle}, {"kappa", Provenance::oracle}, {"c", Provenance::oracle}};

    const LinearCode z_sub = intersect(d1, c2), x_sub = intersect(d2, c1);
    p.delta_z = try_weight(d1, z_sub, weight_cap);
    p.delta_x = try_weight(d2, x_sub, weight_cap);
    std::vector<std::string> missing;
    if (p.delta_z) p.tags["delta_z"] = Provenance::oracle;
    else missing.push_back("delta_z");
    if (p.delta_x) p.tags["delta_x"] = Provenance::oracle;
    else missing.push_back("delta_x");
    if (p.delta_z && p.delta_x) {
        const auto wz = try_weight(d1, weight_cap), wx = try_weight(d2, weight_cap);
        if (wz && wx) p.pure = *p.delta_z == *wz && *p.delta_x == *wx;
    }
    if (!missing.empty()) {
        p.note = "weights omitted (empty difference or over the enumeration cap):";
        for (const auto& m : missing) p.note += " " + m;
    }
    return p;
}

bool prm_asym_admissible(std::uint32_t q, std::uint32_t d1, std::uint32_t d2) {
    if (q < 3 || !field_of_order(q)) return false;
    const std::uint32_t q1 = q - 1;
    if (d1 < 1 || d1 > d2 || d2 >= 2 * q1 || d1 == q1 || d2 == q1) return false;
    const std::uint32_t s = d1 + d2;
    return s % q1 != 0 || s == q1 || s == 2 * q1 || s == 3 * q1;
}

EaqeccParams prm_asym_eaqecc(std::uint32_t q, std::uint32_t d1, std::uint32_t d2) {
    check_base(q);
    require(q >= 3, "q >= 3");
    const std::uint32_t q1 = q - 1;
    require(d1 >= 1, "1 <= d1");
    require(d1 <= d2, "d1 <= d2");
    require(d2 < 2 * q1, "d2 < 2(q-1)");
    require(d1 != q1, "d1 != q-1");
    require(d2 != q1, "d2 != q-1");

    EaqeccParams p;
    p.construction = "asym";
    p.base_q = q;
    p.d1 = d1;
    p.d2 = d2;
    p.n = square(q) + q + 1;
    p.k1 = prm_params(q, 2, d1).k;
    p.k2 = prm_params(q, 2, d2).k;
    const std::uint32_t d2p = 2 * q1 - d2;
    const std::uint32_t s = d1 + d2;

    if (s % q1 == 0) {
        require(s <= 3 * q1, "d1 + d2 not a multiple of q-1 beyond 3(q-1)");
        if (s == 3 * q1)
            p.c = static_cast<i64>(p.k1) - static_cast<i64>(p.n - p.k2);
        else
            p.c = 0;
        p.note = "d1 + d2 is a multiple of q-1";
    } else if (s < 2 * q1) {
        if (d2 < q1)
            p.c = d1 + 1 - std::min<i64>(d1, q1 - d2);
        else
            p.c = d1 + 1;
        p.pure = true;
    } else {
        const i64 rk1 = static_cast<i64>(rm_params(q, 2, d1 - 1).k);
        const i64 rk2 = static_cast<i64>(rm_params(q, 2, d2p - 1).k);
        if (d1 < q1)
            p.c = rk1 - rk2 + d1 + 1;
        else
            p.c = rk1 - rk2 + q + 1 - std::min<i64>(d2p, d1 - q1);
        p.pure = true;
    }
    p.kappa = static_cast<i64>(p.n) - static_cast<i64>(p.k1 + p.k2) + p.c;
    p.delta_z = prm_dual_weight(q, d2);
    p.delta_x = prm_dual_weight(q, d1);
    for (const char* key : {"n", "kappa", "c", "delta_z", "delta_x"}) p.tags[key] = Provenance::closed_form;
    return p;
}

EaqeccParams prm_symmetric_best(std::uint32_t q, std::uint32_t d1) {
    check_base(q);
    require(q >= 3, "q >= 3");
    const std::uint32_t q1 = q - 1;
    require(d1 >= 1 && d1 < 2 * q1, "1 <= d1 < 2(q-1)");
    require(d1 != q1, "d1 != q-1");
    require((2 * d1) % q1 != 0, "2 d1 not a multiple of q-1");

    EaqeccParams p;
    p.construction = "symmetric";
    p.base_q = q;
    p.d1 = p.d2 = d1;
    p.n = square(q) + q + 1;
    p.k1 = p.k2 = prm_params(q, 2, d1).k;
    const std::uint32_t dp = 2 * q1 - d1;
    if (d1 < q1) {
        p.c = d1 + 1 - std::min<i64>(d1, q1 - d1);
    } else {
        const i64 rk1 = static_cast<i64>(rm_params(q, 2, d1 - 1).k);
        const i64 rk2 = static_cast<i64>(rm_params(q, 2, dp - 1).k);
        p.c = rk1 - rk2 + q + 1 - std::min<i64>(dp, d1 - q1);
    }
    p.kappa = static_cast<i64>(p.n) - 2 * static_cast<i64>(p.k1) + p.c;
    p.delta = prm_dual_weight(q, d1);
    p.pure = true;
    for (const char* key : {"n", "kappa", "c", "delta"}) p.tags[key] = Provenance::closed_form;
    return p;
}

namespace {

EaqeccParams herm_prm_frame(std::uint32_t q, std::uint32_t d) {
    check_base(q);
    const std::uint32_t Q = square(q);
    require(d >= 1 && d < Q - 1, "1 <= d < q^2-1");
    EaqeccParams p;
    p.construction = "herm_prm";
    p.base_q = q;
    p.d1 = d;
    p.n = static_cast<std::uint64_t>(Q) * Q + Q + 1;
    p.k1 = p.k2 = prm_params(Q, 2, d).k;
    p.delta = prm_dual_weight(Q, d);
    p.tags["n"] = Provenance::closed_form;
    p.tags["delta"] = Provenance::bound;
    return p;
}

EaqeccParams herm_rm_frame(std::uint32_t q, std::uint32_t d) {
    check_base(q);
    const std::uint32_t Q = square(q);
    require(d < Q - 1, "0 <= d < q^2-1");
    EaqeccParams p;
    p.construction = "herm_rm";
    p.base_q = q;
    p.d1 = d;
    p.n = static_cast<std::uint64_t>(Q) * Q;
    p.k1 = p.k2 = rm_params(Q, 2, d).k;
    p.delta = rm_params(Q, 2, 2 * (Q - 1) - d - 1).wt;
    p.tags["n"] = Provenance::closed_form;
    p.tags["delta"] = Provenance::bound;
    return p;
}

void finish_symmetric(EaqeccParams& p, Provenance c_tag) {
    p.kappa = static_cast<i64>(p.n) - 2 * static_cast<i64>(p.k1) + p.c;
    p.tags["c"] = c_tag;
    p.tags["kappa"] = c_tag;
}

}  // namespace

EaqeccParams herm_eaqecc_prm(std::uint32_t q, std::uint32_t d) {
    EaqeccParams p = herm_prm_frame(q, d);
    const std::uint32_t Q = square(q), q1 = q - 1;
    const bool cong = q == 2 || d % q1 == 0;
    Provenance tag = Provenance::closed_form;
    if (d <= 2 * q1) {
        p.c = cong ? 0 : (d < q1 ? 1 : 2);
    } else if (cong) {
        p.c = static_cast<i64>(rm_params(Q, 2, d - 1).k) - u_size(q, d).total;
    } else {
        p.c = static_cast<i64>(p.k1) - u_size(q, d).total - static_cast<i64>(t_size(q, d)) -
              static_cast<i64>(set_W(q, d).size());
        tag = Provenance::bound;
        p.note = "c and kappa are upper bounds";
    }
    finish_symmetric(p, tag);
    return p;
}

EaqeccParams herm_eaqecc_prm_oracle(std::uint32_t q, std::uint32_t d) {
    EaqeccParams p = herm_prm_frame(q, d);
    const Field F = field_of_order(square(q));
    const LinearCode code = prm_code(F, 2, d);
    p.c = static_cast<i64>(p.k1) - static_cast<i64>(intersect(code, hermitian_dual(code, q)).dimension());
    finish_symmetric(p, Provenance::oracle);
    return p;
}

EaqeccParams herm_eaqecc_rm(std::uint32_t q, std::uint32_t d) {
    EaqeccParams p = herm_rm_frame(q, d);
    p.c = d < 2 * (q - 1) ? 0 : static_cast<i64>(p.k1) - affine_u_size(q, d).total;
    finish_symmetric(p, Provenance::closed_form);
    return p;
}

EaqeccParams herm_eaqecc_rm_oracle(std::uint32_t q, std::uint32_t d) {
    EaqeccParams p = herm_rm_frame(q, d);
    const Field F = field_of_order(square(q));
    const LinearCode code = rm_code(F, 2, d);
    p.c = static_cast<i64>(p.k1) - static_cast<i64>(intersect(code, hermitian_dual(code, q)).dimension());
    finish_symmetric(p, Provenance::oracle);
    return p;
}

PurityReport purity_probe(std::uint32_t q, std::uint32_t d1, std::uint32_t d2, std::uint64_t cap) {
    check_base(q);
    const std::uint32_t top = 2 * (q - 1);
    require(d1 >= 1 && d1 <= top && d2 >= 1 && d2 <= top, "1 <= d1, d2 <= 2(q-1)");
    const Field F = field_of_order(q);
    const LinearCode c1 = prm_code(F, 2, d1);
    const LinearCode shared = intersect(c1, prm_code(F, 2, d2));
    PurityReport r{q, d1, d2, min_weight(c1, cap), std::nullopt};
    if (auto w = min_weight_excluding(c1, shared, cap)) r.wt_excluding = *w;
    return r;
}

std::vector<EaqeccParams> asym_table(std::uint32_t q) {
    check_base(q);
    std::vector<EaqeccParams> out;
    for (std::uint32_t d1 = 1; q >= 3 && d1 < 2 * (q - 1); ++d1)
        for (std::uint32_t d2 = d1; d2 < 2 * (q - 1); ++d2)
            if (prm_asym_admissible(q, d1, d2)) out.push_back(prm_asym_eaqecc(q, d1, d2));
    return out;
}

std::vector<EaqeccParams> herm_table(std::uint32_t q) {
    check_base(q);
    std::vector<EaqeccParams> out;
    for (std::uint32_t d = 1; d + 1 < square(q); ++d) out.push_back(herm_eaqecc_prm(q, d));
    return out;
}

std::vector<EaqeccParams> affine_herm_table(std::uint32_t q) {
    check_base(q);
    std::vector<EaqeccParams> out;
    for (std::uint32_t d = 0; d + 1 < square(q); ++d) out.push_back(herm_eaqecc_rm(q, d));
    return out;
}

std::string format_params(const EaqeccParams& p) {
    std::ostringstream os;
    os << "[[" << p.n << "," << p.kappa << ",";
    auto num = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string("?"); };
    if (p.delta)
        os << num(p.delta);
    else
        os << num(p.delta_z) << "/" << num(p.delta_x);
    os << ";" << p.c << "]]_" << (p.construction.rfind("herm", 0) == 0 ? p.base_q * p.base_q : p.base_q);
    return os.str();
}

}  // namespace prmhull
