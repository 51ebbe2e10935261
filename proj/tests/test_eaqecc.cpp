#include <doctest.h>

#include "oracle.hpp"
#include "prmhull/eaqecc.hpp"
#include "prmhull/hull_euclid.hpp"
#include "prmhull/prm_codes.hpp"

using namespace prmhull;

TEST_SUITE("eaqecc") {

TEST_CASE("codes: Fano plane") {
    const Field F = field_of_order(2);
    const LinearCode C = prm_code(F, 2, 1);
    // hull dimension from the full list of codewords
    const oracle::NaiveField N(2, 1);
    std::vector<oracle::Word> rows;
    for (std::size_t i = 0; i < C.dimension(); ++i) rows.emplace_back(C.row(i).begin(), C.row(i).end());
    const auto words = oracle::span(N, rows, 7);
    std::size_t orthogonal = 0;
    for (const auto& w : words) {
        bool ok = true;
        for (const auto& r : rows) ok &= oracle::dot(N, w, r) == 0;
        orthogonal += ok;
    }
    std::size_t hull_dim = 0;
    while ((std::size_t{1} << hull_dim) < orthogonal) ++hull_dim;

    const auto p = asym_from_codes(C, C);
    CHECK(p.n == 7);
    CHECK(p.k1 == 3);
    CHECK(p.c == static_cast<std::int64_t>(3 - hull_dim));
    CHECK(p.kappa == 7 - 6 + p.c);
    CHECK(p.kappa_consistent());
}

TEST_CASE("codes: C1 inside the dual of C2") {
    const Field F = field_of_order(3);
    const LinearCode C1 = prm_code(F, 2, 1);
    const auto p = asym_from_codes(C1, dual(C1));
    CHECK(p.c == 0);
    CHECK(p.kappa == 0);
    CHECK_THROWS_AS(asym_from_codes(C1, LinearCode(F, 4)), std::invalid_argument);
}

TEST_CASE("codes: over the enumeration cap") {
    const Field F = field_of_order(9);
    const auto p = asym_from_codes(prm_code(F, 2, 3), prm_code(F, 2, 11), 1000);
    CHECK(p.c == 4);
    CHECK(p.kappa == 15);
    CHECK(!p.delta_z);
    CHECK(!p.note.empty());
}

TEST_CASE("closed form against the codes") {
    for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
        const Field F = field_of_order(q);
        for (const auto& p : asym_table(q)) {
            INFO("q=" << q << " d1=" << p.d1 << " d2=" << p.d2);
            const auto x = asym_from_codes(prm_code(F, 2, p.d1), prm_code(F, 2, p.d2), 200'000);
            CHECK(p.c == x.c);
            CHECK(p.kappa == x.kappa);
            CHECK(p.kappa_consistent());
            CHECK(p.c >= 0);
            CHECK(p.kappa >= 0);
            // the generic construction names the weights the other way round
            if (x.delta_z) CHECK(*x.delta_z == *p.delta_x);
            if (x.delta_x) CHECK(*x.delta_x == *p.delta_z);
            CHECK(p.c == static_cast<std::int64_t>(p.k1) -
                             static_cast<std::int64_t>(intersect(prm_code(F, 2, p.d1), dual(prm_code(F, 2, p.d2))).dimension()));
        }
    }
}

TEST_CASE("reference codes") {
    CHECK(format_params(prm_asym_eaqecc(9, 3, 11)) == "[[91,15,45/5;4]]_9");
    const auto a = prm_asym_eaqecc(4, 1, 4);
    CHECK(format_params(a) == "[[21,5,12/3;2]]_4");
    CHECK(*a.delta_z == 12);
    CHECK(*a.delta_x == 3);
    CHECK(format_params(prm_asym_eaqecc(9, 1, 14)) == "[[91,5,72/3;2]]_9");
    CHECK(format_params(prm_asym_eaqecc(11, 1, 18)) == "[[133,5,110/3;2]]_11");
    CHECK(format_params(prm_asym_eaqecc(13, 1, 22)) == "[[183,5,156/3;2]]_13");
    CHECK(prm_asym_eaqecc(9, 3, 11).pure == true);
}

TEST_CASE("symmetric choice") {
    const auto s = prm_symmetric_best(4, 1);
    CHECK(s.n == 21);
    CHECK(s.kappa == 16);
    CHECK(*s.delta == 3);
    CHECK(s.c == 1);
    for (std::uint32_t q : {4u, 7u, 9u})
        for (std::uint32_t d = 1; d < 2 * (q - 1); ++d) {
            if (d == q - 1 || (2 * d) % (q - 1) == 0) {
                CHECK_THROWS_AS(prm_symmetric_best(q, d), std::invalid_argument);
                continue;
            }
            const auto p = prm_symmetric_best(q, d), x = prm_asym_eaqecc(q, d, d);
            CHECK(p.c == x.c);
            CHECK(p.kappa == x.kappa);
            CHECK(*p.delta == *x.delta_z);
        }
    // 2 d1 = q - 1 falls outside the closed form; the note case gives c = 0
    CHECK_THROWS_AS(prm_symmetric_best(5, 2), std::invalid_argument);
    CHECK(prm_asym_eaqecc(5, 2, 2).c == 0);
    CHECK(prm_params(5, 2, 2).k - hull_with_dual_oracle(field_of_order(5), 2, 2) == 0);
}

TEST_CASE("excluded degrees") {
    CHECK_THROWS_AS(prm_asym_eaqecc(4, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(prm_asym_eaqecc(4, 1, 6), std::invalid_argument);
    CHECK_THROWS_AS(prm_asym_eaqecc(4, 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(prm_asym_eaqecc(2, 1, 1), std::invalid_argument);
    // d2 = 2(q-1) is out of range; sums that are multiples of q-1 are served
    CHECK(prm_asym_admissible(5, 4, 8) == false);
    CHECK(prm_asym_admissible(5, 5, 7));
    CHECK(prm_asym_admissible(5, 1, 3));
    CHECK(prm_asym_admissible(7, 5, 7));
    CHECK_FALSE(prm_asym_admissible(7, 6, 7));
    try {
        prm_asym_eaqecc(4, 3, 4);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("hypothesis failed") != std::string::npos);
    }
}

TEST_CASE("Hermitian constructions") {
    const auto h2 = herm_eaqecc_prm(3, 2);
    CHECK(h2.n == 91);
    CHECK(h2.kappa == 79);
    CHECK(h2.c == 0);
    CHECK(*h2.delta == 4);
    const auto h1 = herm_eaqecc_prm(3, 1);
    CHECK(h1.c == 1);
    CHECK(*h1.delta == 3);
    CHECK(h1.kappa == 86);
    const auto h3 = herm_eaqecc_prm(3, 3);
    CHECK(h3.c == 2);
    CHECK(*h3.delta == 5);
    CHECK(h3.kappa == 73);
    const auto h7 = herm_eaqecc_prm(3, 7);
    CHECK(h7.c == 13);
    CHECK(h7.tags.at("c") == Provenance::bound);
    CHECK(herm_eaqecc_prm_oracle(3, 7).c == 13);
    CHECK(format_params(h2) == "[[91,79,4;0]]_9");
    CHECK_THROWS(herm_eaqecc_prm(3, 8));

    const auto r1 = herm_eaqecc_rm(3, 1);
    CHECK(r1.n == 81);
    CHECK(r1.c == 0);
    CHECK(r1.kappa == 75);
    CHECK(herm_eaqecc_rm(3, 4).c == 1);
    CHECK(herm_eaqecc_rm(3, 3).c == 0);

    for (std::uint32_t q : {2u, 3u}) {
        for (const auto& p : herm_table(q)) {
            CHECK(p.kappa_consistent());
            const auto x = p.construction == "herm_prm" ? herm_eaqecc_prm_oracle(q, p.d1) : herm_eaqecc_rm_oracle(q, p.d1);
            if (p.tags.at("c") == Provenance::bound) CHECK(p.c >= x.c);
            else CHECK(p.c == x.c);
        }
        for (const auto& p : affine_herm_table(q)) CHECK(p.c == herm_eaqecc_rm_oracle(q, p.d1).c);
    }
}

TEST_CASE("purity") {
    const auto a = purity_probe(4, 4, 5);
    CHECK(a.wt_full == 4);
    CHECK(a.wt_excluding == 4u);
    CHECK(a.pure());
    const auto b = purity_probe(4, 2, 4);
    CHECK(b.wt_full == 12);
    CHECK(b.wt_excluding == 12u);
    // congruent degrees: PRM_d1 lies inside PRM_d2 and nothing is left
    CHECK(!purity_probe(4, 2, 5).wt_excluding);
    CHECK(!purity_probe(4, 1, 4).wt_excluding);
    CHECK(purity_probe(4, 1, 4).pure());
    for (const auto& p : asym_table(3)) {
        if ((p.d2 - p.d1) % 2 == 0) continue;
        CHECK(purity_probe(3, p.d1, p.d2).pure());
        CHECK(purity_probe(3, p.d2, p.d1).pure());
    }
}

TEST_CASE("table sizes") {
    CHECK(asym_table(4).size() > 0);
    for (const auto& p : asym_table(5)) CHECK(prm_asym_admissible(5, p.d1, p.d2));
    CHECK(herm_table(2).size() == 2);
    CHECK(affine_herm_table(2).size() == 3);
    CHECK(affine_herm_table(3).size() == 8);
    CHECK(provenance_name(Provenance::bound) == "bound");
}

}
