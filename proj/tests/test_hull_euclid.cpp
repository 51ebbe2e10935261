#include <doctest.h>

#include <algorithm>

#include "prmhull/hull_euclid.hpp"
#include "prmhull/prm_codes.hpp"

using namespace prmhull;

namespace {

std::vector<std::string> texts(const std::vector<Monomial>& ms) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(m.to_string());
    return out;
}

bool in_code(const LinearCode& c, const Field& F, const SparsePolynomial& f) {
    const auto v = evaluate(f, projective_points(F, 2));
    return c.contains(std::span<const Symbol>(v));
}

}  // namespace

TEST_SUITE("hull_euclid") {

TEST_CASE("intersection dimension and basis against rank") {
    for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
        const Field F = field_of_order(q);
        std::vector<LinearCode> prm;
        for (std::uint32_t d = 1; d <= 2 * (q - 1); ++d) prm.push_back(prm_code(F, 2, d));
        for (std::uint32_t d1 = 1; d1 <= 2 * (q - 1); ++d1) {
            for (std::uint32_t d2 = d1; d2 <= 2 * (q - 1); ++d2) {
                INFO("q=" << q << " d1=" << d1 << " d2=" << d2);
                const LinearCode oracle = intersect(prm[d1 - 1], prm[d2 - 1]);
                CHECK(relative_hull_dim(q, d1, d2) == oracle.dimension());
                const auto B = relative_hull_basis(F, d1, d2);
                CHECK(B.size() == oracle.dimension());
                CHECK(span_of(F, B.elements(F)) == oracle);
                CHECK(B.congruent_case == ((d2 - d1) % (q - 1) == 0));
                CHECK(B.part_Q.has_value() == (d1 >= q && !B.congruent_case));
                if (d2 < q) CHECK(B.part_Y.empty());
                CHECK(relative_hull_dim(q, d2, d1) == oracle.dimension());
            }
        }
    }
}

TEST_CASE("hull with a dual code") {
    for (std::uint32_t q : {3u, 4u, 5u}) {
        const Field F = field_of_order(q);
        for (std::uint32_t d1 = 1; d1 <= 2 * (q - 1); ++d1) {
            for (std::uint32_t d2 = 1; d2 <= 2 * (q - 1); ++d2) {
                INFO("q=" << q << " d1=" << d1 << " d2=" << d2);
                const auto direct = intersect(prm_code(F, 2, d1), dual(prm_code(F, 2, d2))).dimension();
                CHECK(hull_with_dual_oracle(F, d1, d2) == direct);
                if (d2 == q - 1) CHECK_THROWS_AS(hull_with_dual_dim(q, d1, d2), std::invalid_argument);
                else CHECK(hull_with_dual_dim(q, d1, d2) == direct);
            }
        }
        CHECK(hull_with_dual_oracle(F, 2 * (q - 1), 2 * (q - 1)) == 0);
    }
}

TEST_CASE("self hull") {
    for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
        const Field F = field_of_order(q);
        for (std::uint32_t d = 1; d < q - 1; ++d) {
            INFO("q=" << q << " d=" << d);
            const LinearCode c = prm_code(F, 2, d);
            const LinearCode oracle = intersect(c, dual(c));
            CHECK(self_hull_dim(q, d) == oracle.dimension());
            const auto B = self_hull_basis(F, d);
            CHECK(span_of(F, B.elements(F)) == oracle);
        }
    }
    CHECK(self_hull_dim(5, 2) == 6);
    CHECK(self_hull_dim(4, 1) == 2);
    CHECK(self_hull_dim(7, 2) == 5);
}

TEST_CASE("worked example at q = 4") {
    const Field F = field_of_order(4);
    const auto B = relative_hull_basis(F, 4, 5);
    CHECK(B.size() == 13);
    CHECK(texts(B.part_A1) == std::vector<std::string>{"x0^4", "x0^3*x1", "x0^3*x2", "x0^2*x1^2", "x0^2*x1*x2",
                                                       "x0^2*x2^2", "x0*x1^3", "x0*x1^2*x2", "x0*x1*x2^2",
                                                       "x0*x2^3"});
    CHECK(B.Y == std::vector<std::uint32_t>{0, 1});
    CHECK(texts(B.part_Y) == std::vector<std::string>{"x1^4", "x1^3*x2"});
    REQUIRE(B.part_Q);
    CHECK(B.part_Q->to_string() == "x2^4 + x1^2*x2^2 + x0^2*x2^2 + x0^2*x1*x2");

    const auto Q = q_polynomial(F, 4, 5);
    CHECK(Q.q.to_string() == "x2^4 + x1^2*x2^2 + x0^2*x2^2 + x0^2*x1*x2");
    CHECK(Q.companion.to_string() == "x2^5 + x0*x1^2*x2^2 + x1^4*x2 + x0^4*x2");
    CHECK(evaluate(Q.q, projective_points(F, 2)) == evaluate(Q.companion, projective_points(F, 2)));

    const auto [lhs, rhs] = y_identity(F, 4, 5, 0);
    CHECK(lhs.to_string() == "x1^4");
    CHECK(rhs.to_string() == "x1^5 + x0*x1^4 + x0^3*x1^2");

    const auto R = verify_relative_hull(F, 4, 5);
    CHECK(R.ok());
    CHECK(R.formula_dim == 13);

    CHECK(texts(relative_hull_basis(F, 1, 4).part_A1) == std::vector<std::string>{"x0", "x1", "x2"});
    CHECK(relative_hull_basis(F, 1, 4).congruent_case);
    const auto small = relative_hull_basis(F, 1, 2);
    CHECK(small.size() == 1);
    CHECK(texts(small.part_A1) == std::vector<std::string>{"x0"});
    CHECK(relative_hull_basis(F, 1, 3).dual_not_prm);
    CHECK(relative_hull_dim(3, 1, 3) == 3);
    CHECK(relative_hull_dim(3, 1, 2) == 1);
    CHECK(relative_hull_dim(5, 2, 5) == 4);
}

TEST_CASE("q polynomials agree with their companions") {
    for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
        const Field F = field_of_order(q);
        const PointSet pts = projective_points(F, 2);
        for (std::uint32_t d1 = q; d1 <= 2 * (q - 1); ++d1)
            for (std::uint32_t d2 = d1 + 1; d2 <= 2 * (q - 1); ++d2) {
                if ((d2 - d1) % (q - 1) == 0) continue;
                const auto Q = q_polynomial(F, d1, d2);
                CHECK(Q.q.is_homogeneous());
                CHECK(Q.q.degree() == d1);
                CHECK(Q.companion.degree() == d2);
                CHECK(evaluate(Q.q, pts) == evaluate(Q.companion, pts));
            }
        CHECK_THROWS(q_polynomial(F, q - 1, q + 1));
    }
}

TEST_CASE("membership properties") {
    for (std::uint32_t q : {3u, 4u, 5u}) {
        const Field F = field_of_order(q);
        const PointSet pts = projective_points(F, 2);
        const std::size_t last = pts.size() - 1;  // [0:0:1]
        for (std::uint32_t d1 = 1; d1 <= 2 * (q - 1); ++d1) {
            for (std::uint32_t d2 = d1 + 1; d2 <= 2 * (q - 1); ++d2) {
                INFO("q=" << q << " d1=" << d1 << " d2=" << d2);
                const LinearCode c2 = prm_code(F, 2, d2);
                for (const auto& m : basis_Ad(q, d1).A1) CHECK(in_code(c2, F, SparsePolynomial::from_monomial(F, m)));
                const bool congruent = (d2 - d1) % (q - 1) == 0;
                if (congruent) continue;
                const auto B = relative_hull_basis(F, d1, d2);
                // single x1^(d1-a2) x2^a2 lie in PRM_d2 exactly for a2 in Y
                for (std::uint32_t a2 = 0; a2 < d1 && a2 <= q - 1; ++a2) {
                    const bool inY = std::find(B.Y.begin(), B.Y.end(), a2) != B.Y.end();
                    CHECK(in_code(c2, F, SparsePolynomial::from_monomial(F, Monomial{0, d1 - a2, a2})) == inY);
                }
                for (std::uint32_t a2 : B.Y) {
                    const auto [l, r] = y_identity(F, d1, d2, a2);
                    CHECK(evaluate(l, pts) == evaluate(r, pts));
                }
                // the point [0:0:1] is reached only through Q
                const LinearCode hull = intersect(prm_code(F, 2, d1), c2);
                bool reaches = false;
                for (std::size_t i = 0; i < hull.dimension(); ++i) reaches |= hull.row(i)[last] != 0;
                CHECK(reaches == (d1 >= q));
            }
        }
    }
}

TEST_CASE("range errors") {
    const Field F = field_of_order(4);
    CHECK_THROWS(relative_hull_basis(F, 0, 3));
    CHECK_THROWS(relative_hull_basis(F, 2, 7));
    CHECK_THROWS(self_hull_basis(F, 4));
    CHECK_THROWS(relative_hull_dim(4, 1, 7));
}

}
