#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "prmhull/linear_code.hpp"
#include "prmhull/prm_codes.hpp"
#include "prmhull/quotient_poly.hpp"

using namespace prmhull;

namespace {

std::vector<Symbol> naive_eval(const oracle::NaiveField& N, const SparsePolynomial& f, const PointSet& pts) {
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        oracle::Word pt(pts.point(i).begin(), pts.point(i).end());
        Symbol s = 0;
        for (const auto& [m, c] : f.terms()) s = N.add(s, N.mul(c, oracle::eval_monomial(N, m.exponents, pt)));
        out.push_back(s);
    }
    return out;
}

SparsePolynomial random_poly(std::mt19937& rng, const Field& F, std::uint32_t max_exp, int terms) {
    std::uniform_int_distribution<std::uint32_t> ex(0, max_exp), co(1, F->size() - 1);
    SparsePolynomial f(F, 3);
    for (int t = 0; t < terms; ++t) f.add_term(Monomial{ex(rng), ex(rng), ex(rng)}, static_cast<Symbol>(co(rng)));
    return f;
}

}  // namespace

TEST_SUITE("quotient_poly") {

TEST_CASE("overline") {
    CHECK(overline(0, 4) == 0);
    CHECK(overline(3, 4) == 3);
    CHECK(overline(4, 4) == 1);
    CHECK(overline(6, 4) == 3);
    CHECK(overline(7, 4) == 1);
    CHECK(overline(15, 9) == 7);
    CHECK(overline(8, 9) == 8);
}

TEST_CASE("monomial text and grlex order") {
    CHECK(Monomial{0, 0, 0}.to_string() == "1");
    CHECK(Monomial{1, 2, 0}.to_string() == "x0*x1^2");
    CHECK(Monomial{3, 1}.to_string(1) == "x1^3*x2");
    // x0 < x1 < x2 within a degree
    CHECK(grlex_less(Monomial{1, 0, 0}, Monomial{0, 1, 0}));
    CHECK(grlex_less(Monomial{0, 1, 0}, Monomial{0, 0, 1}));
    CHECK(grlex_less(Monomial{2, 0, 1}, Monomial{0, 2, 1}));
    CHECK(grlex_less(Monomial{0, 0, 3}, Monomial{4, 0, 0}));
    CHECK_FALSE(grlex_less(Monomial{1, 1, 1}, Monomial{1, 1, 1}));
}

TEST_CASE("parse and print round trip") {
    const Field F4 = field_of_order(4), F5 = field_of_order(5);
    const auto q = parse_polynomial("x2^4 + x1^2*x2^2 + x0^2*x2^2 + x0^2*x1*x2", F4);
    CHECK(q.to_string() == "x2^4 + x1^2*x2^2 + x0^2*x2^2 + x0^2*x1*x2");
    CHECK(q.is_homogeneous());
    CHECK(q.degree() == 4);
    // terms are re-sorted; '-' means the additive inverse
    CHECK(parse_polynomial("x1^5 - x0^3*x1^2 + x0*x1^4", F4).to_string() == "x1^5 + x0*x1^4 + x0^3*x1^2");
    const auto f = parse_polynomial("-x0 + 3*x1*x2 + 1", F5);
    CHECK(f.to_string() == "3*x1*x2 + 4*x0 + 1");
    CHECK(parse_polynomial(f.to_string(), F5) == f);
    CHECK(parse_polynomial("0", F5).is_zero());
    CHECK(SparsePolynomial(F5, 3).to_string() == "0");
    CHECK(parse_polynomial("x0 + x0 + x0 + x0 + x0", F5).is_zero());
    CHECK_THROWS(parse_polynomial("x3", F5));
    CHECK_THROWS(parse_polynomial("x0^", F5));
    CHECK_THROWS(parse_polynomial("x0 x1", F5));
    CHECK_THROWS(parse_polynomial("x0 +", F5));
    CHECK_THROWS(parse_polynomial("7*x0", F5));
    CHECK_THROWS(parse_polynomial("y1", F5));
}

TEST_CASE("polynomial arithmetic") {
    const Field F = field_of_order(3);
    const auto a = parse_polynomial("x0 + x1", F), b = parse_polynomial("x0 + 2*x1", F);
    CHECK((a * b).to_string() == "2*x1^2 + x0^2");
    CHECK((a - a).is_zero());
    CHECK((a + b).to_string() == "2*x0");
    CHECK((-a).to_string() == "2*x1 + 2*x0");
    CHECK(a.scaled(2) == -a);
    CHECK(a.power_of_char(3) == a * a * a);
    CHECK_THROWS(a + parse_polynomial("x0", field_of_order(9)));
}

TEST_CASE("reduction cases on monomials") {
    const Field F = field_of_order(4);
    auto red = [&](Monomial m) { return reduce_mod_IP2(SparsePolynomial::from_monomial(F, m)).to_string(); };
    CHECK(red({0, 5, 2}) == "x1^2*x2^2");
    CHECK(red({2, 0, 5}) == "x0*x2^2");
    CHECK(red({4, 0, 0}) == "x0");
    CHECK(red({0, 0, 0}) == "1");
    CHECK(red({1, 1, 0}) == "x0*x1");
    // general case, q = 4: every sign is +
    CHECK(red({2, 1, 1}) == "x1*x2 + x0*x2 + x0*x1 + x2 + x1 + x0 + 1");
    const Field F5 = field_of_order(5);
    CHECK(reduce_mod_IP2(SparsePolynomial::from_monomial(F5, {2, 1, 1})).to_string() ==
          "x1*x2 + x0*x2 + x0*x1 + 4*x2 + 4*x1 + 4*x0 + 1");
}

TEST_CASE("reduction preserves evaluations and is a normal form") {
    std::mt19937 rng(3);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
        auto [p, e] = oracle::prime_power(q);
        const oracle::NaiveField N(p, e);
        const Field F = field_of_order(q);
        const PointSet pts = projective_points(F, 2);
        const auto basis = standard_basis_P2(q);
        CHECK(basis.size() == q * q + q + 1);
        std::set<Monomial, GrlexGreater> allowed(basis.begin(), basis.end());
        for (int trial = 0; trial < 40; ++trial) {
            const auto f = random_poly(rng, F, 3 * q, 6);
            const auto r = reduce_mod_IP2(f);
            REQUIRE(naive_eval(N, f, pts) == naive_eval(N, r, pts));
            REQUIRE(evaluate(f, pts) == naive_eval(N, f, pts));
            for (const auto& [m, c] : r.terms()) REQUIRE(allowed.count(m));
            REQUIRE(reduce_mod_IP2(r) == r);
        }
        // distinct normal forms have distinct evaluations: the basis evaluations are independent
        std::vector<Symbol> rows;
        for (const auto& m : basis) {
            const auto v = evaluate(m, pts);
            rows.insert(rows.end(), v.begin(), v.end());
        }
        CHECK(LinearCode::from_matrix(F, pts.size(), rows).dimension() == basis.size());
    }
}

TEST_CASE("A^d bases") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        for (std::uint32_t d = 1; d <= 2 * (q - 1); ++d) {
            const auto A = basis_Ad(q, d);
            CHECK(A.size() == prm_params(q, 2, d).k);
            CHECK(A.A3.size() == 1);
            CHECK(A.A3[0] == Monomial{0, 0, d});
            for (const auto& m : A.A1) CHECK((m.degree() == d && m[0] > 0 && m[1] <= q - 1 && m[2] <= q - 1));
            for (const auto& m : A.A2) CHECK((m.degree() == d && m[0] == 0 && m[1] > 0 && m[2] <= q - 1));
            for (std::size_t i = 1; i < A.A1.size(); ++i) {
                const auto &a = A.A1[i - 1], &b = A.A1[i];
                CHECK((a[0] > b[0] || (a[0] == b[0] && a[1] > b[1])));
            }
            for (std::size_t i = 1; i < A.A2.size(); ++i) CHECK(A.A2[i - 1][1] > A.A2[i][1]);
            // spans PRM_d
            const Field F = field_of_order(q);
            std::vector<SparsePolynomial> polys;
            for (const auto& m : A.all()) polys.push_back(SparsePolynomial::from_monomial(F, m));
            const PointSet pts = projective_points(F, 2);
            std::vector<Symbol> rows;
            for (const auto& f : polys) {
                const auto v = evaluate(f, pts);
                rows.insert(rows.end(), v.begin(), v.end());
            }
            CHECK(LinearCode::from_matrix(F, pts.size(), rows) == prm_code(F, 2, d));
        }
    }
    CHECK_THROWS(basis_Ad(4, 0));
    CHECK_THROWS(basis_Ad(4, 7));
}

TEST_CASE("vanishing ideal generators vanish") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const Field F = field_of_order(q);
        for (unsigned m : {1u, 2u, 3u}) {
            const PointSet pts = projective_points(F, m);
            const auto gens = vanishing_ideal_generators(F, m);
            CHECK(!gens.empty());
            for (const auto& g : gens) {
                for (auto s : evaluate(g, pts)) CHECK(s == 0);
            }
        }
    }
}

TEST_CASE("homogeneous monomial counts") {
    for (std::size_t n : {1u, 2u, 3u, 4u})
        for (std::uint32_t d = 0; d < 8; ++d)
            CHECK(homogeneous_monomials(n, d).size() == static_cast<std::size_t>(binomial(d + n - 1, n - 1)));
}

}
