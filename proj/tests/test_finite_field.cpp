#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "prmhull/finite_field.hpp"

using namespace prmhull;

namespace {

std::vector<std::uint32_t> prime_powers(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 2; q <= limit; ++q) {
        auto [p, e] = oracle::prime_power(q);
        std::uint32_t t = 1;
        for (std::uint32_t i = 0; i < e; ++i) t *= p;
        if (t == q) out.push_back(q);
    }
    return out;
}

}  // namespace

TEST_SUITE("finite_field") {

TEST_CASE("modulus is the smallest monic irreducible") {
    for (auto q : prime_powers(1024)) {
        auto [p, e] = oracle::prime_power(q);
        const oracle::NaiveField N(p, e);
        CHECK_MESSAGE(field_of_order(q)->modulus() == N.modulus(), "q = " << q);
    }
    CHECK(field_of_order(4)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(field_of_order(9)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(field_of_order(16)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
}

TEST_CASE("tables agree with schoolbook arithmetic") {
    for (auto q : prime_powers(64)) {
        auto [p, e] = oracle::prime_power(q);
        const oracle::NaiveField N(p, e);
        const Field F = field_of_order(q);
        for (Symbol a = 0; a < q; ++a) {
            CHECK(F->neg(a) == N.neg(a));
            if (a != 0) CHECK(F->inv(a) == N.inv(a));
            for (Symbol b = 0; b < q; ++b) {
                REQUIRE(F->add(a, b) == N.add(a, b));
                REQUIRE(F->mul(a, b) == N.mul(a, b));
            }
        }
    }
}

TEST_CASE("large fields on random samples") {
    std::mt19937 rng(7);
    for (std::uint32_t q : {81u, 125u, 128u, 243u, 256u, 343u, 729u, 1024u, 2048u, 4096u, 65536u}) {
        auto [p, e] = oracle::prime_power(q);
        const oracle::NaiveField N(p, e);
        const Field F = field_of_order(q);
        std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
        for (int i = 0; i < 2000; ++i) {
            const auto a = static_cast<Symbol>(pick(rng)), b = static_cast<Symbol>(pick(rng));
            REQUIRE(F->add(a, b) == N.add(a, b));
            REQUIRE(F->mul(a, b) == N.mul(a, b));
            REQUIRE(F->sub(a, b) == N.add(a, N.neg(b)));
        }
    }
}

TEST_CASE("pow, division and frobenius") {
    for (std::uint32_t base : {2u, 3u, 4u, 5u, 7u, 8u}) {
        const std::uint32_t Q = base * base;
        auto [p, e] = oracle::prime_power(Q);
        const oracle::NaiveField N(p, e);
        const Field F = field_of_order(Q);
        for (Symbol a = 0; a < Q; ++a) {
            CHECK(F->frobenius(a, base) == N.pow(a, base));
            CHECK(F->pow(a, 5) == N.pow(a, 5));
            CHECK(F->pow(a, Q) == a);
            if (a != 0) CHECK(F->div(1, a) == N.inv(a));
        }
    }
    CHECK(field_of_order(9)->pow(0, 0) == 1);
}

TEST_CASE("FieldElement arithmetic") {
    const Field F = field_of_order(9), G = field_of_order(3);
    const FieldElement a(F, 5), b(F, 7);
    CHECK((a * b).value() == F->mul(5, 7));
    CHECK((a - a).value() == 0);
    CHECK((a / a).value() == 1);
    CHECK((-a + a).value() == 0);
    CHECK(a.frobenius(3) == a.pow(3));
    CHECK_THROWS(a + FieldElement(G, 1));
    CHECK_THROWS(FieldElement(F, 9));
    CHECK_THROWS(FieldElement(F, 0).inv());
}

TEST_CASE("irreducibility test against brute force") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::uint32_t deg = 1; deg <= 4; ++deg) {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < deg; ++i) count *= p;
            for (std::uint64_t code = 0; code < count; ++code) {
                std::vector<std::uint32_t> f(deg + 1, 0);
                std::uint64_t c = code;
                for (std::uint32_t i = 0; i < deg; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
                f[deg] = 1;
                REQUIRE(is_irreducible_mod_p(f, p) == oracle::NaiveField::irreducible(f, p));
            }
        }
    }
}

TEST_CASE("invalid orders are rejected") {
    CHECK_THROWS(field_of_order(6));
    CHECK_THROWS(field_of_order(1));
    CHECK_THROWS(field_of_order(0));
    CHECK_THROWS(FieldContext::make(4, 2));
    CHECK_THROWS(FieldContext::make(2, 17));
    CHECK(is_prime(65537));
    CHECK_FALSE(is_prime(65535));
    CHECK(field_of_order(16).get() == field_of_order(16).get());
}

}
