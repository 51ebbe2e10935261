#include <doctest.h>

#include <random>

#include "prmhull/finite_field.hpp"
#include "prmhull/kernels.hpp"

using namespace prmhull;
using prmhull::kernels::KernelSet;

namespace {

std::vector<Symbol> random_vec(std::mt19937& rng, std::uint32_t q, std::size_t n, double zero_share) {
    std::uniform_int_distribution<std::uint32_t> pick(1, q - 1);
    std::bernoulli_distribution zero(zero_share);
    std::vector<Symbol> v(n);
    for (auto& s : v) s = zero(rng) ? 0 : static_cast<Symbol>(pick(rng));
    return v;
}

// Element-by-element reference built from the field's own scalar ops.
void check_against_reference(const KernelSet& k, const Field& F, std::mt19937& rng) {
    const FieldContext& f = *F;
    for (std::size_t n : {0u, 1u, 7u, 15u, 16u, 17u, 31u, 32u, 33u, 91u, 273u}) {
        for (double z : {0.0, 0.5, 1.0}) {
            const auto src = random_vec(rng, f.size(), n, z);
            const auto base = random_vec(rng, f.size(), n, 0.3);
            for (Symbol c : {Symbol(0), Symbol(1), static_cast<Symbol>(f.size() - 1), static_cast<Symbol>(f.size() / 2)}) {
                auto dst = base;
                k.axpy(f, dst.data(), src.data(), n, c);
                for (std::size_t i = 0; i < n; ++i) REQUIRE(dst[i] == f.add(base[i], f.mul(c, src[i])));
                auto sc = base;
                k.scale(f, sc.data(), n, c);
                for (std::size_t i = 0; i < n; ++i) REQUIRE(sc[i] == f.mul(c, base[i]));
            }
            auto sum = base;
            k.add(f, sum.data(), src.data(), n);
            for (std::size_t i = 0; i < n; ++i) REQUIRE(sum[i] == f.add(base[i], src[i]));
            std::size_t nz = 0;
            for (auto s : src) nz += s != 0;
            REQUIRE(k.count_nonzero(src.data(), n) == nz);
        }
    }
}

const std::uint32_t kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 32, 49, 64, 81, 121, 125, 128, 256, 729, 4096, 65536};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar backend matches field arithmetic") {
    std::mt19937 rng(11);
    for (auto q : kOrders) {
        INFO("q = " << q);
        check_against_reference(kernels::scalar(), field_of_order(q), rng);
    }
}

TEST_CASE("avx2 backend matches the scalar backend") {
    const KernelSet* k = kernels::avx2();
    if (!k) {
        MESSAGE("avx2 backend unavailable on this CPU");
        return;
    }
    CHECK(k->isa == kernels::Isa::avx2);
    std::mt19937 rng(13);
    for (auto q : kOrders) {
        INFO("q = " << q);
        check_against_reference(*k, field_of_order(q), rng);
    }
}

TEST_CASE("dispatch") {
    const auto& a = kernels::active();
    CHECK((a.isa == kernels::Isa::scalar || a.isa == kernels::Isa::avx2));
    CHECK(kernels::isa_name(kernels::Isa::scalar) == "scalar");
    CHECK(kernels::isa_name(kernels::Isa::avx2) == "avx2");
    CHECK(kernels::scalar().isa == kernels::Isa::scalar);
}

}
