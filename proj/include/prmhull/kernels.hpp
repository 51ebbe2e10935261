#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "prmhull/finite_field.hpp"

// Row kernels behind Gaussian elimination and codeword enumeration.
//
// Every operation has a scalar reference implementation.  Vector backends
// (AVX2 today) are picked at runtime from the CPU features and may be forced
// off with PRMHULL_KERNEL=scalar.  Backends must agree bit-for-bit; the
// equivalence tests in tests/test_kernels.cpp pin that.
namespace prmhull::kernels {

enum class Isa { scalar, avx2 };

struct KernelSet {
    Isa isa;
    // dst[i] += c * src[i]
    void (*axpy)(const FieldContext& f, Symbol* dst, const Symbol* src, std::size_t n, Symbol c);
    // dst[i] += src[i]
    void (*add)(const FieldContext& f, Symbol* dst, const Symbol* src, std::size_t n);
    // dst[i] *= c
    void (*scale)(const FieldContext& f, Symbol* dst, std::size_t n, Symbol c);
    std::size_t (*count_nonzero)(const Symbol* v, std::size_t n);
};

const KernelSet& scalar();
// nullptr when the backend is not compiled in or the CPU lacks it.
const KernelSet* avx2();
const KernelSet& active();

std::string_view isa_name(Isa isa);

inline void axpy(const FieldContext& f, std::span<Symbol> dst, std::span<const Symbol> src, Symbol c) {
    active().axpy(f, dst.data(), src.data(), dst.size(), c);
}
inline void add(const FieldContext& f, std::span<Symbol> dst, std::span<const Symbol> src) {
    active().add(f, dst.data(), src.data(), dst.size());
}
inline void scale(const FieldContext& f, std::span<Symbol> dst, Symbol c) {
    active().scale(f, dst.data(), dst.size(), c);
}
inline std::size_t count_nonzero(std::span<const Symbol> v) { return active().count_nonzero(v.data(), v.size()); }

}  // namespace prmhull::kernels
