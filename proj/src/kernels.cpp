#include "prmhull/kernels.hpp"

#include <cstdlib>
#include <string>

namespace prmhull::kernels {

namespace {

void axpy_scalar(const FieldContext& f, Symbol* dst, const Symbol* src, std::size_t n, Symbol c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < n; ++i)
        if (src[i] != 0) dst[i] = f.add(dst[i], f.mul(c, src[i]));
}

void add_scalar(const FieldContext& f, Symbol* dst, const Symbol* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = f.add(dst[i], src[i]);
}

void scale_scalar(const FieldContext& f, Symbol* dst, std::size_t n, Symbol c) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = f.mul(c, dst[i]);
}

std::size_t count_nonzero_scalar(const Symbol* v, std::size_t n) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) count += v[i] != 0;
    return count;
}

const KernelSet kScalar{Isa::scalar, axpy_scalar, add_scalar, scale_scalar, count_nonzero_scalar};

const KernelSet& select() {
    if (const char* env = std::getenv("PRMHULL_KERNEL"); env && std::string(env) == "scalar") return kScalar;
    if (const KernelSet* k = avx2()) return *k;
    return kScalar;
}

}  // namespace

const KernelSet& scalar() { return kScalar; }

const KernelSet& active() {
    static const KernelSet& chosen = select();
    return chosen;
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

}  // namespace prmhull::kernels
