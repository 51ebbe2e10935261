#include "prmhull/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define PRMHULL_HAVE_AVX2 1
#include <immintrin.h>
#endif

namespace prmhull::kernels {

#ifdef PRMHULL_HAVE_AVX2

namespace {

#define PRMHULL_AVX2 __attribute__((target("avx2")))

constexpr std::size_t kLanes = 16;  // 16-bit lanes per ymm register

PRMHULL_AVX2 inline __m256i load_table(const std::array<std::uint8_t, 16>& t) {
    return _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i*>(t.data())));
}

// Lanes hold values < 256, so the upper byte of each lane is zero and the
// shuffle maps it to table[0] == 0.
struct MulTables {
    __m256i lo;
    __m256i hi;
};

PRMHULL_AVX2 inline __m256i mul_vec(const SimdTables& t, const MulTables& m, __m256i v) {
    if (t.add == SimdTables::AddMode::xor_bits) {
        const __m256i nib = _mm256_set1_epi16(0x0F);
        const __m256i lo = _mm256_and_si256(v, nib);
        const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), nib);
        return _mm256_xor_si256(_mm256_shuffle_epi8(m.lo, lo), _mm256_shuffle_epi8(m.hi, hi));
    }
    return _mm256_shuffle_epi8(m.lo, v);
}

PRMHULL_AVX2 inline __m256i mod_p(__m256i s, __m256i p) {
    return _mm256_min_epu16(s, _mm256_sub_epi16(s, p));
}

struct AddTables {
    __m256i p;
    __m256i digit_lo;
    __m256i digit_hi;
};

PRMHULL_AVX2 inline __m256i add_vec(const SimdTables& t, const AddTables& a, __m256i x, __m256i y) {
    switch (t.add) {
        case SimdTables::AddMode::xor_bits:
            return _mm256_xor_si256(x, y);
        case SimdTables::AddMode::mod_prime:
            return mod_p(_mm256_add_epi16(x, y), a.p);
        case SimdTables::AddMode::two_digit: {
            const __m256i lo = mod_p(_mm256_add_epi16(_mm256_shuffle_epi8(a.digit_lo, x), _mm256_shuffle_epi8(a.digit_lo, y)), a.p);
            const __m256i hi = mod_p(_mm256_add_epi16(_mm256_shuffle_epi8(a.digit_hi, x), _mm256_shuffle_epi8(a.digit_hi, y)), a.p);
            return _mm256_add_epi16(lo, _mm256_mullo_epi16(hi, a.p));
        }
        case SimdTables::AddMode::none:
            break;
    }
    return x;
}

PRMHULL_AVX2 AddTables add_tables(const SimdTables& t) {
    return {_mm256_set1_epi16(t.p), load_table(t.digit_lo), load_table(t.digit_hi)};
}

PRMHULL_AVX2 void axpy_avx2(const FieldContext& f, Symbol* dst, const Symbol* src, std::size_t n, Symbol c) {
    const SimdTables& t = f.simd();
    if (t.add == SimdTables::AddMode::none) return scalar().axpy(f, dst, src, n, c);
    if (c == 0) return;
    const MulTables m{load_table(t.mul_lo[c]), load_table(t.mul_hi[c])};
    const AddTables a = add_tables(t);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), add_vec(t, a, d, mul_vec(t, m, s)));
    }
    scalar().axpy(f, dst + i, src + i, n - i, c);
}

PRMHULL_AVX2 void add_avx2(const FieldContext& f, Symbol* dst, const Symbol* src, std::size_t n) {
    const SimdTables& t = f.simd();
    if (t.add == SimdTables::AddMode::none) return scalar().add(f, dst, src, n);
    const AddTables a = add_tables(t);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), add_vec(t, a, d, s));
    }
    scalar().add(f, dst + i, src + i, n - i);
}

PRMHULL_AVX2 void scale_avx2(const FieldContext& f, Symbol* dst, std::size_t n, Symbol c) {
    const SimdTables& t = f.simd();
    if (t.add == SimdTables::AddMode::none) return scalar().scale(f, dst, n, c);
    const MulTables m{load_table(t.mul_lo[c]), load_table(t.mul_hi[c])};
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), mul_vec(t, m, d));
    }
    scalar().scale(f, dst + i, n - i, c);
}

PRMHULL_AVX2 std::size_t count_nonzero_avx2(const Symbol* v, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t count = 0, i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        const unsigned zero_bytes = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(x, zero)));
        count += kLanes - static_cast<std::size_t>(__builtin_popcount(zero_bytes)) / 2;
    }
    return count + scalar().count_nonzero(v + i, n - i);
}

const KernelSet kAvx2{Isa::avx2, axpy_avx2, add_avx2, scale_avx2, count_nonzero_avx2};

}  // namespace

const KernelSet* avx2() {
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &kAvx2 : nullptr;
}

#else

const KernelSet* avx2() { return nullptr; }

#endif

}  // namespace prmhull::kernels
