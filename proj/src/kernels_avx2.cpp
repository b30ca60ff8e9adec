// AVX2 variant of the bulk scorer: 8 codes per iteration. Compiled with
// -mavx2 in its own translation unit; callers must check cpu_supports_avx2().

#include "mastermind/kernels.hpp"

#if defined(MASTERMIND_HAVE_AVX2_KERNEL)

#include <immintrin.h>

namespace mastermind::kernels {

namespace {

// per-byte popcount via nibble lookup
inline __m256i popcount_bytes(__m256i v)
{
    const __m256i lut = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0F);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                           _mm256_shuffle_epi8(lut, hi));
}

// per-32-bit-lane popcount
inline __m256i popcount_u32(__m256i v)
{
    __m256i bytes = popcount_bytes(v);
    __m256i sums16 = _mm256_maddubs_epi16(bytes, _mm256_set1_epi8(1));
    return _mm256_madd_epi16(sums16, _mm256_set1_epi16(1));
}

// per-64-bit-lane popcount (result in the low 16 bits of each lane)
inline __m256i popcount_u64(__m256i v)
{
    return _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256());
}

} // namespace

void score_many_avx2(const PackedGuess& guess,
                     std::span<const std::uint32_t> positions,
                     std::span<const std::uint64_t> tallies,
                     std::span<std::uint8_t> out)
{
    const __m256i gp = _mm256_set1_epi32(static_cast<int>(guess.positions));
    const __m256i gt = _mm256_set1_epi64x(static_cast<long long>(guess.tally));
    const __m256i nibble_mask =
        _mm256_set1_epi32(static_cast<int>(guess.low_nibble_mask));
    const __m256i length = _mm256_set1_epi32(guess.length);
    const __m256i one = _mm256_set1_epi32(1);
    const __m256i interleave = _mm256_setr_epi32(0, 2, 4, 6, 1, 3, 5, 7);
    const __m256i gather_low_bytes = _mm256_setr_epi8(
        0, 4, 8, 12, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
        0, 4, 8, 12, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1);

    std::size_t i = 0;
    const std::size_t n = positions.size();
    for (; i + 8 <= n; i += 8) {
        // whites: count zero nibbles of xor over the live positions
        __m256i pos = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(positions.data() + i));
        __m256i x = _mm256_xor_si256(pos, gp);
        __m256i nz = _mm256_or_si256(
            _mm256_or_si256(x, _mm256_srli_epi32(x, 1)),
            _mm256_or_si256(_mm256_srli_epi32(x, 2), _mm256_srli_epi32(x, 3)));
        nz = _mm256_and_si256(nz, nibble_mask);
        __m256i whites = _mm256_sub_epi32(length, popcount_u32(nz));

        // total matches: popcount of tally intersection, 4 + 4 codes
        __m256i t0 = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(tallies.data() + i));
        __m256i t1 = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(tallies.data() + i + 4));
        __m256i ab0 = popcount_u64(_mm256_and_si256(t0, gt));
        __m256i ab1 = popcount_u64(_mm256_and_si256(t1, gt));
        __m256i ab = _mm256_or_si256(ab0, _mm256_slli_epi64(ab1, 32));
        ab = _mm256_permutevar8x32_epi32(ab, interleave);

        // ordinal = ab*(ab+1)/2 + whites
        __m256i tri = _mm256_srli_epi32(
            _mm256_mullo_epi32(ab, _mm256_add_epi32(ab, one)), 1);
        __m256i ord = _mm256_add_epi32(tri, whites);

        // pack the eight 32-bit ordinals down to bytes
        __m256i bytes = _mm256_shuffle_epi8(ord, gather_low_bytes);
        bytes = _mm256_permutevar8x32_epi32(
            bytes, _mm256_setr_epi32(0, 4, 0, 0, 0, 0, 0, 0));
        _mm_storel_epi64(reinterpret_cast<__m128i*>(out.data() + i),
                         _mm256_castsi256_si128(bytes));
    }

    if (i < n)
        score_many_scalar(guess, positions.subspan(i), tallies.subspan(i),
                          out.subspan(i));
}

} // namespace mastermind::kernels

#endif // MASTERMIND_HAVE_AVX2_KERNEL
