#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "mastermind/game.hpp"

namespace mastermind::kernels {

// Packed code layout shared by all kernel variants:
//
//   positions word (uint32): nibble i = color of pawn i (pawn 0 in the low
//     nibble); nibbles beyond the row length are zero.
//   tally word (uint64): byte c = unary count of color c, i.e. the low
//     count(code, c) bits set. popcount(a & b) over two tally words is the
//     total number of color matches between the codes.
//
// A feedback (w, b) maps to the triangular ordinal t(w+b) + w with
// t(k) = k*(k+1)/2, the usual dense encoding for pin pairs.

inline constexpr std::size_t kMaxOrdinals =
    (kMaxPositions + 1) * (kMaxPositions + 2) / 2;

std::uint32_t pack_positions(const Code& code);
std::uint64_t pack_tally(const Code& code);

constexpr std::uint8_t feedback_ordinal(Feedback f) noexcept
{
    unsigned total = unsigned(f.whites) + unsigned(f.blacks);
    return static_cast<std::uint8_t>(total * (total + 1) / 2 + f.whites);
}

Feedback feedback_from_ordinal(std::uint8_t ordinal) noexcept;

/// One side of a bulk scoring call, precomputed from a guess.
struct PackedGuess {
    std::uint32_t positions = 0;
    std::uint64_t tally = 0;
    std::uint32_t low_nibble_mask = 0; // bit 4i set for each live position i
    std::uint8_t length = 0;

    static PackedGuess from(const Code& code);
};

/// out[i] = feedback ordinal of `guess` scored against the i-th packed code.
/// Scalar reference kernel; the ground truth for all variants.
void score_many_scalar(const PackedGuess& guess,
                       std::span<const std::uint32_t> positions,
                       std::span<const std::uint64_t> tallies,
                       std::span<std::uint8_t> out);

#if defined(__x86_64__) || defined(_M_X64)
#define MASTERMIND_HAVE_AVX2_KERNEL 1
/// AVX2 variant of score_many_scalar; byte-identical output. Only call
/// when cpu_supports_avx2() is true.
void score_many_avx2(const PackedGuess& guess,
                     std::span<const std::uint32_t> positions,
                     std::span<const std::uint64_t> tallies,
                     std::span<std::uint8_t> out);
#endif

bool cpu_supports_avx2() noexcept;

enum class Backend { scalar, avx2 };

/// Backend used by score_many(). Defaults to the best one the CPU supports.
Backend active_backend() noexcept;
std::string_view backend_name(Backend b) noexcept;

/// Force a backend (tests); nullopt restores runtime detection.
/// Throws std::invalid_argument when forcing an unsupported backend.
void set_backend(std::optional<Backend> forced);

/// Dispatched bulk scorer.
void score_many(const PackedGuess& guess,
                std::span<const std::uint32_t> positions,
                std::span<const std::uint64_t> tallies,
                std::span<std::uint8_t> out);

/// counts[ord] += number of codes scoring `ord` against the guess.
/// `counts` must hold kMaxOrdinals entries.
void histogram(const PackedGuess& guess,
               std::span<const std::uint32_t> positions,
               std::span<const std::uint64_t> tallies,
               std::span<std::uint64_t> counts);

/// Number of codes whose score against the guess equals `ordinal`.
std::uint64_t count_matching(const PackedGuess& guess, std::uint8_t ordinal,
                             std::span<const std::uint32_t> positions,
                             std::span<const std::uint64_t> tallies);

} // namespace mastermind::kernels
