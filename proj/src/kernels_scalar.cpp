#include "mastermind/kernels.hpp"

#include <bit>

namespace mastermind::kernels {

std::uint32_t pack_positions(const Code& code)
{
    std::uint32_t word = 0;
    for (std::size_t i = 0; i < code.size(); ++i)
        word |= std::uint32_t(code[i]) << (4 * i);
    return word;
}

std::uint64_t pack_tally(const Code& code)
{
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < code.size(); ++i) {
        Color c = code[i];
        // shift the unary group left by one and set its low bit
        std::uint64_t group = (word >> (8 * c)) & 0xFF;
        word &= ~(std::uint64_t(0xFF) << (8 * c));
        word |= ((group << 1) | 1) << (8 * c);
    }
    return word;
}

Feedback feedback_from_ordinal(std::uint8_t ordinal) noexcept
{
    unsigned total = 0;
    while ((total + 1) * (total + 2) / 2 <= ordinal)
        ++total;
    unsigned whites = ordinal - total * (total + 1) / 2;
    return Feedback{static_cast<std::uint8_t>(whites),
                    static_cast<std::uint8_t>(total - whites)};
}

PackedGuess PackedGuess::from(const Code& code)
{
    PackedGuess g;
    g.positions = pack_positions(code);
    g.tally = pack_tally(code);
    g.length = static_cast<std::uint8_t>(code.size());
    for (std::size_t i = 0; i < code.size(); ++i)
        g.low_nibble_mask |= std::uint32_t(1) << (4 * i);
    return g;
}

void score_many_scalar(const PackedGuess& guess,
                       std::span<const std::uint32_t> positions,
                       std::span<const std::uint64_t> tallies,
                       std::span<std::uint8_t> out)
{
    const std::uint32_t gp = guess.positions;
    const std::uint64_t gt = guess.tally;
    const std::uint32_t mask = guess.low_nibble_mask;
    const unsigned n = guess.length;

    for (std::size_t i = 0; i < positions.size(); ++i) {
        std::uint32_t x = positions[i] ^ gp;
        // low bit of every nonzero nibble
        std::uint32_t nz = (x | (x >> 1) | (x >> 2) | (x >> 3)) & mask;
        unsigned whites = n - unsigned(std::popcount(nz));
        unsigned total = unsigned(std::popcount(tallies[i] & gt));
        out[i] = static_cast<std::uint8_t>(total * (total + 1) / 2 + whites);
    }
}

void histogram(const PackedGuess& guess,
               std::span<const std::uint32_t> positions,
               std::span<const std::uint64_t> tallies,
               std::span<std::uint64_t> counts)
{
    constexpr std::size_t kChunk = 4096;
    std::uint8_t ords[kChunk];
    for (std::size_t base = 0; base < positions.size(); base += kChunk) {
        std::size_t len = std::min(kChunk, positions.size() - base);
        score_many(guess, positions.subspan(base, len), tallies.subspan(base, len),
                   {ords, len});
        for (std::size_t i = 0; i < len; ++i)
            ++counts[ords[i]];
    }
}

std::uint64_t count_matching(const PackedGuess& guess, std::uint8_t ordinal,
                             std::span<const std::uint32_t> positions,
                             std::span<const std::uint64_t> tallies)
{
    constexpr std::size_t kChunk = 4096;
    std::uint8_t ords[kChunk];
    std::uint64_t count = 0;
    for (std::size_t base = 0; base < positions.size(); base += kChunk) {
        std::size_t len = std::min(kChunk, positions.size() - base);
        score_many(guess, positions.subspan(base, len), tallies.subspan(base, len),
                   {ords, len});
        for (std::size_t i = 0; i < len; ++i)
            count += (ords[i] == ordinal);
    }
    return count;
}

} // namespace mastermind::kernels
