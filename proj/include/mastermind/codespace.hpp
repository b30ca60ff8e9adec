#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mastermind/game.hpp"

namespace mastermind {

/// All colors()^positions() codes of a config in lexicographic palette
/// order (leftmost pawn most significant), with packed words precomputed
/// for the scoring kernels.
class CodeSpace {
public:
    explicit CodeSpace(const GameConfig& config);

    const GameConfig& config() const noexcept { return config_; }
    std::uint64_t size() const noexcept { return positions_.size(); }

    Code operator[](std::uint64_t index) const;
    std::uint64_t index_of(const Code& code) const;

    std::span<const std::uint32_t> packed_positions() const noexcept { return positions_; }
    std::span<const std::uint64_t> packed_tallies() const noexcept { return tallies_; }

private:
    GameConfig config_;
    std::vector<std::uint32_t> positions_;
    std::vector<std::uint64_t> tallies_;
};

/// Visit every code in lexicographic order without materializing a space.
void for_each_code(const GameConfig& config,
                   const std::function<void(const Code&)>& visit);

} // namespace mastermind
