#include "mastermind/codespace.hpp"

#include <stdexcept>

#include "mastermind/kernels.hpp"

namespace mastermind {

namespace {

Code code_at(const GameConfig& config, std::uint64_t index)
{
    std::array<Color, kMaxPositions> pawns{};
    const std::size_t n = config.positions();
    for (std::size_t i = n; i-- > 0;) {
        pawns[i] = static_cast<Color>(index % config.colors());
        index /= config.colors();
    }
    return Code({pawns.data(), n}, config);
}

} // namespace

CodeSpace::CodeSpace(const GameConfig& config) : config_(config)
{
    const std::uint64_t total = config.code_count();
    positions_.reserve(total);
    tallies_.reserve(total);
    for_each_code(config, [&](const Code& code) {
        positions_.push_back(kernels::pack_positions(code));
        tallies_.push_back(kernels::pack_tally(code));
    });
}

Code CodeSpace::operator[](std::uint64_t index) const
{
    if (index >= size())
        throw std::out_of_range("code index out of range");
    return code_at(config_, index);
}

std::uint64_t CodeSpace::index_of(const Code& code) const
{
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < code.size(); ++i)
        index = index * config_.colors() + code[i];
    return index;
}

void for_each_code(const GameConfig& config,
                   const std::function<void(const Code&)>& visit)
{
    std::array<Color, kMaxPositions> pawns{};
    const std::size_t n = config.positions();
    const std::size_t m = config.colors();
    while (true) {
        visit(Code({pawns.data(), n}, config));
        std::size_t i = n;
        while (true) {
            if (i == 0)
                return; // wrapped past the most significant pawn
            --i;
            if (++pawns[i] < m)
                break;
            pawns[i] = 0;
        }
    }
}

} // namespace mastermind
