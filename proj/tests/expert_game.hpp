#pragma once

// The experienced player's game used throughout the tests: six rows
// against secret R R G Y G on the default 5x8 board.

#include <string_view>
#include <vector>

#include "mastermind/game.hpp"
#include "mastermind/transcript.hpp"

namespace expert_game {

inline constexpr std::string_view kTranscriptText =
    "B B Y Y R | 1W 1B\n"
    "O O B B B | 0W 0B\n"
    "R R R G G | 3W 1B\n"
    "R G R Y G | 3W 2B\n"
    "G R R Y G | 3W 2B\n"
    "R R G Y G | 5W 0B\n"
    "secret: R R G Y G\n";

inline mastermind::Transcript transcript(const mastermind::GameConfig& config)
{
    return mastermind::parse_transcript(config, kTranscriptText);
}

inline std::vector<mastermind::HistoryEntry> rows(const mastermind::GameConfig& config,
                                                  std::size_t count)
{
    auto t = transcript(config);
    return {t.entries.begin(), t.entries.begin() + count};
}

inline mastermind::Code secret(const mastermind::GameConfig& config)
{
    return mastermind::code_from_string(config, "R R G Y G");
}

} // namespace expert_game
