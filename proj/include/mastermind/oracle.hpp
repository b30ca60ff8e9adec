#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "mastermind/game.hpp"
#include "mastermind/reasoner.hpp"

namespace mastermind {

enum class Strategy { hybrid, filter, entropy_greedy };

std::string_view to_string(Strategy strategy) noexcept;
std::optional<Strategy> strategy_from_string(std::string_view name) noexcept;

/// |{ code : consistent(code, history) }| by full enumeration.
std::uint64_t count_consistent(std::span<const HistoryEntry> history,
                               const GameConfig& config);

/// Same contract as propagate, computed by a direct scan of every code
/// with no model-side pruning; the independent check of the propagation
/// route.
std::optional<Propagation> forced_facts_bruteforce(const PlaceModel& model,
                                                   std::span<const HistoryEntry> history,
                                                   const GameConfig& config);

/// Lexicographically first code consistent with the history.
/// Throws ContradictoryHistoryError when no code is.
Code filter_strategy(std::span<const HistoryEntry> history, const GameConfig& config);

/// Shannon entropy (bits) of the partition of the consistent set by
/// score(guess, .).
double guess_entropy(const Code& guess, std::span<const HistoryEntry> history,
                     const GameConfig& config);

/// The code maximizing guess_entropy over the whole code space; entropy
/// ties prefer consistent codes, then the lexicographically first.
/// Throws ContradictoryHistoryError when the consistent set is empty.
Code entropy_greedy_strategy(std::span<const HistoryEntry> history,
                             const GameConfig& config);

} // namespace mastermind
