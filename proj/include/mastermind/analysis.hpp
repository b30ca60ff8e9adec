#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mastermind/game.hpp"
#include "mastermind/oracle.hpp"
#include "mastermind/reasoner.hpp"

namespace mastermind {

inline constexpr std::uint64_t kDefaultTournamentBudget = 65536;

/// Feedback distribution of one color-count pattern's canonical guess over
/// every possible secret, with the two informativeness statistics.
struct PatternStats {
    Pattern pattern;
    Code representative;
    std::map<Feedback, std::uint64_t> distribution;
    double entropy_bits = 0.0;
    double expected_remaining = 0.0;
};

/// One PatternStats per integer partition of N realizable in M colors,
/// sorted by entropy descending (ties keep 5, 4/1, ... order).
std::vector<PatternStats> pattern_informativeness(const GameConfig& config);

struct TournamentMode {
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    static TournamentMode all_secrets() { return {true, 0, 0}; }
    static TournamentMode sampled(std::uint64_t seed, std::uint64_t samples)
    {
        return {false, samples, seed};
    }
};

struct TournamentStats {
    std::string strategy_name;
    std::uint64_t games = 0;
    double mean_guesses = 0.0;
    int max_guesses = 0;
    std::map<int, std::uint64_t> histogram; // guess count -> games
};

/// Plays every secret (exhaustive) or `samples` seeded secrets against a
/// strategy. Deterministic given seed; refuses exhaustive runs whose code
/// space exceeds `budget`.
TournamentStats tournament(Strategy strategy, const GameConfig& config,
                           TournamentMode mode,
                           Comparator comparator = Comparator::leftmost_bias,
                           std::uint64_t budget = kDefaultTournamentBudget);

/// Cross-tabulated tournaments and informativeness, with the two flags the
/// analysis cares about: whether 2/2/1 tops the pattern table and whether
/// the hybrid strategy's mean stays within the filter baseline's.
struct ComparisonReport {
    struct Section {
        GameConfig config;
        std::vector<PatternStats> patterns;
        std::optional<bool> pattern_221_entropy_maximal;
        std::vector<TournamentStats> tournaments;
        std::optional<bool> hybrid_mean_leq_filter;
    };
    std::vector<Section> sections;
};

ComparisonReport compare_strategies(std::span<const GameConfig> configs,
                                    std::span<const Strategy> strategies,
                                    TournamentMode mode,
                                    Comparator comparator = Comparator::leftmost_bias,
                                    std::uint64_t budget = kDefaultTournamentBudget);

// Rendering: aligned text for humans, comma-separated records (header row,
// UTF-8) for machines.

std::string render_pattern_table(const GameConfig& config,
                                 std::span<const PatternStats> patterns);
std::string render_tournament(const TournamentStats& stats);
std::string render_report(const ComparisonReport& report);

std::string pattern_csv(const GameConfig& config,
                        std::span<const PatternStats> patterns);
std::string tournament_csv(const GameConfig& config,
                           std::span<const TournamentStats> stats);
std::string report_csv(const ComparisonReport& report);

} // namespace mastermind
