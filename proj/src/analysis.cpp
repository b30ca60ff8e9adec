#include "mastermind/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mastermind/codespace.hpp"
#include "mastermind/kernels.hpp"

namespace mastermind {

std::vector<PatternStats> pattern_informativeness(const GameConfig& config)
{
    CodeSpace space(config);
    const std::uint64_t total = space.size();

    std::vector<PatternStats> out;
    for (const Pattern& pattern : Pattern::all(config)) {
        PatternStats stats;
        stats.pattern = pattern;
        stats.representative = pattern.representative(config);

        std::array<std::uint64_t, kernels::kMaxOrdinals> counts{};
        kernels::histogram(kernels::PackedGuess::from(stats.representative),
                           space.packed_positions(), space.packed_tallies(), counts);

        double entropy = 0.0, expected = 0.0;
        for (std::size_t ord = 0; ord < counts.size(); ++ord) {
            if (counts[ord] == 0)
                continue;
            stats.distribution.emplace(
                kernels::feedback_from_ordinal(static_cast<std::uint8_t>(ord)),
                counts[ord]);
            double p = double(counts[ord]) / double(total);
            entropy -= p * std::log2(p);
            expected += double(counts[ord]) * p;
        }
        stats.entropy_bits = entropy;
        stats.expected_remaining = expected;
        out.push_back(std::move(stats));
    }

    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.entropy_bits > b.entropy_bits;
    });
    return out;
}

namespace {

int play_one_game(Strategy strategy, const Code& secret, const GameConfig& config,
                  Comparator comparator, const std::optional<Code>& cached_opening)
{
    if (strategy == Strategy::hybrid) {
        Transcript t = solve_secret(secret, config, comparator);
        return static_cast<int>(t.entries.size());
    }
    std::vector<HistoryEntry> history;
    while (true) {
        Code guess;
        if (history.empty() && cached_opening)
            guess = *cached_opening;
        else
            guess = strategy == Strategy::filter
                        ? filter_strategy(history, config)
                        : entropy_greedy_strategy(history, config);
        Feedback f = score(guess, secret);
        history.push_back(HistoryEntry{guess, f});
        if (f.is_win(config))
            return static_cast<int>(history.size());
        if (history.size() > config.code_count())
            throw std::logic_error("strategy failed to terminate");
    }
}

} // namespace

TournamentStats tournament(Strategy strategy, const GameConfig& config,
                           TournamentMode mode, Comparator comparator,
                           std::uint64_t budget)
{
    CodeSpace space(config);
    if (mode.exhaustive && space.size() > budget)
        throw std::invalid_argument(
            "exhaustive tournament over " + std::to_string(space.size()) +
            " secrets exceeds the budget of " + std::to_string(budget) +
            "; raise the budget to at least " + std::to_string(space.size()) +
            " or sample");

    std::vector<std::uint64_t> secrets;
    if (mode.exhaustive) {
        secrets.resize(space.size());
        for (std::uint64_t i = 0; i < space.size(); ++i)
            secrets[i] = i;
    } else {
        std::mt19937_64 rng(mode.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
        secrets.reserve(mode.samples);
        for (std::uint64_t i = 0; i < mode.samples; ++i)
            secrets.push_back(pick(rng));
    }

    // the empty-history move is the same in every game; compute it once
    std::optional<Code> opening;
    if (strategy == Strategy::filter)
        opening = filter_strategy({}, config);
    else if (strategy == Strategy::entropy_greedy)
        opening = entropy_greedy_strategy({}, config);

    TournamentStats stats;
    stats.strategy_name = std::string(to_string(strategy));
    std::uint64_t total_guesses = 0;
    for (std::uint64_t index : secrets) {
        int guesses = play_one_game(strategy, space[index], config, comparator, opening);
        ++stats.histogram[guesses];
        total_guesses += static_cast<std::uint64_t>(guesses);
        stats.max_guesses = std::max(stats.max_guesses, guesses);
    }
    stats.games = secrets.size();
    stats.mean_guesses = stats.games ? double(total_guesses) / double(stats.games) : 0.0;
    return stats;
}

ComparisonReport compare_strategies(std::span<const GameConfig> configs,
                                    std::span<const Strategy> strategies,
                                    TournamentMode mode, Comparator comparator,
                                    std::uint64_t budget)
{
    ComparisonReport report;
    for (const GameConfig& config : configs) {
        ComparisonReport::Section section;
        section.config = config;
        section.patterns = pattern_informativeness(config);

        Pattern best = section.patterns.front().pattern;
        bool has_221 = false;
        for (const PatternStats& p : section.patterns)
            if (p.pattern.to_string() == "2/2/1")
                has_221 = true;
        if (has_221)
            section.pattern_221_entropy_maximal = best.to_string() == "2/2/1";

        std::optional<double> hybrid_mean, filter_mean;
        for (Strategy strategy : strategies) {
            TournamentStats stats = tournament(strategy, config, mode, comparator, budget);
            if (strategy == Strategy::hybrid)
                hybrid_mean = stats.mean_guesses;
            if (strategy == Strategy::filter)
                filter_mean = stats.mean_guesses;
            section.tournaments.push_back(std::move(stats));
        }
        if (hybrid_mean && filter_mean)
            section.hybrid_mean_leq_filter = *hybrid_mean <= *filter_mean;
        report.sections.push_back(std::move(section));
    }
    return report;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string format_double(double value)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    return buffer;
}

std::string config_name(const GameConfig& config)
{
    return std::to_string(config.positions()) + "x" + std::to_string(config.colors());
}

std::string histogram_field(const std::map<int, std::uint64_t>& histogram)
{
    std::string out;
    for (auto& [guesses, games] : histogram) {
        if (!out.empty())
            out += ';';
        out += std::to_string(guesses) + ":" + std::to_string(games);
    }
    return out;
}

} // namespace

std::string render_pattern_table(const GameConfig& config,
                                 std::span<const PatternStats> patterns)
{
    std::ostringstream out;
    out << "pattern informativeness (" << config_name(config) << ", "
        << config.code_count() << " secrets)\n";
    out << "  pattern      guess            entropy(bits)  expected-remaining\n";
    for (const PatternStats& p : patterns) {
        char line[128];
        std::snprintf(line, sizeof line, "  %-12s %-16s %13.6f  %18.3f\n",
                      p.pattern.to_string().c_str(),
                      to_string(config, p.representative).c_str(), p.entropy_bits,
                      p.expected_remaining);
        out << line;
    }
    return out.str();
}

std::string render_tournament(const TournamentStats& stats)
{
    std::ostringstream out;
    out << "strategy " << stats.strategy_name << ": " << stats.games
        << " games, mean " << format_double(stats.mean_guesses) << " guesses, max "
        << stats.max_guesses << "\n";
    out << "  guesses:";
    for (auto& [guesses, games] : stats.histogram)
        out << ' ' << guesses << "->" << games;
    out << "\n";
    return out.str();
}

std::string render_report(const ComparisonReport& report)
{
    std::ostringstream out;
    for (const auto& section : report.sections) {
        out << render_pattern_table(section.config, section.patterns);
        if (section.pattern_221_entropy_maximal)
            out << "  2/2/1 entropy-maximal: "
                << (*section.pattern_221_entropy_maximal ? "yes" : "no") << "\n";
        for (const TournamentStats& stats : section.tournaments)
            out << render_tournament(stats);
        if (section.hybrid_mean_leq_filter)
            out << "  hybrid mean <= filter mean: "
                << (*section.hybrid_mean_leq_filter ? "yes" : "no") << "\n";
        out << "\n";
    }
    return out.str();
}

namespace {

constexpr std::string_view kCsvHeader =
    "kind,name,positions,colors,entropy_bits,expected_remaining,"
    "games,mean_guesses,max_guesses,histogram\n";

void pattern_rows(std::string& out, const GameConfig& config,
                  std::span<const PatternStats> patterns)
{
    for (const PatternStats& p : patterns) {
        out += "pattern," + p.pattern.to_string() + "," +
               std::to_string(config.positions()) + "," +
               std::to_string(config.colors()) + "," + format_double(p.entropy_bits) +
               "," + format_double(p.expected_remaining) + ",,,,\n";
    }
}

void tournament_rows(std::string& out, const GameConfig& config,
                     std::span<const TournamentStats> stats)
{
    for (const TournamentStats& t : stats) {
        out += "strategy," + t.strategy_name + "," +
               std::to_string(config.positions()) + "," +
               std::to_string(config.colors()) + ",,," + std::to_string(t.games) +
               "," + format_double(t.mean_guesses) + "," +
               std::to_string(t.max_guesses) + "," + histogram_field(t.histogram) +
               "\n";
    }
}

} // namespace

std::string pattern_csv(const GameConfig& config,
                        std::span<const PatternStats> patterns)
{
    std::string out{kCsvHeader};
    pattern_rows(out, config, patterns);
    return out;
}

std::string tournament_csv(const GameConfig& config,
                           std::span<const TournamentStats> stats)
{
    std::string out{kCsvHeader};
    tournament_rows(out, config, stats);
    return out;
}

std::string report_csv(const ComparisonReport& report)
{
    std::string out{kCsvHeader};
    for (const auto& section : report.sections) {
        pattern_rows(out, section.config, section.patterns);
        tournament_rows(out, section.config, section.tournaments);
    }
    return out;
}

} // namespace mastermind
