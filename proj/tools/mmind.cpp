// mmind -- Mastermind solver and analysis tool.
//
// Exit codes: 0 success/valid, 1 validation failure, 2 usage error,
// 3 contradictory input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "mastermind/analysis.hpp"
#include "mastermind/kernels.hpp"
#include "mastermind/oracle.hpp"
#include "mastermind/reasoner.hpp"
#include "mastermind/transcript.hpp"

using namespace mastermind;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitContradiction = 3;

struct Options {
    std::size_t positions = 5;
    std::size_t colors = 8;
    int max_rows = 12; // game-mode limit; 0 disables it
    std::string comparator = "leftmost";
    std::string kernel = "auto";
    std::uint64_t seed = 1;
    bool pins = false;

    GameConfig config() const { return GameConfig::with_colors(positions, colors); }
    Comparator comparator_value() const
    {
        return comparator == "count" ? Comparator::count_based
                                     : Comparator::leftmost_bias;
    }
};

void apply_kernel_choice(const std::string& kernel)
{
    if (kernel == "scalar")
        kernels::set_backend(kernels::Backend::scalar);
    else if (kernel == "avx2")
        kernels::set_backend(kernels::Backend::avx2);
    else
        kernels::set_backend(std::nullopt);
}

int run_replay(const Options& options, const std::string& path)
{
    std::ifstream file(path);
    if (!file) {
        std::cerr << "cannot open " << path << "\n";
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();

    GameConfig config = options.config();
    Transcript transcript;
    try {
        transcript = parse_transcript(config, buffer.str());
    } catch (const ParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kExitUsage;
    }
    if (!transcript.secret) {
        std::cerr << path << ": transcript has no secret line; nothing to validate\n";
        return kExitUsage;
    }

    bool all_match = true;
    for (std::size_t i = 0; i < transcript.entries.size(); ++i) {
        const HistoryEntry& entry = transcript.entries[i];
        Feedback expected = score(entry.guess, *transcript.secret);
        bool match = expected == entry.feedback;
        all_match = all_match && match;
        std::cout << "row " << i + 1 << ": " << to_string(config, entry.guess)
                  << " | " << to_string(entry.feedback);
        if (options.pins)
            std::cout << "  (" << pin_glyphs(entry.feedback) << ")";
        std::cout << (match ? "  PASS" : "  FAIL, recomputed " + to_string(expected))
                  << "\n";
    }
    std::cout << (all_match ? "transcript valid" : "transcript invalid") << "\n";
    return all_match ? kExitOk : kExitInvalid;
}

// guesses for the non-hybrid strategies are recomputed from the history
Code strategy_guess(Strategy strategy, std::span<const HistoryEntry> history,
                    const GameConfig& config)
{
    return strategy == Strategy::filter ? filter_strategy(history, config)
                                        : entropy_greedy_strategy(history, config);
}

int run_solve(const Options& options, const std::string& secret_text,
              const std::string& strategy_name, bool verbose)
{
    GameConfig config = options.config();
    auto strategy = strategy_from_string(strategy_name);
    if (!strategy) {
        std::cerr << "unknown strategy \"" << strategy_name << "\"\n";
        return kExitUsage;
    }
    Code secret;
    try {
        secret = code_from_string(config, secret_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad secret: " << e.what() << "\n";
        return kExitUsage;
    }

    Transcript transcript;
    if (*strategy == Strategy::hybrid) {
        transcript = solve_secret(secret, config, options.comparator_value(),
                                  verbose ? &std::cerr : nullptr);
    } else {
        std::vector<HistoryEntry> history;
        while (true) {
            Code guess = strategy_guess(*strategy, history, config);
            Feedback f = score(guess, secret);
            history.push_back(HistoryEntry{guess, f});
            if (f.is_win(config))
                break;
        }
        transcript.entries = history;
        transcript.secret = secret;
    }
    std::cout << to_string(config, transcript);
    if (options.pins)
        for (const HistoryEntry& entry : transcript.entries)
            std::cout << "pins: " << pin_glyphs(entry.feedback) << "\n";
    return kExitOk;
}

std::optional<Feedback> parse_feedback_line(const std::string& line,
                                            const GameConfig& config)
{
    std::istringstream in(line);
    std::string w_token, b_token;
    if (!(in >> w_token >> b_token))
        return std::nullopt;
    std::string rest;
    if (in >> rest)
        return std::nullopt;
    auto parse_count = [](const std::string& token, char suffix) -> int {
        if (token.size() < 2 || std::toupper(token.back()) != suffix)
            return -1;
        for (std::size_t i = 0; i + 1 < token.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(token[i])))
                return -1;
        return std::stoi(token.substr(0, token.size() - 1));
    };
    int w = parse_count(w_token, 'W');
    int b = parse_count(b_token, 'B');
    if (w < 0 || b < 0 || w + b > static_cast<int>(config.positions()))
        return std::nullopt;
    return Feedback{static_cast<std::uint8_t>(w), static_cast<std::uint8_t>(b)};
}

int run_play(const Options& options, const std::string& strategy_name, bool verbose)
{
    GameConfig config = options.config();
    auto strategy = strategy_from_string(strategy_name);
    if (!strategy) {
        std::cerr << "unknown strategy \"" << strategy_name << "\"\n";
        return kExitUsage;
    }
    const std::size_t n = config.positions();

    HybridSolver solver(config, options.comparator_value(),
                        verbose ? &std::cerr : nullptr);
    std::vector<HistoryEntry> history;

    for (int row = 1; options.max_rows == 0 || row <= options.max_rows; ++row) {
        Code guess;
        try {
            guess = *strategy == Strategy::hybrid
                        ? solver.choose_guess()
                        : strategy_guess(*strategy, history, config);
        } catch (const ContradictoryHistoryError&) {
            std::cerr << "feedback history is contradictory\n";
            return kExitContradiction;
        }
        std::cout << "guess " << row << ": " << to_string(config, guess) << "\n";

        Feedback feedback{};
        while (true) {
            std::cout << "feedback? " << std::flush;
            std::string line;
            if (!std::getline(std::cin, line)) {
                std::cout << "\n";
                std::cerr << "end of input; aborting\n";
                return kExitInvalid;
            }
            auto parsed = parse_feedback_line(line, config);
            if (parsed && (parsed->whites != n - 1 || parsed->blacks != 1)) {
                feedback = *parsed;
                break;
            }
            std::cout << "  expected `<whites>W <blacks>B` with whites+blacks <= "
                      << n << " and not " << n - 1 << "W 1B (impossible); try again\n";
        }
        if (options.pins)
            std::cout << "  pins: " << pin_glyphs(feedback) << "\n";

        history.push_back(HistoryEntry{guess, feedback});
        if (feedback.is_win(config)) {
            std::cout << "solved in " << row << (row == 1 ? " guess" : " guesses")
                      << "\n";
            return kExitOk;
        }
        if (count_consistent(history, config) == 0) {
            std::cerr << "feedback history is contradictory\n";
            return kExitContradiction;
        }
        if (*strategy == Strategy::hybrid)
            solver.observe(guess, feedback);
    }
    std::cerr << "out of rows (" << options.max_rows << ")\n";
    return kExitInvalid;
}

int run_simulate(const Options& options, const std::string& strategy_name,
                 bool exhaustive, std::uint64_t samples, std::uint64_t budget,
                 bool csv)
{
    GameConfig config = options.config();
    auto strategy = strategy_from_string(strategy_name);
    if (!strategy) {
        std::cerr << "unknown strategy \"" << strategy_name << "\"\n";
        return kExitUsage;
    }
    TournamentMode mode = exhaustive ? TournamentMode::all_secrets()
                                     : TournamentMode::sampled(options.seed, samples);
    TournamentStats stats;
    try {
        stats = tournament(*strategy, config, mode, options.comparator_value(), budget);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    if (csv) {
        std::cout << tournament_csv(config, {&stats, 1});
    } else {
        std::cout << config.positions() << " positions, " << config.colors()
                  << " colors, "
                  << (exhaustive ? "all secrets"
                                 : "sampled seed=" + std::to_string(options.seed))
                  << "\n"
                  << render_tournament(stats);
    }
    return kExitOk;
}

int run_analyze(const Options& options, bool compare, std::uint64_t budget, bool csv)
{
    GameConfig config = options.config();
    if (compare) {
        TournamentMode mode = config.code_count() <= budget
                                  ? TournamentMode::all_secrets()
                                  : TournamentMode::sampled(options.seed, 200);
        std::vector<GameConfig> configs{config};
        std::vector<Strategy> strategies{Strategy::hybrid, Strategy::filter};
        ComparisonReport report =
            compare_strategies(configs, strategies, mode, options.comparator_value(),
                               budget);
        std::cout << (csv ? report_csv(report) : render_report(report));
        return kExitOk;
    }
    auto patterns = pattern_informativeness(config);
    if (csv) {
        std::cout << pattern_csv(config, patterns);
    } else {
        std::cout << render_pattern_table(config, patterns);
        bool has_221 = false;
        for (const PatternStats& p : patterns)
            has_221 = has_221 || p.pattern.to_string() == "2/2/1";
        if (has_221)
            std::cout << "  2/2/1 entropy-maximal: "
                      << (patterns.front().pattern.to_string() == "2/2/1" ? "yes" : "no")
                      << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mastermind solver: hybrid mental-model reasoning, baselines, "
                 "and analysis"};
    app.require_subcommand(1);
    app.fallthrough(); // board flags may follow the subcommand

    Options options;
    app.add_option("--positions", options.positions, "pawns per row (1-8)")
        ->capture_default_str();
    app.add_option("--colors", options.colors, "palette size (1-8)")
        ->capture_default_str();
    app.add_option("--max-rows", options.max_rows,
                   "row limit for play mode, 0 = unlimited")
        ->capture_default_str();
    app.add_option("--comparator", options.comparator, "model order: leftmost | count")
        ->check(CLI::IsMember({"leftmost", "count"}))
        ->capture_default_str();
    app.add_option("--kernel", options.kernel,
                   "scoring kernel: auto | scalar | avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
        ->capture_default_str();
    app.add_option("--seed", options.seed, "seed for sampled simulation")
        ->capture_default_str();
    app.add_flag("--pins", options.pins, "echo the o/● pin glyph rows");

    auto* replay_cmd = app.add_subcommand("replay", "validate a transcript file");
    std::string replay_path;
    replay_cmd->add_option("path", replay_path, "transcript file")->required();

    auto* solve_cmd = app.add_subcommand("solve", "solve against a known secret");
    std::string solve_secret_text, solve_strategy = "hybrid";
    bool solve_verbose = false;
    solve_cmd->add_option("--secret", solve_secret_text, "the hidden row, e.g. \"R R G Y G\"")
        ->required();
    solve_cmd->add_option("--strategy", solve_strategy, "hybrid | filter | entropy")
        ->capture_default_str();
    solve_cmd->add_flag("--verbose", solve_verbose, "stream reasoning trace to stderr");

    auto* play_cmd = app.add_subcommand("play", "solve with you reporting the pins");
    std::string play_strategy = "hybrid";
    bool play_verbose = false;
    play_cmd->add_option("--strategy", play_strategy, "hybrid | filter | entropy")
        ->capture_default_str();
    play_cmd->add_flag("--verbose", play_verbose, "stream reasoning trace to stderr");

    auto* simulate_cmd = app.add_subcommand("simulate", "tournament over many secrets");
    std::string simulate_strategy = "hybrid";
    bool simulate_exhaustive = false, simulate_csv = false;
    std::uint64_t simulate_samples = 500;
    std::uint64_t budget = kDefaultTournamentBudget;
    simulate_cmd->add_option("--strategy", simulate_strategy, "hybrid | filter | entropy")
        ->capture_default_str();
    simulate_cmd->add_flag("--exhaustive", simulate_exhaustive, "play every secret");
    simulate_cmd->add_option("-n,--samples", simulate_samples, "sampled secrets")
        ->capture_default_str();
    simulate_cmd->add_option("--budget", budget, "exhaustive game limit")
        ->capture_default_str();
    simulate_cmd->add_flag("--csv", simulate_csv, "machine-readable output");

    auto* analyze_cmd =
        app.add_subcommand("analyze", "first-guess informativeness table");
    bool analyze_compare = false, analyze_csv = false;
    analyze_cmd->add_flag("--compare-strategies", analyze_compare,
                          "also run hybrid and filter tournaments");
    analyze_cmd->add_flag("--csv", analyze_csv, "machine-readable output");
    analyze_cmd->add_option("--budget", budget, "exhaustive game limit")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        options.config(); // surface bad --positions/--colors as usage errors
        apply_kernel_choice(options.kernel);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (replay_cmd->parsed())
            return run_replay(options, replay_path);
        if (solve_cmd->parsed())
            return run_solve(options, solve_secret_text, solve_strategy, solve_verbose);
        if (play_cmd->parsed())
            return run_play(options, play_strategy, play_verbose);
        if (simulate_cmd->parsed())
            return run_simulate(options, simulate_strategy, simulate_exhaustive,
                                simulate_samples, budget, simulate_csv);
        if (analyze_cmd->parsed())
            return run_analyze(options, analyze_compare, budget, analyze_csv);
    } catch (const ContradictoryHistoryError& e) {
        std::cerr << e.what() << "\n";
        return kExitContradiction;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitUsage;
}
