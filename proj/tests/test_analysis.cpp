#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mastermind/analysis.hpp"

using namespace mastermind;

namespace {

const PatternStats& stats_for(const std::vector<PatternStats>& table,
                              std::string_view name)
{
    for (const PatternStats& p : table)
        if (p.pattern.to_string() == name)
            return p;
    REQUIRE(false);
    return table.front();
}

} // namespace

TEST_CASE("pattern table at the default board, frozen by the exhaustive oracle")
{
    GameConfig config;
    auto table = pattern_informativeness(config);
    REQUIRE(table.size() == 7);

    for (const PatternStats& p : table) {
        std::uint64_t total = 0;
        for (auto& [feedback, count] : p.distribution)
            total += count;
        CHECK(total == 32768);
        CHECK(p.entropy_bits >= 0.0);
    }

    // frozen informativeness numbers
    struct Frozen {
        const char* name;
        double entropy;
        double expected_remaining;
    };
    for (const Frozen& f : {Frozen{"5", 1.467273742, 13385.055541992},
                            {"4/1", 2.642039614, 6268.013427734},
                            {"3/2", 2.876882519, 5412.557189941},
                            {"3/1/1", 3.062869508, 4774.990966797},
                            {"2/2/1", 3.180208372, 4358.486999512},
                            {"2/1/1/1", 3.238307837, 4283.039123535},
                            {"1/1/1/1/1", 3.231553406, 4369.729187012}}) {
        const PatternStats& p = stats_for(table, f.name);
        CHECK(p.entropy_bits == doctest::Approx(f.entropy).epsilon(1e-9));
        CHECK(p.expected_remaining ==
              doctest::Approx(f.expected_remaining).epsilon(1e-9));
    }

    // frozen entropy ranking: 2/2/1 is NOT overall maximal at 5x8
    std::vector<std::string> ranking;
    for (const PatternStats& p : table)
        ranking.push_back(p.pattern.to_string());
    CHECK(ranking == std::vector<std::string>{"2/1/1/1", "1/1/1/1/1", "2/2/1",
                                              "3/1/1", "3/2", "4/1", "5"});
}

TEST_CASE("monochrome is strictly least informative")
{
    for (GameConfig config : {GameConfig{}, GameConfig::with_colors(4, 6),
                              GameConfig::with_colors(3, 2)}) {
        auto table = pattern_informativeness(config);
        const PatternStats& mono = table.back();
        REQUIRE(mono.pattern.count == 1); // the all-one-color pattern sorts last
        for (const PatternStats& p : table) {
            if (p.pattern == mono.pattern)
                continue;
            CHECK(mono.entropy_bits < p.entropy_bits);
            CHECK(mono.expected_remaining > p.expected_remaining);
        }
        // blacks are impossible against a monochrome guess
        for (auto& [feedback, count] : mono.distribution)
            CHECK(feedback.blacks == 0);
        CHECK(mono.distribution.size() == config.positions() + 1);
    }
}

TEST_CASE("pattern entropies agree with the per-guess entropy route")
{
    GameConfig config = GameConfig::with_colors(4, 6);
    for (const PatternStats& p : pattern_informativeness(config))
        CHECK(p.entropy_bits == guess_entropy(p.representative, {}, config));
}

TEST_CASE("the player's favorite beats the flat distributions she named")
{
    GameConfig config;
    auto table = pattern_informativeness(config);
    const PatternStats& favorite = stats_for(table, "2/2/1");
    CHECK(favorite.entropy_bits > stats_for(table, "5").entropy_bits);
    CHECK(favorite.entropy_bits > stats_for(table, "4/1").entropy_bits);
    CHECK(favorite.entropy_bits > stats_for(table, "3/2").entropy_bits);
}

TEST_CASE("filter tournament solves every 4x6 secret")
{
    GameConfig config = GameConfig::with_colors(4, 6);
    TournamentStats stats =
        tournament(Strategy::filter, config, TournamentMode::all_secrets());
    CHECK(stats.games == 1296);
    CHECK(stats.mean_guesses >= 1.0);
    CHECK(stats.mean_guesses <= stats.max_guesses);
    std::uint64_t total = 0;
    for (auto& [guesses, games] : stats.histogram)
        total += games;
    CHECK(total == 1296);
}

TEST_CASE("single-color boards are solved in one guess")
{
    GameConfig config(4, "B");
    for (Strategy s : {Strategy::hybrid, Strategy::filter, Strategy::entropy_greedy}) {
        TournamentStats stats = tournament(s, config, TournamentMode::all_secrets());
        CHECK(stats.games == 1);
        CHECK(stats.max_guesses == 1);
    }
}

TEST_CASE("sampled tournaments are reproducible")
{
    GameConfig config = GameConfig::with_colors(4, 6);
    auto a = tournament(Strategy::hybrid, config, TournamentMode::sampled(1, 60));
    auto b = tournament(Strategy::hybrid, config, TournamentMode::sampled(1, 60));
    CHECK(a.games == 60);
    CHECK(a.histogram == b.histogram);
    CHECK(a.mean_guesses == b.mean_guesses);
    CHECK(a.max_guesses == b.max_guesses);

    auto c = tournament(Strategy::hybrid, config, TournamentMode::sampled(2, 60));
    CHECK(c.games == 60);
}

TEST_CASE("exhaustive runs over budget are refused with the required size")
{
    GameConfig config;
    try {
        tournament(Strategy::filter, config, TournamentMode::all_secrets(),
                   Comparator::leftmost_bias, 1000);
        FAIL("expected a refusal");
    } catch (const std::invalid_argument& e) {
        std::string message = e.what();
        CHECK(message.find("32768") != std::string::npos);
        CHECK(message.find("1000") != std::string::npos);
    }
}

TEST_CASE("strategy comparison report shape and flags")
{
    GameConfig desk = GameConfig::with_colors(4, 6);
    std::vector<GameConfig> configs{desk};
    std::vector<Strategy> strategies{Strategy::hybrid, Strategy::filter};
    ComparisonReport report = compare_strategies(
        configs, strategies, TournamentMode::sampled(1, 40));

    REQUIRE(report.sections.size() == 1);
    const auto& section = report.sections.front();
    REQUIRE(section.tournaments.size() == 2);
    CHECK(section.tournaments[0].strategy_name == "hybrid");
    CHECK(section.tournaments[1].strategy_name == "filter");
    CHECK(section.hybrid_mean_leq_filter.has_value());
    // 2/2/1 is not realizable with four pawns, so the flag stays unset
    CHECK_FALSE(section.pattern_221_entropy_maximal.has_value());
    CHECK(section.patterns.size() == 5); // partitions of 4: 4, 3/1, 2/2, 2/1/1, 1/1/1/1

    std::string text = render_report(report);
    CHECK(text.find("pattern informativeness") != std::string::npos);
    CHECK(text.find("strategy hybrid") != std::string::npos);

    std::string csv = report_csv(report);
    std::size_t rows = std::count(csv.begin(), csv.end(), '\n');
    CHECK(rows == 1 + 5 + 2); // header + pattern rows + strategy rows
    CHECK(csv.find("kind,name,positions,colors") == 0);
}

TEST_CASE("the 2/2/1 claim is reported, not asserted, at the default board")
{
    std::vector<GameConfig> configs{GameConfig{}};
    std::vector<Strategy> strategies{Strategy::filter};
    ComparisonReport report = compare_strategies(
        configs, strategies, TournamentMode::sampled(1, 3));

    REQUIRE(report.sections.size() == 1);
    const auto& section = report.sections.front();
    REQUIRE(section.pattern_221_entropy_maximal.has_value());
    // at 5x8 the flat 2/1/1/1 distribution wins on uniform-secret entropy
    CHECK_FALSE(*section.pattern_221_entropy_maximal);
    CHECK_FALSE(section.hybrid_mean_leq_filter.has_value());
}
