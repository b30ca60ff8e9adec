#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "mastermind/codespace.hpp"
#include "mastermind/kernels.hpp"

using namespace mastermind;
namespace k = mastermind::kernels;

namespace {

Code random_code(const GameConfig& config, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pick(0, static_cast<int>(config.colors()) - 1);
    std::array<Color, kMaxPositions> pawns{};
    for (std::size_t i = 0; i < config.positions(); ++i)
        pawns[i] = static_cast<Color>(pick(rng));
    return Code({pawns.data(), config.positions()}, config);
}

} // namespace

TEST_CASE("feedback ordinals are a dense bijection")
{
    std::set<int> seen;
    for (unsigned w = 0; w <= kMaxPositions; ++w)
        for (unsigned b = 0; w + b <= kMaxPositions; ++b) {
            Feedback f{static_cast<std::uint8_t>(w), static_cast<std::uint8_t>(b)};
            std::uint8_t ord = k::feedback_ordinal(f);
            CHECK(ord < k::kMaxOrdinals);
            CHECK(k::feedback_from_ordinal(ord) == f);
            seen.insert(ord);
        }
    CHECK(seen.size() == k::kMaxOrdinals);
}

TEST_CASE("scalar kernel matches the reference scorer exhaustively at 4x6")
{
    GameConfig config = GameConfig::with_colors(4, 6);
    CodeSpace space(config);
    std::vector<std::uint8_t> ords(space.size());
    bool all_match = true;
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        Code guess = space[i];
        k::score_many_scalar(k::PackedGuess::from(guess), space.packed_positions(),
                             space.packed_tallies(), ords);
        for (std::uint64_t j = 0; j < space.size(); ++j)
            if (ords[j] != k::feedback_ordinal(score(guess, space[j])))
                all_match = false;
    }
    CHECK(all_match);
}

TEST_CASE("scalar kernel matches the reference scorer on random extreme shapes")
{
    std::mt19937_64 rng(7);
    for (auto [n, m] : {std::pair<int, int>{1, 1}, {8, 8}, {8, 1}, {1, 8}, {5, 8},
                        {7, 3}, {2, 2}}) {
        GameConfig config = GameConfig::with_colors(n, m);
        for (int round = 0; round < 200; ++round) {
            Code guess = random_code(config, rng);
            Code secret = random_code(config, rng);
            std::uint32_t pos = k::pack_positions(secret);
            std::uint64_t tal = k::pack_tally(secret);
            std::uint8_t ord = 0;
            k::score_many_scalar(k::PackedGuess::from(guess), {&pos, 1}, {&tal, 1},
                                 {&ord, 1});
            CHECK(ord == k::feedback_ordinal(score(guess, secret)));
        }
    }
}

#if defined(MASTERMIND_HAVE_AVX2_KERNEL)
TEST_CASE("avx2 kernel is byte-identical to the scalar reference")
{
    if (!k::cpu_supports_avx2()) {
        MESSAGE("avx2 not available on this CPU; skipping");
        return;
    }
    std::mt19937_64 rng(11);
    for (auto [n, m] : {std::pair<int, int>{5, 8}, {4, 6}, {8, 8}, {1, 1}, {3, 2}}) {
        GameConfig config = GameConfig::with_colors(n, m);
        // batch lengths straddling the 8-wide vector body and its tail
        for (std::size_t len : {std::size_t{1}, std::size_t{7}, std::size_t{8},
                                std::size_t{9}, std::size_t{16}, std::size_t{1000}}) {
            std::vector<std::uint32_t> pos(len);
            std::vector<std::uint64_t> tal(len);
            for (std::size_t i = 0; i < len; ++i) {
                Code c = random_code(config, rng);
                pos[i] = k::pack_positions(c);
                tal[i] = k::pack_tally(c);
            }
            Code guess = random_code(config, rng);
            auto packed = k::PackedGuess::from(guess);
            std::vector<std::uint8_t> ref(len), vec(len);
            k::score_many_scalar(packed, pos, tal, ref);
            k::score_many_avx2(packed, pos, tal, vec);
            CHECK(ref == vec);
        }
    }
}
#endif

TEST_CASE("backend dispatch can be forced and restored")
{
    k::set_backend(k::Backend::scalar);
    CHECK(k::active_backend() == k::Backend::scalar);

    GameConfig config = GameConfig::with_colors(4, 6);
    CodeSpace space(config);
    Code guess = space[123];
    std::vector<std::uint8_t> scalar_out(space.size());
    k::score_many(k::PackedGuess::from(guess), space.packed_positions(),
                  space.packed_tallies(), scalar_out);

    k::set_backend(std::nullopt);
    std::vector<std::uint8_t> auto_out(space.size());
    k::score_many(k::PackedGuess::from(guess), space.packed_positions(),
                  space.packed_tallies(), auto_out);
    CHECK(scalar_out == auto_out);

    if (!k::cpu_supports_avx2())
        CHECK_THROWS_AS(k::set_backend(k::Backend::avx2), std::invalid_argument);
    k::set_backend(std::nullopt);
}

TEST_CASE("histogram and count_matching agree with direct scoring")
{
    GameConfig config = GameConfig::with_colors(4, 6);
    CodeSpace space(config);
    Code guess = code_from_string(config, "B B Y R");
    auto packed = k::PackedGuess::from(guess);

    std::array<std::uint64_t, k::kMaxOrdinals> counts{};
    k::histogram(packed, space.packed_positions(), space.packed_tallies(), counts);

    std::array<std::uint64_t, k::kMaxOrdinals> expected{};
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        ++expected[k::feedback_ordinal(score(guess, space[i]))];
        ++total;
    }
    CHECK(total == space.size());
    CHECK(counts == expected);

    for (std::uint8_t ord : {0, 5, 9, 14}) {
        CHECK(k::count_matching(packed, ord, space.packed_positions(),
                                space.packed_tallies()) == expected[ord]);
    }
}
