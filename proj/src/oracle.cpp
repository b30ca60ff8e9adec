#include "mastermind/oracle.hpp"

#include <bit>
#include <cmath>
#include <vector>

#include "mastermind/codespace.hpp"
#include "mastermind/kernels.hpp"

namespace mastermind {

std::string_view to_string(Strategy strategy) noexcept
{
    switch (strategy) {
    case Strategy::hybrid: return "hybrid";
    case Strategy::filter: return "filter";
    case Strategy::entropy_greedy: return "entropy";
    }
    return "?";
}

std::optional<Strategy> strategy_from_string(std::string_view name) noexcept
{
    if (name == "hybrid") return Strategy::hybrid;
    if (name == "filter") return Strategy::filter;
    if (name == "entropy" || name == "entropy-greedy") return Strategy::entropy_greedy;
    return std::nullopt;
}

namespace {

// packed survivors of a history, kernel-filtered row by row
struct ConsistentSet {
    std::vector<std::uint64_t> indices;
    std::vector<std::uint32_t> positions;
    std::vector<std::uint64_t> tallies;

    std::size_t size() const noexcept { return indices.size(); }
};

ConsistentSet consistent_set(const CodeSpace& space,
                             std::span<const HistoryEntry> history)
{
    ConsistentSet set;
    set.indices.resize(space.size());
    for (std::uint64_t i = 0; i < space.size(); ++i)
        set.indices[i] = i;
    set.positions.assign(space.packed_positions().begin(),
                         space.packed_positions().end());
    set.tallies.assign(space.packed_tallies().begin(), space.packed_tallies().end());

    std::vector<std::uint8_t> ordinals;
    for (const HistoryEntry& entry : history) {
        const auto guess = kernels::PackedGuess::from(entry.guess);
        const std::uint8_t want = kernels::feedback_ordinal(entry.feedback);
        ordinals.resize(set.size());
        kernels::score_many(guess, set.positions, set.tallies, ordinals);
        std::size_t kept = 0;
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (ordinals[i] != want)
                continue;
            set.indices[kept] = set.indices[i];
            set.positions[kept] = set.positions[i];
            set.tallies[kept] = set.tallies[i];
            ++kept;
        }
        set.indices.resize(kept);
        set.positions.resize(kept);
        set.tallies.resize(kept);
        if (kept == 0)
            break;
    }
    return set;
}

double entropy_bits(std::span<const std::uint64_t> class_sizes, std::uint64_t total)
{
    double h = 0.0;
    for (std::uint64_t n : class_sizes) {
        if (n == 0)
            continue;
        double p = double(n) / double(total);
        h -= p * std::log2(p);
    }
    return h;
}

} // namespace

std::uint64_t count_consistent(std::span<const HistoryEntry> history,
                               const GameConfig& config)
{
    CodeSpace space(config);
    return consistent_set(space, history).size();
}

std::optional<Propagation> forced_facts_bruteforce(const PlaceModel& model,
                                                   std::span<const HistoryEntry> history,
                                                   const GameConfig& config)
{
    std::uint64_t count = 0;
    std::array<std::uint8_t, kMaxPositions> occurring{};
    for_each_code(config, [&](const Code& code) {
        if (!model.satisfied_by(code) || !consistent(code, history))
            return;
        ++count;
        for (std::size_t i = 0; i < code.size(); ++i)
            occurring[i] |= std::uint8_t(1) << code[i];
    });
    if (count == 0)
        return std::nullopt;

    const std::uint8_t palette_mask =
        static_cast<std::uint8_t>((1u << config.colors()) - 1);
    Propagation facts;
    facts.refined = model;
    facts.count = count;
    for (std::size_t i = 0; i < model.length; ++i) {
        if (std::popcount(occurring[i]) == 1)
            facts.refined.cells[i] = PlaceCell::fixed_to(
                static_cast<Color>(std::countr_zero(occurring[i])));
        else
            facts.refined.cells[i] = PlaceCell::wildcard(
                static_cast<std::uint8_t>(palette_mask & ~occurring[i]));
    }
    return facts;
}

Code filter_strategy(std::span<const HistoryEntry> history, const GameConfig& config)
{
    CodeSpace space(config);
    ConsistentSet set = consistent_set(space, history);
    if (set.size() == 0)
        throw ContradictoryHistoryError(
            "no code is consistent with the recorded feedback");
    return space[set.indices.front()];
}

double guess_entropy(const Code& guess, std::span<const HistoryEntry> history,
                     const GameConfig& config)
{
    CodeSpace space(config);
    ConsistentSet set = consistent_set(space, history);
    std::array<std::uint64_t, kernels::kMaxOrdinals> counts{};
    kernels::histogram(kernels::PackedGuess::from(guess), set.positions, set.tallies,
                       counts);
    return entropy_bits(counts, set.size());
}

Code entropy_greedy_strategy(std::span<const HistoryEntry> history,
                             const GameConfig& config)
{
    CodeSpace space(config);
    ConsistentSet set = consistent_set(space, history);
    if (set.size() == 0)
        throw ContradictoryHistoryError(
            "no code is consistent with the recorded feedback");

    std::uint64_t best_index = 0;
    double best_entropy = -1.0;
    bool best_consistent = false;
    std::size_t next_consistent = 0; // cursor into set.indices, both ascend

    std::array<std::uint64_t, kernels::kMaxOrdinals> counts{};
    for (std::uint64_t gi = 0; gi < space.size(); ++gi) {
        counts.fill(0);
        kernels::histogram(kernels::PackedGuess::from(space[gi]), set.positions,
                           set.tallies, counts);
        double h = entropy_bits(counts, set.size());

        while (next_consistent < set.size() && set.indices[next_consistent] < gi)
            ++next_consistent;
        bool is_consistent =
            next_consistent < set.size() && set.indices[next_consistent] == gi;

        if (h > best_entropy ||
            (h == best_entropy && is_consistent && !best_consistent)) {
            best_entropy = h;
            best_index = gi;
            best_consistent = is_consistent;
        }
    }
    return space[best_index];
}

} // namespace mastermind
