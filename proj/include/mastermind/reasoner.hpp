#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mastermind/game.hpp"
#include "mastermind/models.hpp"
#include "mastermind/transcript.hpp"

namespace mastermind {

/// The recorded feedback admits no secret (lying oracle or impossible pins).
struct ContradictoryHistoryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A guess's color-count distribution as an integer partition of the row
/// length, e.g. 2/2/1 for B B Y Y R.
struct Pattern {
    std::array<std::uint8_t, kMaxPositions> parts{};
    std::uint8_t count = 0;

    /// Parts must be positive, descending, and sum to config.positions().
    static Pattern of(std::span<const unsigned> parts, const GameConfig& config);
    static Pattern of_code(const Code& code, const GameConfig& config);

    /// Every partition of N with at most M parts, in descending
    /// lexicographic order: 5, 4/1, 3/2, 3/1/1, 2/2/1, ...
    static std::vector<Pattern> all(const GameConfig& config);

    /// The canonical code realizing this pattern: part i uses palette
    /// color i, e.g. 2/2/1 -> A A B B C.
    Code representative(const GameConfig& config) const;

    std::string to_string() const; // "2/2/1"

    auto operator<=>(const Pattern&) const = default;
};

enum class Comparator { leftmost_bias, count_based };

/// Deterministic total ordering key; smaller sorts first.
struct RankKey {
    std::uint64_t primary = 0;
    std::uint64_t secondary = 0;
    auto operator<=>(const RankKey&) const = default;
};

/// One alternative at a lattice decision point.
struct Hypothesis {
    std::variant<ColorModel, PlaceModel> model;
    RankKey rank_key;
    int origin_row = -1; // history row that spawned this alternative

    bool is_place() const noexcept { return model.index() == 1; }
    const ColorModel& as_colors() const { return std::get<ColorModel>(model); }
    const PlaceModel& as_place() const { return std::get<PlaceModel>(model); }
};

struct LatticeLevel {
    std::vector<Hypothesis> alternatives;
    std::size_t cursor = 0;

    const Hypothesis& active() const { return alternatives[cursor]; }
};

/// Ordered alternatives per decision point plus a cursor per level; the
/// active branch is the sequence of cursor-selected hypotheses.
struct HypothesisLattice {
    std::vector<LatticeLevel> levels;

    /// Chronological backtrack: advance the cursor at the deepest level
    /// with remaining alternatives, discarding deeper levels. Returns
    /// false when every level is exhausted.
    bool backtrack();
};

/// All color models a pin count opens for a row: one per attribution
/// vector (k_c) over the guess's colors with sum = whites + blacks, where
/// k_c < count(guess, c) exhausts the color at k_c and k_c = count leaves
/// it open as AtLeast. Sorted by order_models with the given comparator.
/// Throws ContradictoryHistoryError when whites + blacks exceeds the row
/// length.
std::vector<ColorModel> interpret_colors(const Code& guess, Feedback feedback,
                                         const GameConfig& config,
                                         Comparator comparator = Comparator::leftmost_bias,
                                         std::span<const HistoryEntry> history = {});

/// Sorts color models by the chosen comparator, deterministically.
///
/// leftmost_bias mirrors the player's left-to-right preference: fewer
/// doubled-up attributions first, then lexicographically by the attributed
/// colors in order of their first occurrence in the spawning guess (the
/// last history row's, when present).
///
/// count_based sorts by denotation size intersected with the
/// history-consistent codes, descending, with the leftmost key as tie-break.
std::vector<ColorModel> order_models(std::vector<ColorModel> models,
                                     std::span<const HistoryEntry> history,
                                     Comparator comparator, const GameConfig& config);

/// The rank key order_models sorts by (exposed for lattice bookkeeping).
RankKey model_rank_key(const ColorModel& model, const Code* guess,
                       std::span<const HistoryEntry> history,
                       Comparator comparator, const GameConfig& config);

/// Place models a row opens once the colors are fully exhausted: one per
/// position subset of size `whites` whose fixed cells keep the color
/// model satisfiable and whose denotation contains a code reproducing the
/// row's feedback. Ordered by ascending position subsets (left-to-right).
/// Throws std::invalid_argument when `colors` is not fully exhausted.
std::vector<PlaceModel> interpret_places(const ColorModel& colors, const Code& guess,
                                         Feedback feedback, const GameConfig& config);

struct Propagation {
    PlaceModel refined;
    std::uint64_t count = 0; // |denotation(pm) ∩ consistent(history)|
};

/// Diagrammatic constraint propagation: intersects the model's denotation
/// with the history-consistent codes and records every forced fact --
/// cells where a single color survives become fixed, colors that never
/// occur at a cell become exclusions. nullopt is the contradiction that
/// drives backtracking.
std::optional<Propagation> propagate(const PlaceModel& model,
                                     std::span<const HistoryEntry> history,
                                     const GameConfig& config);

/// Enumerate denotation(model) in lexicographic order; visit returns
/// false to stop. Returns false when stopped early.
bool enumerate_denotation(const PlaceModel& model, const GameConfig& config,
                          const std::function<bool(const Code&)>& visit);

/// With feedback (N-2 whites, 2 blacks) the secret is the guess with one
/// pair of unequal pawns exchanged. Candidates transpose (i, j) pairs that
/// do not touch a fixed-and-matching cell of the place model, keep only
/// codes consistent with the whole history, ordered by (i, j).
/// Throws std::invalid_argument unless the last history entry is
/// (guess, (N-2, 2)).
std::vector<Code> switch_candidates(const Code& guess, const PlaceModel& model,
                                    std::span<const HistoryEntry> history,
                                    const GameConfig& config);

enum class Phase { colors, places };

/// The player's strategy: interpret pin counts as ordered color models,
/// merge across rows, switch to place models once the color multiset is
/// exhausted, propagate, and backtrack through the hypothesis lattice.
class HybridSolver {
public:
    explicit HybridSolver(GameConfig config,
                          Comparator comparator = Comparator::leftmost_bias,
                          std::ostream* trace = nullptr);

    const GameConfig& config() const noexcept { return config_; }
    Phase phase() const noexcept { return phase_; }
    const ColorModel& merged_colors() const noexcept { return merged_; }
    const HypothesisLattice& lattice() const noexcept { return lattice_; }
    std::span<const HistoryEntry> history() const noexcept { return history_; }
    bool solved() const noexcept { return solved_; }

    /// Deterministic next guess for the current state.
    Code choose_guess() const;

    /// Record a played row and update models, lattice and phase.
    /// Throws ContradictoryHistoryError when the lattice exhausts (only
    /// possible against inconsistent feedback).
    void observe(const Code& guess, Feedback feedback);

    Transcript transcript() const;

private:
    struct PlaceState {
        std::size_t level_index = 0;
        Propagation propagation;
    };

    void append_color_level(std::size_t row);
    bool settle_color_level(LatticeLevel& level, bool allow_advance);
    bool create_place_level();
    bool settle_place_level(std::size_t level_index, bool allow_advance);
    bool replay();
    void backtrack_and_rebuild();
    bool merged_complete() const;
    Code filler_guess() const;
    void trace(std::string_view event, const std::string& detail) const;

    GameConfig config_;
    Comparator comparator_;
    std::ostream* trace_ = nullptr;
    std::vector<HistoryEntry> history_;
    HypothesisLattice lattice_;
    ColorModel merged_;
    Phase phase_ = Phase::colors;
    std::optional<PlaceState> place_;
    bool solved_ = false;
};

/// Outer loop: choose, ask the oracle, observe, until (N, 0). The oracle
/// must answer score(guess, secret) for a fixed valid secret. Terminates
/// within colors^positions guesses.
Transcript solve(const std::function<Feedback(const Code&)>& oracle,
                 const GameConfig& config,
                 Comparator comparator = Comparator::leftmost_bias,
                 std::ostream* trace = nullptr);

/// Convenience wrapper: oracle backed by a known secret.
Transcript solve_secret(const Code& secret, const GameConfig& config,
                        Comparator comparator = Comparator::leftmost_bias,
                        std::ostream* trace = nullptr);

} // namespace mastermind
