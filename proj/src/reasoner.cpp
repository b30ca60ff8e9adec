#include "mastermind/reasoner.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "mastermind/codespace.hpp"

namespace mastermind {

// ---------------------------------------------------------------------------
// Pattern

Pattern Pattern::of(std::span<const unsigned> parts, const GameConfig& config)
{
    Pattern out;
    unsigned sum = 0;
    for (unsigned p : parts) {
        if (p == 0)
            throw std::invalid_argument("pattern parts must be positive");
        if (out.count && out.parts[out.count - 1] < p)
            throw std::invalid_argument("pattern parts must be descending");
        if (out.count >= config.colors())
            throw std::invalid_argument("pattern has more parts than colors");
        out.parts[out.count++] = static_cast<std::uint8_t>(p);
        sum += p;
    }
    if (sum != config.positions())
        throw std::invalid_argument("pattern parts must sum to the row length");
    return out;
}

Pattern Pattern::of_code(const Code& code, const GameConfig& config)
{
    std::array<std::uint8_t, kMaxColors> counts{};
    for (std::size_t i = 0; i < code.size(); ++i)
        ++counts[code[i]];
    std::array<unsigned, kMaxColors> parts{};
    std::size_t n = 0;
    for (std::uint8_t c : counts)
        if (c)
            parts[n++] = c;
    std::sort(parts.begin(), parts.begin() + n, std::greater<>());
    return of({parts.data(), n}, config);
}

std::vector<Pattern> Pattern::all(const GameConfig& config)
{
    std::vector<Pattern> out;
    std::array<unsigned, kMaxPositions> parts{};

    // descending-lexicographic partition enumeration: 5, 4/1, 3/2, ...
    auto recurse = [&](auto&& self, unsigned remaining, unsigned max_part,
                       std::size_t depth) -> void {
        if (remaining == 0) {
            if (depth <= config.colors())
                out.push_back(of({parts.data(), depth}, config));
            return;
        }
        if (depth >= config.colors())
            return;
        for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
            parts[depth] = p;
            self(self, remaining - p, p, depth + 1);
        }
    };
    recurse(recurse, static_cast<unsigned>(config.positions()),
            static_cast<unsigned>(config.positions()), 0);
    return out;
}

Code Pattern::representative(const GameConfig& config) const
{
    std::array<Color, kMaxPositions> pawns{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < count; ++i)
        for (std::uint8_t j = 0; j < parts[i]; ++j)
            pawns[n++] = static_cast<Color>(i);
    return Code({pawns.data(), n}, config);
}

std::string Pattern::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < count; ++i) {
        if (i) out += '/';
        out += std::to_string(parts[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Color-model interpretation and ordering

namespace {

struct GuessColor {
    Color color;
    std::uint8_t count;
};

// distinct colors of a guess in first-occurrence (left-to-right) order
std::vector<GuessColor> guess_colors(const Code& guess)
{
    std::vector<GuessColor> out;
    for (std::size_t i = 0; i < guess.size(); ++i) {
        bool seen = false;
        for (auto& gc : out)
            if (gc.color == guess[i]) {
                ++gc.count;
                seen = true;
            }
        if (!seen)
            out.push_back({guess[i], 1});
    }
    return out;
}

// The player's left-to-right preference as a single sortable word: models
// attributing pins to more distinct colors first, then lexicographically
// by the attributed colors in first-occurrence order. `attribution` is
// indexed in that first-occurrence order.
std::uint64_t leftmost_key(std::span<const std::uint8_t> attribution)
{
    unsigned total = 0, distinct = 0;
    for (std::uint8_t k : attribution) {
        total += k;
        distinct += k > 0;
    }
    std::uint64_t sequence = 0;
    int shift = 28;
    for (std::size_t rank = 0; rank < attribution.size() && shift >= 0; ++rank)
        for (std::uint8_t j = 0; j < attribution[rank] && shift >= 0; ++j, shift -= 4)
            sequence |= std::uint64_t(rank) << shift;
    for (; shift >= 0; shift -= 4)
        sequence |= std::uint64_t(0xF) << shift;
    return (std::uint64_t(total - distinct) << 32) | sequence;
}

// recover the attribution vector a model assigns to a guess's colors
std::vector<std::uint8_t> attribution_of(const ColorModel& model,
                                         std::span<const GuessColor> colors)
{
    std::vector<std::uint8_t> out;
    out.reserve(colors.size());
    for (const GuessColor& gc : colors)
        out.push_back(static_cast<std::uint8_t>(model.at(gc.color).lower()));
    return out;
}

std::uint64_t consistent_denotation_count(const ColorModel& model,
                                          std::span<const HistoryEntry> history,
                                          const GameConfig& config)
{
    std::uint64_t count = 0;
    for_each_code(config, [&](const Code& code) {
        if (model.satisfied_by(code) && consistent(code, history))
            ++count;
    });
    return count;
}

} // namespace

RankKey model_rank_key(const ColorModel& model, const Code* guess,
                       std::span<const HistoryEntry> history,
                       Comparator comparator, const GameConfig& config)
{
    std::vector<GuessColor> colors;
    if (guess) {
        colors = guess_colors(*guess);
        // constrained colors outside the guess still order deterministically
        for (std::size_t c = 0; c < config.colors(); ++c) {
            Color color = static_cast<Color>(c);
            if (model.at(color).lower() == 0)
                continue;
            if (std::none_of(colors.begin(), colors.end(),
                             [&](const GuessColor& gc) { return gc.color == color; }))
                colors.push_back({color, 0});
        }
    } else {
        for (std::size_t c = 0; c < config.colors(); ++c)
            colors.push_back({static_cast<Color>(c), 0});
    }
    std::uint64_t leftmost = leftmost_key(attribution_of(model, colors));
    if (comparator == Comparator::leftmost_bias)
        return RankKey{leftmost, 0};
    std::uint64_t count = consistent_denotation_count(model, history, config);
    return RankKey{~count, leftmost};
}

std::vector<ColorModel> order_models(std::vector<ColorModel> models,
                                     std::span<const HistoryEntry> history,
                                     Comparator comparator, const GameConfig& config)
{
    const Code* guess = history.empty() ? nullptr : &history.back().guess;
    std::vector<std::pair<RankKey, ColorModel>> keyed;
    keyed.reserve(models.size());
    for (ColorModel& m : models)
        keyed.emplace_back(model_rank_key(m, guess, history, comparator, config),
                           std::move(m));
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ColorModel> out;
    out.reserve(keyed.size());
    for (auto& [key, model] : keyed)
        out.push_back(std::move(model));
    return out;
}

std::vector<ColorModel> interpret_colors(const Code& guess, Feedback feedback,
                                         const GameConfig& config,
                                         Comparator comparator,
                                         std::span<const HistoryEntry> history)
{
    const unsigned total = unsigned(feedback.whites) + unsigned(feedback.blacks);
    if (total > config.positions())
        throw ContradictoryHistoryError("feedback " + to_string(feedback) +
                                        " exceeds the row length");

    const std::vector<GuessColor> colors = guess_colors(guess);
    std::vector<std::pair<RankKey, ColorModel>> keyed;
    std::vector<std::uint8_t> attribution(colors.size(), 0);

    auto emit = [&] {
        ColorModel model;
        for (std::size_t i = 0; i < colors.size(); ++i) {
            if (attribution[i] < colors[i].count)
                model.set(colors[i].color, CountConstraint::exactly(attribution[i]));
            else
                model.set(colors[i].color, CountConstraint::at_least(attribution[i]));
        }
        RankKey key{leftmost_key(attribution), 0};
        if (comparator == Comparator::count_based)
            key = RankKey{~consistent_denotation_count(model, history, config),
                          key.primary};
        keyed.emplace_back(key, std::move(model));
    };

    auto recurse = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
        if (i == colors.size()) {
            if (remaining == 0)
                emit();
            return;
        }
        for (unsigned k = 0; k <= std::min<unsigned>(colors[i].count, remaining); ++k) {
            attribution[i] = static_cast<std::uint8_t>(k);
            self(self, i + 1, remaining - k);
        }
        attribution[i] = 0;
    };
    recurse(recurse, 0, total);

    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ColorModel> out;
    out.reserve(keyed.size());
    for (auto& [key, model] : keyed)
        out.push_back(std::move(model));
    return out;
}

// ---------------------------------------------------------------------------
// Place-model interpretation, denotation enumeration, propagation

bool enumerate_denotation(const PlaceModel& model, const GameConfig& config,
                          const std::function<bool(const Code&)>& visit)
{
    const std::size_t n = model.length;
    const std::size_t m = config.colors();
    std::array<unsigned, kMaxColors> lo{}, hi{}, used{};
    unsigned need = 0; // sum of unmet lower bounds
    for (std::size_t c = 0; c < m; ++c) {
        lo[c] = model.colors.at(static_cast<Color>(c)).lower();
        hi[c] = model.colors.at(static_cast<Color>(c)).upper(static_cast<unsigned>(n));
        need += lo[c];
    }
    if (need > n)
        return true; // empty denotation

    std::array<Color, kMaxPositions> pawns{};
    auto recurse = [&](auto&& self, std::size_t i) -> bool {
        if (i == n)
            return visit(Code({pawns.data(), n}, config));
        const std::size_t slots_left = n - i - 1;
        for (std::size_t c = 0; c < m; ++c) {
            Color color = static_cast<Color>(c);
            if (!model.cell(i).admits(color) || used[c] >= hi[c])
                continue;
            const bool met = used[c] >= lo[c];
            if (!met ? need - 1 > slots_left : need > slots_left)
                continue;
            ++used[c];
            if (!met)
                --need;
            pawns[i] = color;
            bool keep_going = self(self, i + 1);
            --used[c];
            if (!met)
                ++need;
            if (!keep_going)
                return false;
        }
        return true;
    };
    return recurse(recurse, 0);
}

std::vector<PlaceModel> interpret_places(const ColorModel& colors, const Code& guess,
                                         Feedback feedback, const GameConfig& config)
{
    const std::size_t n = config.positions();
    unsigned sum = 0;
    for (std::size_t c = 0; c < config.colors(); ++c) {
        const CountConstraint& cc = colors.at(static_cast<Color>(c));
        if (cc.kind != CountConstraint::Kind::exactly)
            throw std::invalid_argument(
                "interpret_places requires a fully exhausted color model");
        sum += cc.count;
    }
    if (sum != n)
        throw std::invalid_argument(
            "interpret_places requires color counts summing to the row length");

    std::vector<PlaceModel> out;
    const unsigned whites = feedback.whites;

    // position subsets of size `whites`, lexicographically ascending
    std::array<std::size_t, kMaxPositions> subset{};
    for (unsigned i = 0; i < whites; ++i)
        subset[i] = i;
    while (true) {
        std::array<unsigned, kMaxColors> fixed_counts{};
        for (unsigned i = 0; i < whites; ++i)
            ++fixed_counts[guess[subset[i]]];
        bool satisfiable = true;
        for (std::size_t c = 0; c < config.colors(); ++c)
            if (fixed_counts[c] > colors.at(static_cast<Color>(c)).count)
                satisfiable = false;

        if (satisfiable) {
            PlaceModel pm = PlaceModel::all_wildcards(config, colors);
            for (unsigned i = 0; i < whites; ++i)
                pm.cells[subset[i]] = PlaceCell::fixed_to(guess[subset[i]]);
            // the row's own feedback must remain reachable inside the model
            bool viable = false;
            enumerate_denotation(pm, config, [&](const Code& code) {
                if (score(guess, code) == feedback) {
                    viable = true;
                    return false;
                }
                return true;
            });
            if (viable)
                out.push_back(std::move(pm));
        }

        // next combination
        if (whites == 0)
            break;
        std::size_t i = whites;
        while (i-- > 0) {
            if (subset[i] + (whites - i) < n) {
                ++subset[i];
                for (std::size_t j = i + 1; j < whites; ++j)
                    subset[j] = subset[j - 1] + 1;
                break;
            }
            if (i == 0)
                return out;
        }
    }
    return out;
}

std::optional<Propagation> propagate(const PlaceModel& model,
                                     std::span<const HistoryEntry> history,
                                     const GameConfig& config)
{
    std::uint64_t count = 0;
    std::array<std::uint8_t, kMaxPositions> occurring{};
    enumerate_denotation(model, config, [&](const Code& code) {
        if (consistent(code, history)) {
            ++count;
            for (std::size_t i = 0; i < code.size(); ++i)
                occurring[i] |= std::uint8_t(1) << code[i];
        }
        return true;
    });
    if (count == 0)
        return std::nullopt;

    const std::uint8_t palette_mask =
        static_cast<std::uint8_t>((1u << config.colors()) - 1);
    Propagation prop;
    prop.refined = model;
    prop.count = count;
    for (std::size_t i = 0; i < model.length; ++i) {
        if (std::popcount(occurring[i]) == 1)
            prop.refined.cells[i] = PlaceCell::fixed_to(
                static_cast<Color>(std::countr_zero(occurring[i])));
        else
            prop.refined.cells[i] =
                PlaceCell::wildcard(static_cast<std::uint8_t>(palette_mask & ~occurring[i]));
    }
    return prop;
}

std::vector<Code> switch_candidates(const Code& guess, const PlaceModel& model,
                                    std::span<const HistoryEntry> history,
                                    const GameConfig& config)
{
    const std::size_t n = config.positions();
    const Feedback expected{static_cast<std::uint8_t>(n - 2), 2};
    if (history.empty() || !(history.back().guess == guess) ||
        history.back().feedback != expected)
        throw std::invalid_argument(
            "switch_candidates requires the last row to be (guess, (N-2, 2))");

    auto pinned = [&](std::size_t i) {
        return model.cell(i).fixed && model.cell(i).color == guess[i];
    };

    std::vector<Code> out;
    std::array<Color, kMaxPositions> pawns{};
    std::copy(guess.pawns().begin(), guess.pawns().end(), pawns.begin());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (guess[i] == guess[j] || pinned(i) || pinned(j))
                continue;
            std::swap(pawns[i], pawns[j]);
            Code candidate({pawns.data(), n}, config);
            if (consistent(candidate, history))
                out.push_back(candidate);
            std::swap(pawns[i], pawns[j]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lattice and solver

bool HypothesisLattice::backtrack()
{
    while (!levels.empty()) {
        LatticeLevel& deepest = levels.back();
        if (deepest.cursor + 1 < deepest.alternatives.size()) {
            ++deepest.cursor;
            return true;
        }
        levels.pop_back();
    }
    return false;
}

HybridSolver::HybridSolver(GameConfig config, Comparator comparator,
                           std::ostream* trace)
    : config_(std::move(config)), comparator_(comparator), trace_(trace)
{
}

void HybridSolver::trace(std::string_view event, const std::string& detail) const
{
    if (trace_)
        *trace_ << event << ' ' << detail << '\n';
}

bool HybridSolver::merged_complete() const
{
    unsigned sum = 0;
    for (std::size_t c = 0; c < config_.colors(); ++c) {
        const CountConstraint& cc = merged_.at(static_cast<Color>(c));
        if (cc.kind != CountConstraint::Kind::exactly)
            return false;
        sum += cc.count;
    }
    return sum == config_.positions();
}

void HybridSolver::append_color_level(std::size_t row)
{
    const HistoryEntry& entry = history_[row];
    auto models = interpret_colors(entry.guess, entry.feedback, config_, comparator_,
                                   history_);
    LatticeLevel level;
    std::string rendered;
    for (ColorModel& model : models) {
        if (!rendered.empty())
            rendered += " < ";
        rendered += to_string(config_, model);
        RankKey key = model_rank_key(model, &entry.guess, history_, comparator_, config_);
        level.alternatives.push_back(
            Hypothesis{std::move(model), key, static_cast<int>(row)});
    }
    trace("interpret", "row " + std::to_string(row + 1) + ": " + rendered);
    lattice_.levels.push_back(std::move(level));
}

bool HybridSolver::settle_color_level(LatticeLevel& level, bool allow_advance)
{
    if (level.alternatives.empty())
        return false;
    while (true) {
        const ColorModel& candidate = level.active().as_colors();
        auto merged = merge(candidate, merged_, config_);
        if (merged) {
            merged_ = *merged;
            trace("merge", to_string(config_, candidate) + " -> " +
                               to_string(config_, merged_));
            return true;
        }
        trace("contradiction", "merge of " + to_string(config_, candidate));
        if (!allow_advance || level.cursor + 1 >= level.alternatives.size())
            return false;
        ++level.cursor;
    }
}

bool HybridSolver::create_place_level()
{
    auto models = interpret_places(merged_, history_[0].guess, history_[0].feedback,
                                   config_);
    LatticeLevel level;
    std::string rendered;
    std::uint64_t rank = 0;
    for (PlaceModel& pm : models) {
        if (!rendered.empty())
            rendered += " < ";
        rendered += cells_to_string(config_, pm);
        level.alternatives.push_back(Hypothesis{std::move(pm), RankKey{rank++, 0}, 0});
    }
    trace("place-models", rendered.empty() ? "none" : rendered);
    lattice_.levels.push_back(std::move(level));
    return settle_place_level(lattice_.levels.size() - 1, true);
}

bool HybridSolver::settle_place_level(std::size_t level_index, bool allow_advance)
{
    LatticeLevel& level = lattice_.levels[level_index];
    if (level.alternatives.empty())
        return false;
    while (true) {
        const PlaceModel& pm = level.active().as_place();
        auto prop = propagate(pm, history_, config_);
        if (prop) {
            trace("propagate", cells_to_string(config_, pm) + " -> " +
                                   cells_to_string(config_, prop->refined) +
                                   " count=" + std::to_string(prop->count));
            phase_ = Phase::places;
            place_ = PlaceState{level_index, std::move(*prop)};
            return true;
        }
        trace("contradiction", cells_to_string(config_, pm));
        if (!allow_advance || level.cursor + 1 >= level.alternatives.size())
            return false;
        ++level.cursor;
    }
}

bool HybridSolver::replay()
{
    merged_ = ColorModel{};
    phase_ = Phase::colors;
    place_.reset();
    std::size_t rows_covered = 0;

    for (std::size_t i = 0; i < lattice_.levels.size(); ++i) {
        const bool last = i + 1 == lattice_.levels.size();
        LatticeLevel& level = lattice_.levels[i];
        if (level.alternatives.empty())
            return false;
        if (level.alternatives.front().is_place()) {
            if (!merged_complete())
                return false;
            if (!settle_place_level(i, last))
                return false;
        } else {
            if (!settle_color_level(level, last))
                return false;
            ++rows_covered;
        }
    }

    // recreate levels dropped by the backtrack, in chronological order
    while (rows_covered < history_.size() ||
           (phase_ == Phase::colors && merged_complete())) {
        if (phase_ == Phase::colors && merged_complete()) {
            if (!create_place_level())
                return false;
            continue;
        }
        append_color_level(rows_covered);
        if (!settle_color_level(lattice_.levels.back(), true))
            return false;
        ++rows_covered;
    }
    return true;
}

void HybridSolver::backtrack_and_rebuild()
{
    while (true) {
        if (!lattice_.backtrack())
            throw ContradictoryHistoryError(
                "hypothesis lattice exhausted: the recorded feedback admits no secret");
        trace("backtrack",
              "level " + std::to_string(lattice_.levels.size()) + " cursor " +
                  std::to_string(lattice_.levels.back().cursor));
        if (replay())
            return;
    }
}

void HybridSolver::observe(const Code& guess, Feedback feedback)
{
    if (solved_)
        throw std::logic_error("game already won");
    if (guess.size() != config_.positions())
        throw std::invalid_argument("guess length does not match the config");
    if (unsigned(feedback.whites) + unsigned(feedback.blacks) > config_.positions())
        throw std::invalid_argument("feedback exceeds the row length");

    trace("guess", to_string(config_, guess) + " | " + to_string(feedback));
    history_.push_back(HistoryEntry{guess, feedback});
    if (feedback.is_win(config_)) {
        solved_ = true;
        return;
    }

    bool ok;
    if (phase_ == Phase::colors) {
        append_color_level(history_.size() - 1);
        ok = settle_color_level(lattice_.levels.back(), true);
        if (ok && merged_complete())
            ok = create_place_level();
    } else {
        append_color_level(history_.size() - 1);
        ok = settle_color_level(lattice_.levels.back(), true);
        if (ok)
            ok = settle_place_level(place_->level_index, false);
    }
    if (!ok)
        backtrack_and_rebuild();
}

Code HybridSolver::choose_guess() const
{
    if (solved_)
        throw std::logic_error("game already won");
    const std::size_t n = config_.positions();

    if (history_.empty()) {
        // the player's favorite opening: a 2/2/1-style distribution over
        // the first palette colors (A A B B C at N = 5)
        std::array<Color, kMaxPositions> pawns{};
        for (std::size_t i = 0; i < n; ++i)
            pawns[i] = static_cast<Color>(
                std::min<std::size_t>(i / 2, config_.colors() - 1));
        return Code({pawns.data(), n}, config_);
    }

    if (phase_ == Phase::places) {
        const HistoryEntry& last = history_.back();
        const Feedback switch_feedback{static_cast<std::uint8_t>(n - 2), 2};
        if (n >= 2 && last.feedback == switch_feedback) {
            auto candidates = switch_candidates(last.guess, place_->propagation.refined,
                                                history_, config_);
            if (!candidates.empty()) {
                std::string rendered;
                for (const Code& c : candidates) {
                    if (!rendered.empty())
                        rendered += ", ";
                    rendered += to_string(config_, c);
                }
                trace("switch", rendered);
                return candidates.front();
            }
        }
        const PlaceModel& active =
            lattice_.levels[place_->level_index].active().as_place();
        std::optional<Code> first;
        enumerate_denotation(active, config_, [&](const Code& code) {
            if (consistent(code, history_)) {
                first = code;
                return false;
            }
            return true;
        });
        if (!first)
            throw std::logic_error("active place model lost its denotation");
        return *first;
    }

    return filler_guess();
}

Code HybridSolver::filler_guess() const
{
    using Kind = CountConstraint::Kind;
    const std::size_t n = config_.positions();
    const std::size_t m = config_.colors();

    std::array<unsigned, kMaxColors> tested{};
    std::array<std::uint8_t, kMaxColors> seen_at{};
    for (const HistoryEntry& entry : history_)
        for (std::size_t i = 0; i < n; ++i) {
            ++tested[entry.guess[i]];
            seen_at[entry.guess[i]] |= std::uint8_t(1) << i;
        }

    std::array<bool, kMaxPositions> filled{};
    std::array<Color, kMaxPositions> pawns{};

    // re-place hypothesized (AtLeast) colors at positions they have not
    // occupied yet
    for (std::size_t c = 0; c < m; ++c) {
        Color color = static_cast<Color>(c);
        if (merged_.at(color).kind != Kind::at_least)
            continue;
        unsigned copies = merged_.at(color).count;
        for (int pass = 0; pass < 2 && copies > 0; ++pass)
            for (std::size_t p = 0; p < n && copies > 0; ++p) {
                if (filled[p])
                    continue;
                bool fresh = !(seen_at[c] & (std::uint8_t(1) << p));
                if (pass == 0 && !fresh)
                    continue;
                filled[p] = true;
                pawns[p] = color;
                --copies;
            }
    }

    // least-tested color whose count is still open fills the rest
    std::optional<Color> filler;
    for (std::size_t c = 0; c < m; ++c) {
        Color color = static_cast<Color>(c);
        if (merged_.at(color).kind == Kind::exactly)
            continue;
        if (!filler || tested[c] < tested[*filler])
            filler = color;
    }
    bool any_empty = std::find(filled.begin(), filled.begin() + n, false) !=
                     filled.begin() + n;
    if (any_empty && filler)
        for (std::size_t p = 0; p < n; ++p)
            if (!filled[p])
                pawns[p] = *filler;

    Code guess({pawns.data(), n}, config_);

    // a repeated probe gains nothing; fall back to the first code still
    // consistent with everything, which always makes progress
    bool repeated = !filler && any_empty;
    for (const HistoryEntry& entry : history_)
        if (entry.guess == guess)
            repeated = true;
    if (repeated) {
        PlaceModel everything = PlaceModel::all_wildcards(config_);
        std::optional<Code> first;
        enumerate_denotation(everything, config_, [&](const Code& code) {
            if (consistent(code, history_)) {
                first = code;
                return false;
            }
            return true;
        });
        if (!first)
            throw ContradictoryHistoryError(
                "no code is consistent with the recorded feedback");
        return *first;
    }
    return guess;
}

Transcript HybridSolver::transcript() const
{
    Transcript out;
    out.entries = history_;
    if (solved_)
        out.secret = history_.back().guess;
    return out;
}

Transcript solve(const std::function<Feedback(const Code&)>& oracle,
                 const GameConfig& config, Comparator comparator,
                 std::ostream* trace)
{
    HybridSolver solver(config, comparator, trace);
    const std::uint64_t limit = config.code_count();
    for (std::uint64_t round = 0; round < limit; ++round) {
        Code guess = solver.choose_guess();
        solver.observe(guess, oracle(guess));
        if (solver.solved())
            return solver.transcript();
    }
    throw ContradictoryHistoryError(
        "solver exceeded the code-space bound without winning");
}

Transcript solve_secret(const Code& secret, const GameConfig& config,
                        Comparator comparator, std::ostream* trace)
{
    return solve([&](const Code& guess) { return score(guess, secret); }, config,
                 comparator, trace);
}

} // namespace mastermind
