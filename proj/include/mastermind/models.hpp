#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mastermind/game.hpp"

namespace mastermind {

/// Constraint on how many pawns of one color the secret holds.
///
/// Exactly(k) is Johnson-Laird exhaustion, written [kC]; AtLeast(k) is the
/// unexhausted form, written kC; Exactly(0) is a "no C" exclusion.
/// AtLeast(0) normalizes to Unconstrained on construction.
struct CountConstraint {
    enum class Kind : std::uint8_t { unconstrained, at_least, exactly };

    Kind kind = Kind::unconstrained;
    std::uint8_t count = 0;

    static constexpr CountConstraint unconstrained() noexcept { return {}; }
    static constexpr CountConstraint exactly(unsigned k) noexcept
    {
        return {Kind::exactly, static_cast<std::uint8_t>(k)};
    }
    static constexpr CountConstraint at_least(unsigned k) noexcept
    {
        if (k == 0)
            return {};
        return {Kind::at_least, static_cast<std::uint8_t>(k)};
    }

    constexpr bool admits(unsigned n) const noexcept
    {
        switch (kind) {
        case Kind::exactly: return n == count;
        case Kind::at_least: return n >= count;
        default: return true;
        }
    }

    constexpr unsigned lower() const noexcept
    {
        return kind == Kind::unconstrained ? 0 : count;
    }
    constexpr unsigned upper(unsigned positions) const noexcept
    {
        return kind == Kind::exactly ? count : positions;
    }

    bool operator==(const CountConstraint&) const = default;
};

/// Mental-model constraint on the secret's color multiset: one CountConstraint per
/// palette color (colors the notation leaves unmentioned are Unconstrained).
struct ColorModel {
    std::array<CountConstraint, kMaxColors> constraints{};

    CountConstraint& at(Color c) { return constraints[c]; }
    const CountConstraint& at(Color c) const { return constraints[c]; }

    ColorModel& set(Color c, CountConstraint constraint)
    {
        constraints[c] = constraint;
        return *this;
    }

    bool satisfied_by(const Code& code) const;

    bool operator==(const ColorModel&) const = default;
};

/// No code of the config's length can satisfy the model.
bool is_empty(const ColorModel& model, const GameConfig& config);

/// Closes counts over the row length: when the lower bounds sum to N every
/// color is forced to its lower bound, and symmetrically for upper bounds.
/// Preserves the denotation exactly; idempotent; empty models unchanged.
ColorModel normalize(const ColorModel& model, const GameConfig& config);

/// Per-color constraint intersection, normalized. nullopt (Contradiction)
/// iff the intersected denotation is empty.
std::optional<ColorModel> merge(const ColorModel& a, const ColorModel& b,
                                const GameConfig& config);

/// One cell of a place model: a fixed color, or a wildcard with a set of
/// excluded colors. Fixed cells carry no exclusions.
struct PlaceCell {
    bool fixed = false;
    Color color = 0;
    std::uint8_t excluded = 0; // bitmask over palette indices

    static PlaceCell wildcard(std::uint8_t excluded_mask = 0) noexcept
    {
        return {false, 0, excluded_mask};
    }
    static PlaceCell fixed_to(Color c) noexcept { return {true, c, 0}; }

    bool admits(Color c) const noexcept
    {
        return fixed ? c == color : !(excluded & (std::uint8_t(1) << c));
    }

    bool operator==(const PlaceCell&) const = default;
};

/// Partial mental model of the row itself: per-position cells plus a
/// color-multiset constraint, read as "[- - Y - -] with the empty places
/// filled from [1Y, 2R, 2G]".
struct PlaceModel {
    std::array<PlaceCell, kMaxPositions> cells{};
    std::uint8_t length = 0;
    ColorModel colors;

    static PlaceModel all_wildcards(const GameConfig& config, ColorModel colors = {});

    PlaceCell& cell(std::size_t i) { return cells[i]; }
    const PlaceCell& cell(std::size_t i) const { return cells[i]; }

    bool satisfied_by(const Code& code) const;

    bool operator==(const PlaceModel&) const = default;
};

/// Exact size of the model's denotation, by enumeration of the code space.
std::uint64_t denotation_count(const ColorModel& model, const GameConfig& config);
std::uint64_t denotation_count(const PlaceModel& model, const GameConfig& config);

/// a is at least as specific as b: denotation(a) is a subset of
/// denotation(b). Decided by exhaustive enumeration.
template <class ModelA, class ModelB>
bool specificity_leq(const ModelA& a, const ModelB& b, const GameConfig& config);

// Display syntax follows the classic mental-model notation: exhausted
// counts bracketed, AtLeast bare, exclusions as "noC"; e.g. "[1Y] 1R noB
// noO". Wildcard exclusion sets have no classic rendering and print as
// "-{!=RG}" in the detailed form only.

std::string to_string(const GameConfig& config, const ColorModel& model);
ColorModel color_model_from_string(const GameConfig& config, std::string_view text);

/// Bare cells: "[- - Y - -]".
std::string cells_to_string(const GameConfig& config, const PlaceModel& model);
/// Cells with wildcard exclusion sets: "[-{!=R} - Y - -]".
std::string cells_to_string_detailed(const GameConfig& config, const PlaceModel& model);
/// Full form: "<cells> over <color model>".
std::string to_string(const GameConfig& config, const PlaceModel& model);
/// Parses both the bare and detailed cell forms, with or without the
/// "over <color model>" suffix.
PlaceModel place_model_from_string(const GameConfig& config, std::string_view text);

} // namespace mastermind
