#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace mastermind {

/// Hard bounds of the packed code representation used by the scoring
/// kernels: positions fit one nibble per pawn in a 32-bit word, color
/// tallies one 8-bit unary group per color in a 64-bit word.
inline constexpr std::size_t kMaxPositions = 8;
inline constexpr std::size_t kMaxColors = 8;

/// Index into a GameConfig palette.
using Color = std::uint8_t;

inline constexpr std::string_view kDefaultPaletteLetters = "BYRGOPCM";

/// Board shape: pawns per row, the ordered color palette (each color a
/// distinct single letter), and an optional game-mode row limit.
class GameConfig {
public:
    /// Classic super-Mastermind board: 5 positions, 8 colors.
    GameConfig() : GameConfig(5, kDefaultPaletteLetters) {}

    /// Throws std::invalid_argument on out-of-range sizes or duplicate
    /// palette letters.
    GameConfig(std::size_t positions, std::string_view palette_letters,
               std::optional<int> max_rows = std::nullopt);

    /// Convenience: the first `colors` letters of the default palette.
    static GameConfig with_colors(std::size_t positions, std::size_t colors,
                                  std::optional<int> max_rows = std::nullopt);

    std::size_t positions() const noexcept { return positions_; }
    std::size_t colors() const noexcept { return colors_; }
    char letter(Color c) const { return letters_[c]; }
    std::optional<Color> color_of(char letter) const noexcept;
    std::optional<int> max_rows() const noexcept { return max_rows_; }

    /// colors() ^ positions(); at most 8^8.
    std::uint64_t code_count() const noexcept;

    bool operator==(const GameConfig&) const = default;

private:
    std::size_t positions_;
    std::size_t colors_;
    std::array<char, kMaxColors> letters_{};
    std::optional<int> max_rows_;
};

/// A row of pawns: a guess or the secret. Value type, cheap to copy.
class Code {
public:
    Code() = default;

    /// Validates length and palette membership against `config`.
    Code(std::span<const Color> pawns, const GameConfig& config);

    std::size_t size() const noexcept { return size_; }
    Color operator[](std::size_t i) const { return pawns_[i]; }
    std::span<const Color> pawns() const noexcept { return {pawns_.data(), size_}; }

    std::size_t count(Color c) const noexcept;

    auto operator<=>(const Code& other) const = default;

private:
    std::array<Color, kMaxPositions> pawns_{};
    std::uint8_t size_ = 0;
};

/// Pin counts for a guess against the secret. Whites are exact matches
/// (color and position), blacks additional misplaced colors -- the
/// convention here is the reverse of most physical sets.
struct Feedback {
    std::uint8_t whites = 0;
    std::uint8_t blacks = 0;

    bool is_win(const GameConfig& config) const noexcept {
        return whites == config.positions() && blacks == 0;
    }

    auto operator<=>(const Feedback&) const = default;
};

/// whites = exact matches; blacks = sum over colors of
/// min(count(guess,c), count(secret,c)) minus whites.
/// Throws std::invalid_argument if the codes have different lengths.
Feedback score(const Code& guess, const Code& secret);

struct HistoryEntry {
    Code guess;
    Feedback feedback;
};

/// True iff `candidate` reproduces every recorded feedback.
bool consistent(const Code& candidate, std::span<const HistoryEntry> history);

/// Parse "R R G Y G" (or compact "RRGYG") against the config palette.
/// Throws std::invalid_argument on unknown letters or wrong length.
Code code_from_string(const GameConfig& config, std::string_view text);

std::string to_string(const GameConfig& config, const Code& code);
std::string to_string(const Feedback& feedback);

/// The board's pin row for a feedback: 'o' per white, '●' per black.
std::string pin_glyphs(const Feedback& feedback);

} // namespace mastermind
