#include "mastermind/game.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mastermind {

GameConfig::GameConfig(std::size_t positions, std::string_view palette_letters,
                       std::optional<int> max_rows)
    : positions_(positions), colors_(palette_letters.size()), max_rows_(max_rows)
{
    if (positions < 1 || positions > kMaxPositions)
        throw std::invalid_argument("positions must be between 1 and " +
                                    std::to_string(kMaxPositions));
    if (colors_ < 1 || colors_ > kMaxColors)
        throw std::invalid_argument("palette must have between 1 and " +
                                    std::to_string(kMaxColors) + " colors");
    for (std::size_t i = 0; i < colors_; ++i) {
        char c = palette_letters[i];
        for (std::size_t j = 0; j < i; ++j)
            if (letters_[j] == c)
                throw std::invalid_argument(std::string("duplicate palette letter '") + c + "'");
        letters_[i] = c;
    }
    if (max_rows_ && *max_rows_ < 1)
        throw std::invalid_argument("max_rows must be positive");
}

GameConfig GameConfig::with_colors(std::size_t positions, std::size_t colors,
                                   std::optional<int> max_rows)
{
    if (colors < 1 || colors > kMaxColors)
        throw std::invalid_argument("colors must be between 1 and " +
                                    std::to_string(kMaxColors));
    return GameConfig(positions, kDefaultPaletteLetters.substr(0, colors), max_rows);
}

std::optional<Color> GameConfig::color_of(char letter) const noexcept
{
    for (std::size_t i = 0; i < colors_; ++i)
        if (letters_[i] == letter)
            return static_cast<Color>(i);
    return std::nullopt;
}

std::uint64_t GameConfig::code_count() const noexcept
{
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < positions_; ++i)
        n *= colors_;
    return n;
}

Code::Code(std::span<const Color> pawns, const GameConfig& config)
{
    if (pawns.size() != config.positions())
        throw std::invalid_argument("code has " + std::to_string(pawns.size()) +
                                    " pawns, config expects " +
                                    std::to_string(config.positions()));
    for (Color c : pawns)
        if (c >= config.colors())
            throw std::invalid_argument("pawn color out of palette range");
    std::copy(pawns.begin(), pawns.end(), pawns_.begin());
    size_ = static_cast<std::uint8_t>(pawns.size());
}

std::size_t Code::count(Color c) const noexcept
{
    return static_cast<std::size_t>(
        std::count(pawns_.begin(), pawns_.begin() + size_, c));
}

Feedback score(const Code& guess, const Code& secret)
{
    if (guess.size() != secret.size())
        throw std::invalid_argument("guess and secret have different lengths");

    int whites = 0;
    std::array<std::uint8_t, kMaxColors> gc{}, sc{};
    for (std::size_t i = 0; i < guess.size(); ++i) {
        if (guess[i] == secret[i])
            ++whites;
        ++gc[guess[i]];
        ++sc[secret[i]];
    }
    int total = 0;
    for (std::size_t c = 0; c < kMaxColors; ++c)
        total += std::min(gc[c], sc[c]);
    return Feedback{static_cast<std::uint8_t>(whites),
                    static_cast<std::uint8_t>(total - whites)};
}

bool consistent(const Code& candidate, std::span<const HistoryEntry> history)
{
    for (const HistoryEntry& entry : history)
        if (score(entry.guess, candidate) != entry.feedback)
            return false;
    return true;
}

Code code_from_string(const GameConfig& config, std::string_view text)
{
    std::array<Color, kMaxPositions> pawns{};
    std::size_t n = 0;
    for (char ch : text) {
        if (ch == ' ' || ch == '\t')
            continue;
        if (n >= config.positions())
            throw std::invalid_argument("too many pawns in code \"" + std::string(text) + "\"");
        auto c = config.color_of(ch);
        if (!c)
            throw std::invalid_argument(std::string("unknown color letter '") + ch + "'");
        pawns[n++] = *c;
    }
    if (n != config.positions())
        throw std::invalid_argument("code \"" + std::string(text) + "\" has " +
                                    std::to_string(n) + " pawns, expected " +
                                    std::to_string(config.positions()));
    return Code({pawns.data(), n}, config);
}

std::string to_string(const GameConfig& config, const Code& code)
{
    std::string out;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i) out += ' ';
        out += config.letter(code[i]);
    }
    return out;
}

std::string to_string(const Feedback& feedback)
{
    return std::to_string(feedback.whites) + "W " +
           std::to_string(feedback.blacks) + "B";
}

std::string pin_glyphs(const Feedback& feedback)
{
    std::string out;
    for (int i = 0; i < feedback.whites; ++i) {
        if (!out.empty()) out += ' ';
        out += 'o';
    }
    for (int i = 0; i < feedback.blacks; ++i) {
        if (!out.empty()) out += ' ';
        out += "●";
    }
    return out;
}

} // namespace mastermind
