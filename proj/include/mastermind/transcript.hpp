#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mastermind/game.hpp"

namespace mastermind {

/// Parse failure with the 1-based line it occurred on.
struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
    int line;
};

/// An ordered game record: one line per row, oldest first, ending in an
/// optional revealed secret.
///
///     B B Y Y R | 1W 1B
///     ...
///     secret: R R G Y G
struct Transcript {
    std::vector<HistoryEntry> entries;
    std::optional<Code> secret;

    std::span<const HistoryEntry> history() const noexcept { return entries; }

    /// True iff a secret is present and every entry's feedback is
    /// score(guess, secret).
    bool validates() const;
};

/// Throws ParseError with a line number on unknown letters, wrong row
/// lengths, or malformed feedback.
Transcript parse_transcript(const GameConfig& config, std::string_view text);

std::string to_string(const GameConfig& config, const Transcript& transcript);

} // namespace mastermind
