#include "mastermind/transcript.hpp"

#include <charconv>
#include <sstream>

namespace mastermind {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
            ++i;
        if (i > start)
            tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

// "<int>W" / "<int>B"
std::optional<int> parse_pin_count(std::string_view token, char suffix)
{
    if (token.size() < 2 || token.back() != suffix)
        return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size() - 1, value);
    if (ec != std::errc() || ptr != token.data() + token.size() - 1 || value < 0)
        return std::nullopt;
    return value;
}

Code parse_code_tokens(const GameConfig& config,
                       std::span<const std::string_view> tokens, int line_no)
{
    if (tokens.size() != config.positions())
        throw ParseError(line_no, "row has " + std::to_string(tokens.size()) +
                                      " pawns, expected " +
                                      std::to_string(config.positions()));
    std::array<Color, kMaxPositions> pawns{};
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].size() != 1)
            throw ParseError(line_no, "bad pawn token \"" + std::string(tokens[i]) + "\"");
        auto c = config.color_of(tokens[i][0]);
        if (!c)
            throw ParseError(line_no, std::string("unknown color letter '") +
                                          tokens[i][0] + "'");
        pawns[i] = *c;
    }
    return Code({pawns.data(), tokens.size()}, config);
}

} // namespace

bool Transcript::validates() const
{
    if (!secret)
        return false;
    for (const HistoryEntry& entry : entries)
        if (score(entry.guess, *secret) != entry.feedback)
            return false;
    return true;
}

Transcript parse_transcript(const GameConfig& config, std::string_view text)
{
    Transcript out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty())
            continue;

        if (tokens[0] == "secret:") {
            if (out.secret)
                throw ParseError(line_no, "duplicate secret line");
            out.secret = parse_code_tokens(config, {tokens.data() + 1, tokens.size() - 1},
                                           line_no);
            continue;
        }
        if (out.secret)
            throw ParseError(line_no, "rows after the secret line");

        // N pawn tokens, "|", "<w>W", "<b>B"
        if (tokens.size() != config.positions() + 3 ||
            tokens[config.positions()] != "|")
            throw ParseError(line_no, "expected \"<row> | <int>W <int>B\"");
        Code guess = parse_code_tokens(config, {tokens.data(), config.positions()},
                                       line_no);
        auto whites = parse_pin_count(tokens[config.positions() + 1], 'W');
        auto blacks = parse_pin_count(tokens[config.positions() + 2], 'B');
        if (!whites || !blacks)
            throw ParseError(line_no, "malformed feedback \"" +
                                          std::string(tokens[config.positions() + 1]) + " " +
                                          std::string(tokens[config.positions() + 2]) + "\"");
        if (*whites + *blacks > static_cast<int>(config.positions()))
            throw ParseError(line_no, "feedback exceeds row length");
        out.entries.push_back(HistoryEntry{
            guess, Feedback{static_cast<std::uint8_t>(*whites),
                            static_cast<std::uint8_t>(*blacks)}});
    }
    return out;
}

std::string to_string(const GameConfig& config, const Transcript& transcript)
{
    std::string out;
    for (const HistoryEntry& entry : transcript.entries) {
        out += to_string(config, entry.guess);
        out += " | ";
        out += to_string(entry.feedback);
        out += '\n';
    }
    if (transcript.secret) {
        out += "secret: ";
        out += to_string(config, *transcript.secret);
        out += '\n';
    }
    return out;
}

} // namespace mastermind
