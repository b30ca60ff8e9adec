#include "mastermind/models.hpp"

#include <charconv>
#include <stdexcept>

#include "mastermind/codespace.hpp"

namespace mastermind {

bool ColorModel::satisfied_by(const Code& code) const
{
    std::array<std::uint8_t, kMaxColors> counts{};
    for (std::size_t i = 0; i < code.size(); ++i)
        ++counts[code[i]];
    for (std::size_t c = 0; c < kMaxColors; ++c)
        if (!constraints[c].admits(counts[c]))
            return false;
    return true;
}

namespace {

struct Bounds {
    unsigned lower_sum = 0;
    unsigned upper_sum = 0;
};

Bounds bounds_of(const ColorModel& model, const GameConfig& config)
{
    const unsigned n = static_cast<unsigned>(config.positions());
    Bounds b;
    for (std::size_t c = 0; c < config.colors(); ++c) {
        b.lower_sum += model.at(static_cast<Color>(c)).lower();
        b.upper_sum += model.at(static_cast<Color>(c)).upper(n);
    }
    return b;
}

} // namespace

bool is_empty(const ColorModel& model, const GameConfig& config)
{
    const unsigned n = static_cast<unsigned>(config.positions());
    Bounds b = bounds_of(model, config);
    return b.lower_sum > n || b.upper_sum < n;
}

ColorModel normalize(const ColorModel& model, const GameConfig& config)
{
    if (is_empty(model, config))
        return model;

    const unsigned n = static_cast<unsigned>(config.positions());
    Bounds b = bounds_of(model, config);
    ColorModel out = model;
    if (b.lower_sum == n) {
        // counts close from below: every color holds exactly its lower bound
        for (std::size_t c = 0; c < config.colors(); ++c)
            out.set(static_cast<Color>(c),
                    CountConstraint::exactly(model.at(static_cast<Color>(c)).lower()));
    } else if (b.upper_sum == n) {
        for (std::size_t c = 0; c < config.colors(); ++c)
            out.set(static_cast<Color>(c),
                    CountConstraint::exactly(model.at(static_cast<Color>(c)).upper(n)));
    }
    return out;
}

std::optional<ColorModel> merge(const ColorModel& a, const ColorModel& b,
                                const GameConfig& config)
{
    using Kind = CountConstraint::Kind;
    ColorModel out;
    for (std::size_t i = 0; i < config.colors(); ++i) {
        Color c = static_cast<Color>(i);
        CountConstraint ca = a.at(c), cb = b.at(c);
        if (ca.kind == Kind::unconstrained) {
            out.set(c, cb);
            continue;
        }
        if (cb.kind == Kind::unconstrained) {
            out.set(c, ca);
            continue;
        }
        if (ca.kind == Kind::exactly && cb.kind == Kind::exactly) {
            if (ca.count != cb.count)
                return std::nullopt;
            out.set(c, ca);
        } else if (ca.kind == Kind::at_least && cb.kind == Kind::at_least) {
            out.set(c, CountConstraint::at_least(std::max(ca.count, cb.count)));
        } else {
            CountConstraint ex = ca.kind == Kind::exactly ? ca : cb;
            CountConstraint al = ca.kind == Kind::exactly ? cb : ca;
            if (ex.count < al.count)
                return std::nullopt;
            out.set(c, ex);
        }
    }
    if (is_empty(out, config))
        return std::nullopt;
    return normalize(out, config);
}

PlaceModel PlaceModel::all_wildcards(const GameConfig& config, ColorModel colors)
{
    PlaceModel out;
    out.length = static_cast<std::uint8_t>(config.positions());
    out.colors = std::move(colors);
    return out;
}

bool PlaceModel::satisfied_by(const Code& code) const
{
    if (code.size() != length)
        return false;
    for (std::size_t i = 0; i < length; ++i)
        if (!cells[i].admits(code[i]))
            return false;
    return colors.satisfied_by(code);
}

std::uint64_t denotation_count(const ColorModel& model, const GameConfig& config)
{
    std::uint64_t count = 0;
    for_each_code(config, [&](const Code& code) { count += model.satisfied_by(code); });
    return count;
}

std::uint64_t denotation_count(const PlaceModel& model, const GameConfig& config)
{
    std::uint64_t count = 0;
    for_each_code(config, [&](const Code& code) { count += model.satisfied_by(code); });
    return count;
}

template <class ModelA, class ModelB>
bool specificity_leq(const ModelA& a, const ModelB& b, const GameConfig& config)
{
    bool subset = true;
    for_each_code(config, [&](const Code& code) {
        if (subset && a.satisfied_by(code) && !b.satisfied_by(code))
            subset = false;
    });
    return subset;
}

template bool specificity_leq(const ColorModel&, const ColorModel&, const GameConfig&);
template bool specificity_leq(const PlaceModel&, const PlaceModel&, const GameConfig&);
template bool specificity_leq(const PlaceModel&, const ColorModel&, const GameConfig&);
template bool specificity_leq(const ColorModel&, const PlaceModel&, const GameConfig&);

std::string to_string(const GameConfig& config, const ColorModel& model)
{
    using Kind = CountConstraint::Kind;
    std::string exhausted, open, exclusions;
    for (std::size_t i = 0; i < config.colors(); ++i) {
        Color c = static_cast<Color>(i);
        const CountConstraint& cc = model.at(c);
        if (cc.kind == Kind::exactly && cc.count == 0) {
            if (!exclusions.empty()) exclusions += ' ';
            exclusions += "no";
            exclusions += config.letter(c);
        } else if (cc.kind == Kind::exactly) {
            exhausted += '[';
            exhausted += std::to_string(cc.count);
            exhausted += config.letter(c);
            exhausted += ']';
        } else if (cc.kind == Kind::at_least) {
            if (!open.empty()) open += ' ';
            open += std::to_string(cc.count);
            open += config.letter(c);
        }
    }
    std::string out = exhausted;
    if (!open.empty()) {
        if (!out.empty()) out += ' ';
        out += open;
    }
    if (!exclusions.empty()) {
        if (!out.empty()) out += ' ';
        out += exclusions;
    }
    if (out.empty())
        out = "any";
    return out;
}

namespace {

[[noreturn]] void bad_model(std::string_view text, const std::string& why)
{
    throw std::invalid_argument("bad color model \"" + std::string(text) + "\": " + why);
}

} // namespace

ColorModel color_model_from_string(const GameConfig& config, std::string_view text)
{
    ColorModel out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
            ++i;
    };
    auto parse_count = [&]() -> unsigned {
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9')
            ++i;
        if (i == start)
            bad_model(text, "expected a count");
        unsigned value = 0;
        std::from_chars(text.data() + start, text.data() + i, value);
        return value;
    };
    auto parse_color = [&]() -> Color {
        if (i >= text.size())
            bad_model(text, "expected a color letter");
        auto c = config.color_of(text[i]);
        if (!c)
            bad_model(text, std::string("unknown color letter '") + text[i] + "'");
        ++i;
        return *c;
    };
    auto set_once = [&](Color c, CountConstraint cc) {
        if (out.at(c) != CountConstraint::unconstrained())
            bad_model(text, std::string("color '") + config.letter(c) + "' constrained twice");
        out.set(c, cc);
    };

    skip_ws();
    if (text.substr(i) == "any")
        return out;
    while (i < text.size()) {
        if (text[i] == '[') {
            ++i;
            unsigned k = parse_count();
            Color c = parse_color();
            if (i >= text.size() || text[i] != ']')
                bad_model(text, "missing ']'");
            ++i;
            set_once(c, CountConstraint::exactly(k));
        } else if (text[i] == 'n' && i + 1 < text.size() && text[i + 1] == 'o') {
            i += 2;
            set_once(parse_color(), CountConstraint::exactly(0));
        } else if (text[i] >= '0' && text[i] <= '9') {
            unsigned k = parse_count();
            set_once(parse_color(), CountConstraint::at_least(k));
        } else {
            bad_model(text, std::string("unexpected character '") + text[i] + "'");
        }
        skip_ws();
    }
    return out;
}

namespace {

std::string render_cells(const GameConfig& config, const PlaceModel& model,
                         bool detailed)
{
    std::string out = "[";
    for (std::size_t i = 0; i < model.length; ++i) {
        if (i) out += ' ';
        const PlaceCell& cell = model.cell(i);
        if (cell.fixed) {
            out += config.letter(cell.color);
        } else {
            out += '-';
            if (detailed && cell.excluded) {
                out += "{!=";
                for (std::size_t c = 0; c < config.colors(); ++c)
                    if (cell.excluded & (std::uint8_t(1) << c))
                        out += config.letter(static_cast<Color>(c));
                out += '}';
            }
        }
    }
    out += ']';
    return out;
}

} // namespace

std::string cells_to_string(const GameConfig& config, const PlaceModel& model)
{
    return render_cells(config, model, false);
}

std::string cells_to_string_detailed(const GameConfig& config, const PlaceModel& model)
{
    return render_cells(config, model, true);
}

std::string to_string(const GameConfig& config, const PlaceModel& model)
{
    return cells_to_string(config, model) + " over " + to_string(config, model.colors);
}

PlaceModel place_model_from_string(const GameConfig& config, std::string_view text)
{
    auto bad = [&](const std::string& why) -> void {
        throw std::invalid_argument("bad place model \"" + std::string(text) + "\": " + why);
    };

    std::size_t open = text.find('[');
    std::size_t close = text.find(']', open == std::string_view::npos ? 0 : open);
    if (open == std::string_view::npos || close == std::string_view::npos)
        bad("missing [cells]");

    PlaceModel out;
    out.length = 0;
    std::size_t i = open + 1;
    while (i < close) {
        if (text[i] == ' ' || text[i] == '\t') {
            ++i;
            continue;
        }
        if (out.length >= config.positions())
            bad("too many cells");
        if (text[i] == '-') {
            ++i;
            std::uint8_t excluded = 0;
            if (i < close && text[i] == '{') {
                if (text.substr(i, 3) != "{!=")
                    bad("expected \"{!=\" after '-'");
                i += 3;
                while (i < close && text[i] != '}') {
                    auto c = config.color_of(text[i]);
                    if (!c)
                        bad(std::string("unknown color letter '") + text[i] + "'");
                    excluded |= std::uint8_t(1) << *c;
                    ++i;
                }
                if (i >= close)
                    bad("missing '}'");
                ++i;
            }
            out.cells[out.length++] = PlaceCell::wildcard(excluded);
        } else {
            auto c = config.color_of(text[i]);
            if (!c)
                bad(std::string("unknown color letter '") + text[i] + "'");
            out.cells[out.length++] = PlaceCell::fixed_to(*c);
            ++i;
        }
    }
    if (out.length != config.positions())
        bad("expected " + std::to_string(config.positions()) + " cells");

    std::string_view rest = text.substr(close + 1);
    std::size_t over = rest.find("over");
    if (over != std::string_view::npos)
        out.colors = color_model_from_string(config, rest.substr(over + 4));
    return out;
}

} // namespace mastermind
