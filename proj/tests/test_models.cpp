#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mastermind/codespace.hpp"
#include "mastermind/models.hpp"

using namespace mastermind;

namespace {

ColorModel model_of(const GameConfig& config, std::string_view text)
{
    return color_model_from_string(config, text);
}

// independent denotation counter: recount colors by hand instead of going
// through the model's own satisfaction path
std::uint64_t count_by_hand(const ColorModel& model, const GameConfig& config)
{
    std::uint64_t count = 0;
    for_each_code(config, [&](const Code& code) {
        for (std::size_t c = 0; c < config.colors(); ++c) {
            unsigned occurrences = 0;
            for (std::size_t i = 0; i < code.size(); ++i)
                occurrences += code[i] == c;
            const CountConstraint& cc = model.at(static_cast<Color>(c));
            if (cc.kind == CountConstraint::Kind::exactly && occurrences != cc.count)
                return;
            if (cc.kind == CountConstraint::Kind::at_least && occurrences < cc.count)
                return;
        }
        ++count;
    });
    return count;
}

ColorModel random_color_model(const GameConfig& config, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> count(0, 2);
    ColorModel model;
    for (std::size_t c = 0; c < config.colors(); ++c) {
        switch (kind(rng)) {
        case 0: model.set(static_cast<Color>(c), CountConstraint::exactly(count(rng))); break;
        case 1: model.set(static_cast<Color>(c), CountConstraint::at_least(count(rng))); break;
        default: break; // unconstrained twice as likely
        }
    }
    return model;
}

PlaceModel random_place_model(const GameConfig& config, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> cell_kind(0, 3);
    std::uniform_int_distribution<int> color(0, static_cast<int>(config.colors()) - 1);
    std::uniform_int_distribution<int> mask(0, (1 << config.colors()) - 1);
    PlaceModel pm = PlaceModel::all_wildcards(config, random_color_model(config, rng));
    for (std::size_t i = 0; i < config.positions(); ++i) {
        int k = cell_kind(rng);
        if (k == 0)
            pm.cells[i] = PlaceCell::fixed_to(static_cast<Color>(color(rng)));
        else if (k == 1)
            pm.cells[i] = PlaceCell::wildcard(static_cast<std::uint8_t>(mask(rng)));
    }
    return pm;
}

} // namespace

TEST_CASE("count constraints")
{
    CHECK(CountConstraint::at_least(0) == CountConstraint::unconstrained());
    CHECK(CountConstraint::exactly(0).admits(0));
    CHECK_FALSE(CountConstraint::exactly(0).admits(1));
    CHECK(CountConstraint::at_least(2).admits(3));
    CHECK_FALSE(CountConstraint::at_least(2).admits(1));
    CHECK(CountConstraint::unconstrained().admits(5));
    CHECK(CountConstraint::exactly(3).lower() == 3);
    CHECK(CountConstraint::exactly(3).upper(5) == 3);
    CHECK(CountConstraint::at_least(2).upper(5) == 5);
}

TEST_CASE("color-model satisfaction")
{
    GameConfig config;
    Code secret = code_from_string(config, "R R G Y G");

    CHECK(model_of(config, "[1Y][2R][2G]").satisfied_by(secret));
    CHECK_FALSE(model_of(config, "[1B][1Y] noR").satisfied_by(secret));
    CHECK(ColorModel{}.satisfied_by(secret));
}

TEST_CASE("denotation counts match the exhaustive oracle")
{
    GameConfig config;
    CHECK(denotation_count(ColorModel{}, config) == 32768);

    // row-1 interpretations; 2500 = 5 * 4 * 5^3 for [1B][1Y] noR
    for (auto [text, expected] :
         {std::pair<const char*, std::uint64_t>{"[1B][1Y] noR", 2500},
          {"[1B] 1R noY", 3355},
          {"[1Y][2R][2G]", 30},
          {"[1Y][3R][1G]", 20}}) {
        ColorModel m = model_of(config, text);
        CHECK(denotation_count(m, config) == expected);
        CHECK(count_by_hand(m, config) == expected);
    }
}

TEST_CASE("merge follows the recorded game's cross-row eliminations")
{
    GameConfig config;

    // row 2 excludes blue, killing the first row-1 model
    CHECK_FALSE(merge(model_of(config, "[1B][1Y] noR"), model_of(config, "noO noB"),
                      config)
                    .has_value());

    auto merged = merge(model_of(config, "[1Y] 1R"), model_of(config, "noB noO"), config);
    REQUIRE(merged.has_value());
    CHECK(to_string(config, *merged) == "[1Y] 1R noB noO");

    ColorModel m = model_of(config, "[1Y][2R][2G]");
    CHECK(merge(m, ColorModel{}, config) == normalize(m, config));
}

TEST_CASE("merge constraint table")
{
    GameConfig config = GameConfig::with_colors(4, 6);
    Color b = 0;

    auto one = [&](CountConstraint x, CountConstraint y) {
        return merge(ColorModel{}.set(b, x), ColorModel{}.set(b, y), config);
    };

    CHECK_FALSE(one(CountConstraint::exactly(1), CountConstraint::exactly(2)).has_value());
    CHECK_FALSE(one(CountConstraint::exactly(1), CountConstraint::at_least(2)).has_value());
    CHECK(one(CountConstraint::exactly(2), CountConstraint::at_least(2))->at(b) ==
          CountConstraint::exactly(2));
    CHECK(one(CountConstraint::at_least(1), CountConstraint::at_least(2))->at(b) ==
          CountConstraint::at_least(2));
    CHECK(one(CountConstraint::exactly(1), CountConstraint::exactly(1))->at(b) ==
          CountConstraint::exactly(1));

    // contradiction can also be global: lower bounds overflow the row
    auto overflowing = merge(ColorModel{}.set(0, CountConstraint::at_least(2)).set(
                                 1, CountConstraint::at_least(2)),
                             ColorModel{}.set(2, CountConstraint::at_least(1)), config);
    CHECK_FALSE(overflowing.has_value());
}

TEST_CASE("merge soundness: denotations intersect, exhaustively at 4x6")
{
    GameConfig config = GameConfig::with_colors(4, 6);
    std::mt19937_64 rng(17);
    for (int round = 0; round < 100; ++round) {
        ColorModel a = random_color_model(config, rng);
        ColorModel b = random_color_model(config, rng);
        auto merged = merge(a, b, config);
        std::uint64_t expected = 0;
        bool sound = true;
        for_each_code(config, [&](const Code& code) {
            bool in_both = a.satisfied_by(code) && b.satisfied_by(code);
            expected += in_both;
            if (merged && merged->satisfied_by(code) != in_both)
                sound = false;
        });
        CHECK(sound);
        if (merged)
            CHECK(denotation_count(*merged, config) == expected);
        else
            CHECK(expected == 0);
    }
}

TEST_CASE("normalize closes counts over the row length")
{
    GameConfig config;

    ColorModel open = model_of(config, "[1Y][2R] 2G");
    ColorModel closed = normalize(open, config);
    CHECK(to_string(config, closed) == "[1Y][2R][2G] noB noO noP noC noM");
    CHECK(closed.at(*config.color_of('G')) == CountConstraint::exactly(2));

    // already-normalized models are fixpoints
    CHECK(normalize(closed, config) == closed);

    // exhausted counts summing to N force every other color to zero
    ColorModel full = normalize(model_of(config, "[1Y][2R][2G]"), config);
    CHECK(full.at(*config.color_of('B')) == CountConstraint::exactly(0));
    CHECK(full.at(*config.color_of('M')) == CountConstraint::exactly(0));

    // a lone AtLeast(N) closes from above
    GameConfig mono(5, "B");
    ColorModel all_b = normalize(ColorModel{}.set(0, CountConstraint::at_least(5)), mono);
    CHECK(all_b.at(0) == CountConstraint::exactly(5));
}

TEST_CASE("normalize preserves denotation and is idempotent, at 4x6")
{
    GameConfig config = GameConfig::with_colors(4, 6);
    std::mt19937_64 rng(23);
    for (int round = 0; round < 200; ++round) {
        ColorModel m = random_color_model(config, rng);
        ColorModel n = normalize(m, config);
        CHECK(normalize(n, config) == n);
        bool same = true;
        for_each_code(config, [&](const Code& code) {
            if (m.satisfied_by(code) != n.satisfied_by(code))
                same = false;
        });
        CHECK(same);
    }
}

TEST_CASE("empty models are detectable")
{
    GameConfig config = GameConfig::with_colors(4, 6);
    CHECK(is_empty(ColorModel{}.set(0, CountConstraint::at_least(5)), config));
    // every color capped below the row length
    ColorModel capped;
    for (Color c = 0; c < 6; ++c)
        capped.set(c, CountConstraint::exactly(0));
    CHECK(is_empty(capped, config));
    CHECK_FALSE(is_empty(ColorModel{}, config));
    CHECK(denotation_count(capped, config) == 0);
}

TEST_CASE("place models: cells, satisfaction, denotation")
{
    GameConfig config;
    PlaceModel pm = place_model_from_string(config, "[- - Y - -] over [1Y][2R][2G]");
    CHECK(pm.cell(2).fixed);
    CHECK_FALSE(pm.cell(0).fixed);

    CHECK_FALSE(pm.satisfied_by(code_from_string(config, "R R G Y G"))); // Y not at 2
    CHECK(pm.satisfied_by(code_from_string(config, "R R Y G G")));
    CHECK(pm.satisfied_by(code_from_string(config, "G G Y R R")));
    CHECK_FALSE(pm.satisfied_by(code_from_string(config, "R R Y G B"))); // wrong multiset

    // 1Y fixed at one slot, {R,R,G,G} arranged over four: 4!/(2!2!) = 6
    CHECK(denotation_count(pm, config) == 6);

    PlaceModel excluding = place_model_from_string(config, "[-{!=RG} - Y - -] over [1Y][2R][2G]");
    CHECK_FALSE(excluding.satisfied_by(code_from_string(config, "R R Y G G")));
    CHECK(denotation_count(excluding, config) == 0); // cell 0 must still take R or G
}

TEST_CASE("specificity is denotation inclusion")
{
    GameConfig config;
    ColorModel multiset = model_of(config, "[1Y][2R][2G]");
    PlaceModel anywhere = PlaceModel::all_wildcards(config, multiset);
    PlaceModel fixed = place_model_from_string(config, "[- - Y - -] over [1Y][2R][2G]");

    CHECK(specificity_leq(fixed, anywhere, config));
    CHECK_FALSE(specificity_leq(anywhere, fixed, config));
    CHECK(specificity_leq(multiset, model_of(config, "[1Y] 1R"), config));
    CHECK(specificity_leq(fixed, fixed, config));
}

TEST_CASE("specificity is a partial order on generated models, at 4x6")
{
    GameConfig config = GameConfig::with_colors(4, 6);
    std::mt19937_64 rng(29);
    std::vector<ColorModel> models;
    for (int i = 0; i < 12; ++i)
        models.push_back(random_color_model(config, rng));

    for (const ColorModel& a : models) {
        CHECK(specificity_leq(a, a, config)); // reflexive
        for (const ColorModel& b : models)
            for (const ColorModel& c : models)
                if (specificity_leq(a, b, config) && specificity_leq(b, c, config))
                    CHECK(specificity_leq(a, c, config)); // transitive
    }
    // antisymmetric up to denotation equality
    for (const ColorModel& a : models)
        for (const ColorModel& b : models)
            if (specificity_leq(a, b, config) && specificity_leq(b, a, config))
                CHECK(denotation_count(a, config) == denotation_count(b, config));
}

TEST_CASE("strengthening a model never grows its denotation, at 4x6")
{
    GameConfig config = GameConfig::with_colors(4, 6);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> position(0, 3);
    std::uniform_int_distribution<int> color(0, 5);

    for (int round = 0; round < 60; ++round) {
        PlaceModel pm = random_place_model(config, rng);
        std::uint64_t base = denotation_count(pm, config);

        PlaceModel fixed_one = pm;
        int p = position(rng);
        if (!fixed_one.cells[p].fixed)
            fixed_one.cells[p] = PlaceCell::fixed_to(static_cast<Color>(color(rng)));
        CHECK(denotation_count(fixed_one, config) <= base);

        PlaceModel excluded_one = pm;
        p = position(rng);
        if (!excluded_one.cells[p].fixed)
            excluded_one.cells[p].excluded |= std::uint8_t(1) << color(rng);
        CHECK(denotation_count(excluded_one, config) <= base);

        PlaceModel stronger = pm;
        Color c = static_cast<Color>(color(rng));
        CountConstraint before = stronger.colors.at(c);
        if (before.kind == CountConstraint::Kind::unconstrained)
            stronger.colors.set(c, CountConstraint::at_least(1));
        else if (before.kind == CountConstraint::Kind::at_least)
            stronger.colors.set(c, CountConstraint::exactly(before.count));
        CHECK(denotation_count(stronger, config) <= base);
    }
}

TEST_CASE("display syntax round-trips")
{
    GameConfig config;

    for (const char* text : {"[1B][1Y] noR", "[1Y] 1R noB noO", "[1Y][2R][2G]",
                             "2B noY noR", "any"}) {
        ColorModel m = color_model_from_string(config, text);
        CHECK(to_string(config, m) == text);
    }
    CHECK(to_string(config, color_model_from_string(config, "[0R]")) == "noR");
    CHECK_THROWS_AS(color_model_from_string(config, "[1X]"), std::invalid_argument);
    CHECK_THROWS_AS(color_model_from_string(config, "[1B][2B]"), std::invalid_argument);

    for (const char* text : {"[- - Y - -]", "[B B - Y R]", "[- - - Y G]"}) {
        PlaceModel pm = place_model_from_string(config, text);
        CHECK(cells_to_string(config, pm) == text);
    }

    PlaceModel detailed =
        place_model_from_string(config, "[-{!=RG} - Y - -] over [1Y][2R][2G]");
    CHECK(cells_to_string_detailed(config, detailed) == "[-{!=RG} - Y - -]");
    CHECK(cells_to_string(config, detailed) == "[- - Y - -]");
    CHECK(to_string(config, detailed) == "[- - Y - -] over [1Y][2R][2G]");
    PlaceModel reparsed =
        place_model_from_string(config, to_string(config, detailed));
    CHECK(reparsed.colors == detailed.colors);
    CHECK_THROWS_AS(place_model_from_string(config, "[- -]"), std::invalid_argument);
}
