#include <doctest.h>

#include "bergstab/config.hpp"
#include "test_support.hpp"

using namespace bergstab;

namespace {

const char* kGoodConfig = R"cfg(
# cyclic scaling group, w -> 9w
[group]
model = halfplane
rank = 1
gen0 = 3, 0, 0, 0, 0, 0, 0.33333333333333331, 0
asserted_free_discrete = true
asserted_convergence_type = true
provenance = bundled

[tower]
kind = cyclic_powers
schedule = 2, 4, 8
top = trivial

[grid]
count = 3
extent = 0.5

[series]
max_len = 20
tol = 1e-10
policy = raw_ball
level = base

[output]
basepoint = 0, 0
)cfg";

} // namespace

TEST_CASE("a complete config parses into a validated experiment") {
    ExperimentConfig cfg = parse_config(kGoodConfig, "inline");
    CHECK(cfg.group.model == Model::halfplane);
    CHECK(cfg.group.rank() == 1);
    CHECK(cfg.group.asserted_convergence_type);
    CHECK(cfg.bundled);
    REQUIRE(cfg.tower.has_value());
    CHECK(cfg.tower->schedule.size() == 3);
    CHECK(cfg.grid.count == 3);
    CHECK(cfg.series.max_len == 20);
    CHECK(cfg.level == "base");
    CHECK(cfg.config_hash.size() == 16);

    // The generator is the normalized scaling by 9.
    CHECK(cfg.group.generators[0].same_map(
        MoebiusMap::create(3.0, 0.0, 0.0, 1.0 / 3.0, Model::halfplane), 1e-12));
}

TEST_CASE("config hash is stable and content-sensitive") {
    ExperimentConfig a = parse_config(kGoodConfig, "inline");
    ExperimentConfig b = parse_config(kGoodConfig, "other-label");
    CHECK(a.config_hash == b.config_hash);
    std::string changed = std::string(kGoodConfig) + "\n# trailing note\n";
    CHECK(parse_config(changed, "inline").config_hash != a.config_hash);
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
}

TEST_CASE("schema violations are reported as config errors") {
    CHECK_THROWS_AS(parse_config("", "inline"), ConfigError);
    CHECK_THROWS_AS(parse_config("[group]\nmodel = disc\n", "inline"), ConfigError);
    CHECK_THROWS_AS(parse_config("[grouple]\n", "inline"), ConfigError);

    std::string bad_key(kGoodConfig);
    bad_key.replace(bad_key.find("extent"), 6, "extnet");
    CHECK_THROWS_AS(parse_config(bad_key, "inline"), ConfigError);

    std::string bad_model(kGoodConfig);
    bad_model.replace(bad_model.find("halfplane"), 9, "plane");
    CHECK_THROWS_AS(parse_config(bad_model, "inline"), ConfigError);

    std::string bad_schedule(kGoodConfig);
    bad_schedule.replace(bad_schedule.find("2, 4, 8"), 7, "2, 3, 8");
    CHECK_THROWS_AS(parse_config(bad_schedule, "inline"), ConfigError);

    std::string bad_gen(kGoodConfig);
    bad_gen.replace(bad_gen.find("3, 0, 0, 0, 0, 0, 0.33333333333333331, 0"), 40, "3, 0, 0");
    CHECK_THROWS_AS(parse_config(bad_gen, "inline"), ConfigError);

    CHECK_THROWS_AS(load_config("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("level selection resolves predicates") {
    ExperimentConfig cfg = parse_config(kGoodConfig, "inline");
    Word g4 = Word::generator(0) * Word::generator(0) * Word::generator(0) * Word::generator(0);
    CHECK(predicate_for_level(cfg, "base")(g4));
    CHECK(predicate_for_level(cfg, "2")(g4));
    CHECK(!predicate_for_level(cfg, "3")(g4));
    CHECK(!predicate_for_level(cfg, "top")(g4));
    CHECK(predicate_for_level(cfg, "top")(Word{}));
    CHECK_THROWS_AS(predicate_for_level(cfg, "9"), ConfigError);

    std::string bad_level(kGoodConfig);
    bad_level.replace(bad_level.find("level = base"), 12, "level = 7   ");
    CHECK_THROWS_AS(parse_config(bad_level, "inline"), ConfigError);
}

TEST_CASE("every bundled config loads and asserts bundled provenance") {
    const char* names[] = {"trivial.cfg", "cyclic9.cfg", "annulus_match.cfg",
                           "annulus_tower.cfg", "schottky_tower.cfg"};
    for (const char* name : names) {
        ExperimentConfig cfg = load_config(std::string(BERGSTAB_CONFIG_DIR) + "/" + name);
        CHECK(cfg.bundled);
        CHECK(cfg.group.asserted_convergence_type);
        CHECK(cfg.config_hash.size() == 16);
    }
}

TEST_CASE("group validation rejects duplicate or identity generators") {
    GroupSpec g;
    g.model = Model::disc;
    g.generators.push_back(MoebiusMap::create(1.0, 0.8, 0.8, 1.0, Model::disc));
    g.generators.push_back(MoebiusMap::create(-1.0, -0.8, -0.8, -1.0, Model::disc));
    CHECK_THROWS_AS(g.validate(), ConfigError); // same map up to sign

    GroupSpec ident;
    ident.model = Model::disc;
    ident.generators.push_back(MoebiusMap::identity(Model::disc));
    CHECK_THROWS_AS(ident.validate(), ConfigError);
}

TEST_CASE("grid axes are symmetric and within the stated extent") {
    GridSpec grid;
    grid.count = 5;
    grid.extent = 0.69;
    auto zs = grid.first_axis();
    auto ws = grid.second_axis();
    REQUIRE(zs.size() == 5);
    CHECK(zs.front() == Complex{-0.69, 0.0});
    CHECK(zs.back() == Complex{0.69, 0.0});
    CHECK(std::abs(zs[2]) == 0.0);
    CHECK(ws.front() == Complex{0.0, -0.69});
    for (Complex z : zs) CHECK(std::abs(z) <= 0.7);
    for (Complex w : ws) CHECK(std::abs(w) <= 0.7);
}
