#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "sos/world.hpp"

using namespace sos;

namespace {

ModelConfig small_config(int side, int population, double radius) {
    ModelConfig c;
    c.grid_width = side;
    c.grid_height = side;
    c.population = population;
    c.vision_radius = radius;
    return c;
}

std::size_t count_nonpositive(const std::vector<double>& w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](double v) { return v <= 0.0; }));
}

}  // namespace

TEST_CASE("balanced split puts exactly ceil(n/2) values at or below zero") {
    Rng rng(11);
    CHECK(count_nonpositive(sample_initial_w(rng, 1000, 1.0, InitialSplit::Balanced)) == 500);

    const auto pair = sample_initial_w(rng, 2, 1.0, InitialSplit::Balanced);
    CHECK(count_nonpositive(pair) == 1);
    CHECK(std::max(pair[0], pair[1]) > 0.0);

    for (std::size_t n : {3u, 7u, 101u}) {
        CHECK(count_nonpositive(sample_initial_w(rng, n, 1.0, InitialSplit::Balanced)) == (n + 1) / 2);
    }
}

TEST_CASE("fewer than two agents cannot be split") {
    Rng rng(1);
    CHECK_THROWS_AS(sample_initial_w(rng, 1, 1.0, InitialSplit::Balanced), InvalidPopulation);
    CHECK_THROWS_AS(sample_initial_w(rng, 0, 1.0, InitialSplit::Random), InvalidPopulation);
}

TEST_CASE("random split has standard-normal moments") {
    // Tolerances are about 5 and 7 standard errors at n = 10000.
    Rng rng(2024);
    const auto w = sample_initial_w(rng, 10000, 1.0, InitialSplit::Random);
    double sum = 0.0;
    for (double v : w) sum += v;
    const double m = sum / w.size();
    double ss = 0.0;
    for (double v : w) ss += (v - m) * (v - m);
    const double sd = std::sqrt(ss / (w.size() - 1));
    CHECK(m > -0.05);
    CHECK(m < 0.05);
    CHECK(sd > 0.95);
    CHECK(sd < 1.05);
}

TEST_CASE("balanced magnitudes follow a half-normal distribution") {
    // One-sample Kolmogorov-Smirnov at the 0.001 level: D < 1.949 / sqrt(n).
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        for (double sd : {1.0, 2.5}) {
            Rng rng(seed);
            auto w = sample_initial_w(rng, 2000, sd, InitialSplit::Balanced);
            for (auto& v : w) v = std::abs(v);
            std::sort(w.begin(), w.end());
            const double n = static_cast<double>(w.size());
            double d = 0.0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                const double cdf = std::erf(w[i] / (sd * std::sqrt(2.0)));
                d = std::max({d, (i + 1) / n - cdf, cdf - i / n});
            }
            CHECK(d < 1.949 / std::sqrt(n));
        }
    }
}

TEST_CASE("media levels are drawn uniformly per patch") {
    const auto c = validate_config(ModelConfig{});
    Rng rng(99);
    const auto media = assign_media(rng, c);
    REQUIRE(media.size() == 2500);
    // Binomial(2500, 1/6) within 5 standard deviations.
    const double expected = 2500.0 / 6.0;
    const double tol = 5.0 * std::sqrt(2500.0 * (1.0 / 6.0) * (5.0 / 6.0));
    for (int level = 0; level <= 5; ++level) {
        const auto k = std::count(media.begin(), media.end(), level);
        CHECK(std::abs(k - expected) <= tol);
    }
}

TEST_CASE("degenerate media level lists") {
    ModelConfig c;
    c.media_levels = {0};
    Rng rng(5);
    auto media = assign_media(rng, validate_config(c));
    CHECK(std::all_of(media.begin(), media.end(), [](int m) { return m == 0; }));

    c.media_levels = {5};
    media = assign_media(rng, validate_config(c));
    CHECK(std::none_of(media.begin(), media.end(), [](int m) { return m == 0; }));
}

TEST_CASE("placement fills distinct patches") {
    SUBCASE("full grid") {
        const auto c = validate_config(small_config(10, 100, 1.0));
        Rng rng(3);
        auto pos = place_agents(rng, c);
        std::set<Patch> unique(pos.begin(), pos.end());
        CHECK(unique.size() == 100);
    }
    SUBCASE("baseline density") {
        const auto c = validate_config(ModelConfig{});
        Rng rng(4);
        auto pos = place_agents(rng, c);
        std::set<Patch> unique(pos.begin(), pos.end());
        CHECK(pos.size() == 1000);
        CHECK(unique.size() == 1000);
        for (const auto& p : pos) {
            CHECK(p.x >= 0);
            CHECK(p.x < 50);
            CHECK(p.y >= 0);
            CHECK(p.y < 50);
        }
    }
    SUBCASE("same seed, same positions") {
        const auto c = validate_config(ModelConfig{});
        Rng a(77);
        Rng b(77);
        CHECK(place_agents(a, c) == place_agents(b, c));
    }
}

TEST_CASE("init_world is a pure function of config and seed") {
    ModelConfig c;
    const auto a = init_world(c, 123);
    const auto b = init_world(c, 123);
    CHECK(a == b);
    CHECK(a.tick == 0);
    CHECK_FALSE(a == init_world(c, 124));
}

TEST_CASE("baseline world: balanced start, media in range, neighbors by brute force") {
    ModelConfig c;
    const auto world = init_world(c, 8);
    REQUIRE(world.size() == 1000);
    CHECK(silent_count(world, 0.0) == 500);

    std::set<int> levels(c.media_levels.begin(), c.media_levels.end());
    for (int m : world.media) CHECK(levels.contains(m));

    // Oracle: scan every agent pair with the torus metric.
    auto torus_d2 = [&](const Patch& a, const Patch& b) {
        int dx = std::abs(a.x - b.x);
        int dy = std::abs(a.y - b.y);
        dx = std::min(dx, c.grid_width - dx);
        dy = std::min(dy, c.grid_height - dy);
        return dx * dx + dy * dy;
    };
    std::size_t max_seen = 0;
    for (std::size_t i = 0; i < world.size(); ++i) {
        std::set<std::uint32_t> expected;
        for (std::size_t j = 0; j < world.size(); ++j) {
            if (j != i && torus_d2(world.positions[i], world.positions[j]) <= 9) {
                expected.insert(static_cast<std::uint32_t>(j));
            }
        }
        const auto got = world.neighbors.of(i);
        CHECK(std::set<std::uint32_t>(got.begin(), got.end()) == expected);
        CHECK(got.size() <= 28);
        max_seen = std::max(max_seen, got.size());
    }
    CHECK(max_seen > 0);
}

TEST_CASE("fully occupied grid gives every agent 28 neighbors at radius 3") {
    const auto world = init_world(small_config(12, 144, 3.0), 1);
    for (std::size_t i = 0; i < world.size(); ++i) CHECK(world.neighbors.of(i).size() == 28);
}

TEST_CASE("same_state_fraction") {
    auto world = init_world(small_config(10, 100, 1.0), 3);
    std::fill(world.w.begin(), world.w.end(), 1.0);
    CHECK(same_state_fraction(world, 0.0) == doctest::Approx(1.0));
    // Checkerboard: every von Neumann neighbor has the other state.
    for (std::size_t i = 0; i < world.size(); ++i) {
        const auto& p = world.positions[i];
        world.w[i] = (p.x + p.y) % 2 == 0 ? 1.0 : -1.0;
    }
    CHECK(same_state_fraction(world, 0.0) == doctest::Approx(0.0));
}
