#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "infolab/channel.hpp"
#include "infolab/distribution.hpp"
#include "infolab/errors.hpp"
#include "infolab/joint.hpp"
#include "infolab/rng.hpp"
#include "infolab/triple.hpp"

using namespace infolab;

namespace {

Alphabet suits() { return Alphabet({"s", "c", "d", "h"}); }

// Suit/color joint: suit uniform, color determined by suit (s,c black; d,h red).
JointDistribution suit_color_joint() {
    Alphabet colors({"black", "red"});
    std::vector<double> probs = {
        0.25, 0.0, // s
        0.25, 0.0, // c
        0.0, 0.25, // d
        0.0, 0.25, // h
    };
    return JointDistribution(suits(), colors, probs);
}

} // namespace

TEST_CASE("alphabet validates and indexes labels") {
    Alphabet a({"x", "y", "z"});
    CHECK(a.size() == 3);
    CHECK(a.index_of("y") == 1);
    CHECK(!a.contains("w"));
    CHECK_THROWS_AS(a.index_of("w"), Error);
    CHECK_THROWS_AS(Alphabet({"x", "x"}), Error);
    CHECK_THROWS_AS(Alphabet({}), Error);
}

TEST_CASE("make_distribution strict and normalize policies") {
    Alphabet a = suits();
    auto u = make_distribution(a, {0.25, 0.25, 0.25, 0.25}, NormalizePolicy::strict);
    CHECK(u[0] == doctest::Approx(0.25));

    auto half = make_distribution(Alphabet({"a", "b"}), {2.0, 2.0}, NormalizePolicy::normalize);
    CHECK(half[0] == doctest::Approx(0.5));
    CHECK(half[1] == doctest::Approx(0.5));

    CHECK_THROWS_WITH_AS(
        make_distribution(Alphabet({"a", "b"}), {0.5, 0.6}, NormalizePolicy::strict),
        doctest::Contains("NotNormalized"), Error);
    CHECK_THROWS_WITH_AS(
        make_distribution(Alphabet({"a", "b"}), {-0.1, 1.1}, NormalizePolicy::strict),
        doctest::Contains("NegativeWeight"), Error);
    CHECK_THROWS_WITH_AS(
        make_distribution(Alphabet({"a", "b"}), {0.0, 0.0}, NormalizePolicy::normalize),
        doctest::Contains("ZeroTotal"), Error);
}

TEST_CASE("uniform distribution") {
    CHECK(uniform(suits())[2] == doctest::Approx(0.25));
    CHECK(uniform(Alphabet({"only"}))[0] == doctest::Approx(1.0));
    auto u3 = uniform(Alphabet({"a", "b", "c"}));
    for (std::size_t i = 0; i < 3; ++i) CHECK(u3[i] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("empirical_from_samples counts and normalizes") {
    std::vector<std::string> draws = {"h", "h", "d", "h"};
    auto [dist, type] = empirical_from_samples(suits(), draws);
    CHECK(type.counts() == std::vector<std::int64_t>{0, 0, 1, 3});
    CHECK(type.total() == 4);
    CHECK(dist[2] == doctest::Approx(0.25));
    CHECK(dist[3] == doctest::Approx(0.75));

    std::vector<std::string> constant(7, "c");
    auto point = empirical_from_samples(suits(), constant);
    CHECK(point.distribution[1] == doctest::Approx(1.0));

    CHECK_THROWS_WITH_AS(empirical_from_samples(suits(), std::vector<std::string>{}),
                         doctest::Contains("EmptySample"), Error);
    CHECK_THROWS_WITH_AS(empirical_from_samples(suits(), std::vector<std::string>{"joker"}),
                         doctest::Contains("UnknownLabel"), Error);
}

TEST_CASE("empirical frequencies approach the sampling distribution") {
    // Law of large numbers at 1e5 seeded draws; oracle is direct counting.
    Alphabet a = suits();
    auto target = make_distribution(a, {0.0, 0.0, 0.5, 0.5}, NormalizePolicy::strict);
    Rng rng(12345);
    std::vector<std::string> draws;
    draws.reserve(100000);
    for (int i = 0; i < 100000; ++i) draws.push_back(a.label(rng.sample_index(target.probs())));
    auto [dist, type] = empirical_from_samples(a, draws);
    (void)type;
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(dist[i] - target[i]) < 0.01);
}

TEST_CASE("product joint and its marginals") {
    Alphabet ab({"a", "b"});
    auto u2 = uniform(ab);
    auto j = product(u2, u2);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) CHECK(j.at(x, y) == doctest::Approx(0.25));

    // Point mass times p: single nonzero row equal to p.
    auto point = make_distribution(ab, {1.0, 0.0}, NormalizePolicy::strict);
    auto q = make_distribution(ab, {0.25, 0.75}, NormalizePolicy::strict);
    auto jp = product(point, q);
    CHECK(jp.at(0, 0) == doctest::Approx(0.25));
    CHECK(jp.at(0, 1) == doctest::Approx(0.75));
    CHECK(jp.at(1, 0) == 0.0);
    CHECK(jp.at(1, 1) == 0.0);

    // Elementwise oracle for (1/2,1/2) x (1/4,3/4).
    auto half = uniform(ab);
    auto mixed = product(half, q);
    double expected[2][2] = {{0.125, 0.375}, {0.125, 0.375}};
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
            CHECK(mixed.at(x, y) == doctest::Approx(expected[x][y]).epsilon(1e-12));

    // product then marginal is the identity on both factors.
    CHECK(std::abs(marginal_x(mixed)[0] - 0.5) <= 1e-12);
    CHECK(std::abs(marginal_y(mixed)[1] - 0.75) <= 1e-12);
}

TEST_CASE("marginals match brute-force row and column sums") {
    Alphabet a3({"a", "b", "c"});
    Rng rng(7);
    auto j = rng.random_joint(a3, a3);
    auto mx = marginal_x(j);
    auto my = marginal_y(j);
    for (std::size_t x = 0; x < 3; ++x) {
        double row = 0.0;
        for (std::size_t y = 0; y < 3; ++y) row += j.at(x, y);
        CHECK(mx[x] == doctest::Approx(row).epsilon(1e-12));
    }
    for (std::size_t y = 0; y < 3; ++y) {
        double col = 0.0;
        for (std::size_t x = 0; x < 3; ++x) col += j.at(x, y);
        CHECK(my[y] == doctest::Approx(col).epsilon(1e-12));
    }
}

TEST_CASE("suit/color joint marginals and conditional slices") {
    auto j = suit_color_joint();
    auto color = marginal_y(j);
    CHECK(color[0] == doctest::Approx(0.5));
    CHECK(color[1] == doctest::Approx(0.5));

    auto red = conditional_slice(j, "red");
    CHECK(red[0] == doctest::Approx(0.0));
    CHECK(red[1] == doctest::Approx(0.0));
    CHECK(red[2] == doctest::Approx(0.5));
    CHECK(red[3] == doctest::Approx(0.5));
}

TEST_CASE("conditional slice of a product joint is the X marginal") {
    Alphabet ab({"a", "b"});
    auto px = make_distribution(ab, {0.3, 0.7}, NormalizePolicy::strict);
    auto py = make_distribution(ab, {0.6, 0.4}, NormalizePolicy::strict);
    auto j = product(px, py);
    for (const auto& label : ab.labels()) {
        auto slice = conditional_slice(j, label);
        CHECK(slice[0] == doctest::Approx(0.3).epsilon(1e-12));
        CHECK(slice[1] == doctest::Approx(0.7).epsilon(1e-12));
    }
}

TEST_CASE("conditioning on a null event fails") {
    Alphabet ab({"a", "b"});
    auto point = make_distribution(ab, {1.0, 0.0}, NormalizePolicy::strict);
    auto j = product(uniform(ab), point);
    CHECK_THROWS_WITH_AS(conditional_slice(j, "b"), doctest::Contains("ZeroConditioningEvent"),
                         Error);
}

TEST_CASE("mixture of conditional slices reconstructs the X marginal") {
    Alphabet a4 = suits();
    Rng rng(99);
    for (int rep = 0; rep < 20; ++rep) {
        auto j = rng.random_joint(a4, a4);
        auto my = marginal_y(j);
        auto mx = marginal_x(j);
        std::vector<double> mix(4, 0.0);
        for (std::size_t y = 0; y < 4; ++y) {
            if (my[y] == 0.0) continue;
            auto slice = conditional_slice(j, a4.label(y));
            for (std::size_t x = 0; x < 4; ++x) mix[x] += my[y] * slice[x];
        }
        for (std::size_t x = 0; x < 4; ++x) CHECK(std::abs(mix[x] - mx[x]) <= 1e-12);
    }
}

TEST_CASE("pushforward through identity, constant, and suit-to-color maps") {
    Alphabet a = suits();
    auto u = uniform(a);
    auto id = Channel::identity(a);
    auto pushed = pushforward(u, id);
    for (std::size_t i = 0; i < 4; ++i) CHECK(pushed[i] == doctest::Approx(0.25));

    Alphabet colors({"black", "red"});
    auto constant = Channel::constant(a, colors, "red");
    auto all_red = pushforward(u, constant);
    CHECK(all_red[0] == doctest::Approx(0.0));
    CHECK(all_red[1] == doctest::Approx(1.0));

    auto to_color = Channel::from_function(
        a, colors, [](const std::string& s) { return (s == "s" || s == "c") ? "black" : "red"; });
    auto color_dist = pushforward(u, to_color);
    CHECK(color_dist[0] == doctest::Approx(0.5));
    CHECK(color_dist[1] == doctest::Approx(0.5));

    CHECK_THROWS_WITH_AS(pushforward(uniform(colors), id), doctest::Contains("AlphabetMismatch"),
                         Error);
}

TEST_CASE("channel rows must be stochastic") {
    Alphabet ab({"a", "b"});
    CHECK_THROWS_WITH_AS(Channel(ab, ab, {0.5, 0.4, 0.5, 0.5}),
                         doctest::Contains("NotNormalized"), Error);
    CHECK(Channel::identity(ab).deterministic());
    Rng rng(3);
    CHECK(!rng.random_channel(ab, ab).deterministic());
}

TEST_CASE("extend_markov composes a certified triple") {
    Alphabet ab({"a", "b"});
    Rng rng(21);

    SUBCASE("identity channel gives z = y") {
        auto j = rng.random_joint(ab, ab);
        auto t = extend_markov(j, Channel::identity(ab));
        CHECK(t.markov_certified());
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y)
                for (std::size_t z = 0; z < 2; ++z)
                    CHECK(t.at(x, y, z) == doctest::Approx(z == y ? j.at(x, y) : 0.0));
    }

    SUBCASE("constant channel gives a degenerate z") {
        auto j = rng.random_joint(ab, ab);
        auto t = extend_markov(j, Channel::constant(ab, ab, "a"));
        auto pz = t.marginal_z();
        CHECK(pz[0] == doctest::Approx(1.0));
    }

    SUBCASE("random joint and channel: sums to 1, X-Y marginal preserved") {
        auto j = rng.random_joint(ab, ab);
        auto ch = rng.random_channel(ab, ab);
        auto t = extend_markov(j, ch);
        double total = 0.0;
        for (double v : t.probs()) total += v;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        auto jxy = t.marginal_xy();
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y)
                CHECK(std::abs(jxy.at(x, y) - j.at(x, y)) <= 1e-12);
    }

    SUBCASE("alphabet mismatch is rejected") {
        auto j = rng.random_joint(ab, ab);
        CHECK_THROWS_WITH_AS(extend_markov(j, Channel::identity(Alphabet({"p", "q", "r"}))),
                             doctest::Contains("AlphabetMismatch"), Error);
    }
}

TEST_CASE("extend_markov output carries the conditional-independence certificate") {
    Alphabet a3({"a", "b", "c"});
    Rng rng(1234);
    for (int rep = 0; rep < 25; ++rep) {
        auto t = extend_markov(rng.random_joint(a3, a3), rng.random_channel(a3, a3));
        CHECK(markov_chain_holds(t, 1e-12));
    }
}

TEST_CASE("random distributions satisfy the simplex invariants") {
    Rng rng(5);
    for (std::size_t m = 2; m <= 8; ++m) {
        Alphabet a = indexed_alphabet(m);
        for (int rep = 0; rep < 50; ++rep) {
            auto d = rng.random_distribution(a);
            double total = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                CHECK(d[i] >= 0.0);
                total += d[i];
            }
            CHECK(std::abs(total - 1.0) <= 1e-9);
        }
    }
}
