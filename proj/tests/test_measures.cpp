#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "infolab/errors.hpp"
#include "infolab/measures.hpp"
#include "infolab/rng.hpp"

using namespace infolab;

namespace {

constexpr double kLn2 = std::numbers::ln2;

Alphabet suits() { return Alphabet({"s", "c", "d", "h"}); }

Distribution red_only() {
    return make_distribution(suits(), {0.0, 0.0, 0.5, 0.5}, NormalizePolicy::strict);
}

JointDistribution suit_color_joint() {
    Alphabet colors({"black", "red"});
    std::vector<double> probs = {0.25, 0.0, 0.25, 0.0, 0.0, 0.25, 0.0, 0.25};
    return JointDistribution(suits(), colors, probs);
}

JointDistribution diagonal_joint(std::size_t m) {
    Alphabet a = indexed_alphabet(m);
    std::vector<double> probs(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) probs[i * m + i] = 1.0 / static_cast<double>(m);
    return JointDistribution(a, a, probs);
}

} // namespace

TEST_CASE("kl divergence of the red-only deck from the uniform belief") {
    auto d = kl_divergence(red_only(), uniform(suits()));
    REQUIRE(d.is_finite());
    CHECK(d.value() == doctest::Approx(kLn2).epsilon(1e-12));
}

TEST_CASE("kl divergence is zero at p = q") {
    Rng rng(42);
    for (std::size_t m = 2; m <= 6; ++m) {
        auto p = rng.random_distribution(indexed_alphabet(m));
        CHECK(kl_divergence(p, p).value() == 0.0);
    }
}

TEST_CASE("kl divergence is infinite on support violation") {
    Alphabet ab({"a", "b"});
    auto p = uniform(ab);
    auto q = make_distribution(ab, {1.0, 0.0}, NormalizePolicy::strict);
    CHECK(kl_divergence(p, q).is_infinite());
    CHECK_THROWS_AS(kl_divergence(p, q).value(), std::logic_error);
    // The reverse direction is fine: 0 log(0/q) = 0.
    CHECK(kl_divergence(q, p).value() == doctest::Approx(kLn2));
}

TEST_CASE("kl divergence matches the two-term summation oracle") {
    Alphabet ab({"a", "b"});
    auto p = uniform(ab);
    auto q = make_distribution(ab, {0.25, 0.75}, NormalizePolicy::strict);
    double oracle = 0.5 * std::log(0.5 / 0.25) + 0.5 * std::log(0.5 / 0.75);
    CHECK(kl_divergence(p, q).value() == doctest::Approx(0.14384103622589042).epsilon(1e-15));
    CHECK(kl_divergence(p, q).value() == doctest::Approx(oracle).epsilon(1e-15));
}

TEST_CASE("kl divergence rejects mismatched alphabets") {
    CHECK_THROWS_WITH_AS(kl_divergence(uniform(suits()), uniform(Alphabet({"a", "b"}))),
                         doctest::Contains("AlphabetMismatch"), Error);
}

TEST_CASE("gibbs inequality over seeded random pairs") {
    // 1e4 pairs across alphabet sizes 2..8, every tenth pair with q = p.
    Rng rng(2024);
    int checked = 0;
    for (int rep = 0; checked < 10000; ++rep) {
        std::size_t m = 2 + static_cast<std::size_t>(rep % 7);
        Alphabet a = indexed_alphabet(m);
        auto p = rng.random_distribution(a);
        auto q = (rep % 10 == 9) ? p : rng.random_distribution(a);
        double d = kl_divergence(p, q).value();
        ++checked;
        CHECK(d >= -1e-12);
        if (d < 1e-12) {
            double max_diff = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                max_diff = std::max(max_diff, std::abs(p[i] - q[i]));
            CHECK(max_diff < 1e-9);
        }
    }
    CHECK(checked == 10000);
}

TEST_CASE("entropy of the paper's distributions") {
    CHECK(entropy(uniform(suits())) == doctest::Approx(2 * kLn2).epsilon(1e-12));
    auto point = make_distribution(suits(), {0.0, 1.0, 0.0, 0.0}, NormalizePolicy::strict);
    CHECK(entropy(point) == 0.0);
    // Three-term oracle for (1/2,1/4,1/4).
    auto p = make_distribution(Alphabet({"a", "b", "c"}), {0.5, 0.25, 0.25},
                               NormalizePolicy::strict);
    double oracle = -(0.5 * std::log(0.5) + 0.25 * std::log(0.25) + 0.25 * std::log(0.25));
    CHECK(entropy(p) == doctest::Approx(oracle).epsilon(1e-15));
    CHECK(entropy(p) == doctest::Approx(1.5 * kLn2).epsilon(1e-12));
}

TEST_CASE("entropy bounds with equality only at uniform") {
    Rng rng(11);
    for (std::size_t m = 2; m <= 8; ++m) {
        Alphabet a = indexed_alphabet(m);
        double logm = std::log(static_cast<double>(m));
        CHECK(entropy(uniform(a)) == doctest::Approx(logm).epsilon(1e-12));
        for (int rep = 0; rep < 200; ++rep) {
            auto p = rng.random_distribution(a);
            double h = entropy(p);
            CHECK(h >= 0.0);
            CHECK(h <= logm + 1e-12);
            if (h >= logm - 1e-12) {
                for (std::size_t i = 0; i < m; ++i)
                    CHECK(std::abs(p[i] - 1.0 / static_cast<double>(m)) < 1e-9);
            }
        }
    }
}

TEST_CASE("entropy via divergence from uniform") {
    CHECK(entropy_via_divergence(uniform(indexed_alphabet(5))) ==
          doctest::Approx(std::log(5.0)).epsilon(1e-12));
    auto point = make_distribution(Alphabet({"a", "b"}), {1.0, 0.0}, NormalizePolicy::strict);
    CHECK(entropy_via_divergence(point) == doctest::Approx(0.0).epsilon(1e-12));

    Rng rng(33);
    for (int rep = 0; rep < 100; ++rep) {
        std::size_t m = 2 + static_cast<std::size_t>(rep % 6);
        auto p = rng.random_distribution(indexed_alphabet(m));
        CHECK(std::abs(entropy(p) - entropy_via_divergence(p)) <= 1e-10);
    }
}

TEST_CASE("bregman divergence of the entropy coincides with kl") {
    auto u = uniform(suits());
    CHECK(bregman_divergence(u, u).value() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(bregman_divergence(red_only(), u).value() == doctest::Approx(kLn2).epsilon(1e-10));

    Rng rng(77);
    for (int rep = 0; rep < 300; ++rep) {
        std::size_t m = 2 + static_cast<std::size_t>(rep % 5);
        Alphabet a = indexed_alphabet(m);
        auto p = rng.random_distribution(a);
        auto q = rng.random_distribution(a);
        CHECK(std::abs(bregman_divergence(p, q).value() - kl_divergence(p, q).value()) <= 1e-10);
    }

    CHECK_THROWS_WITH_AS(bregman_divergence(u, red_only()), doctest::Contains("BoundaryPoint"),
                         Error);
}

TEST_CASE("joint entropy") {
    // Suit/color: color is a function of suit, so H(X,Y) = H(X) = 2 log 2.
    // Enumeration oracle: four cells of 1/4 each.
    auto j = suit_color_joint();
    double oracle = 0.0;
    for (double cell : j.probs())
        if (cell > 0.0) oracle -= cell * std::log(cell);
    CHECK(joint_entropy(j) == doctest::Approx(oracle).epsilon(1e-15));
    CHECK(joint_entropy(j) == doctest::Approx(2 * kLn2).epsilon(1e-12));

    Alphabet ab({"a", "b"});
    CHECK(joint_entropy(product(uniform(ab), uniform(ab))) ==
          doctest::Approx(2 * kLn2).epsilon(1e-12));

    std::vector<double> point = {1.0, 0.0, 0.0, 0.0};
    CHECK(joint_entropy(JointDistribution(ab, ab, point)) == 0.0);
}

TEST_CASE("conditional entropy") {
    CHECK(conditional_entropy(suit_color_joint()) == doctest::Approx(kLn2).epsilon(1e-12));

    // Independent joint: conditioning on Y changes nothing.
    Alphabet ab({"a", "b"});
    auto px = make_distribution(ab, {0.3, 0.7}, NormalizePolicy::strict);
    auto j = product(px, uniform(ab));
    CHECK(conditional_entropy(j) == doctest::Approx(entropy(px)).epsilon(1e-12));

    // Fully informative side information.
    CHECK(conditional_entropy(diagonal_joint(4)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("conditioning reduces entropy") {
    Rng rng(505);
    for (int rep = 0; rep < 500; ++rep) {
        std::size_t m = 2 + static_cast<std::size_t>(rep % 5);
        std::size_t k = 2 + static_cast<std::size_t>((rep / 5) % 5);
        auto j = rng.random_joint(indexed_alphabet(m), indexed_alphabet(k));
        CHECK(conditional_entropy(j) <= entropy(marginal_x(j)) + 1e-12);
    }
}

TEST_CASE("mutual information three ways") {
    auto j = suit_color_joint();
    CHECK(mutual_information(j, MiMethod::definition) == doctest::Approx(kLn2).epsilon(1e-12));
    CHECK(mutual_information(j, MiMethod::divergence_from_product) ==
          doctest::Approx(kLn2).epsilon(1e-12));
    CHECK(mutual_information(j, MiMethod::expected_conditional_divergence) ==
          doctest::Approx(kLn2).epsilon(1e-12));

    // Suit and face value are independent: MI vanishes.
    std::vector<std::string> values;
    for (int v = 1; v <= 13; ++v) values.push_back(std::to_string(v));
    auto indep = product(uniform(suits()), uniform(Alphabet(values)));
    for (auto method : {MiMethod::definition, MiMethod::divergence_from_product,
                        MiMethod::expected_conditional_divergence})
        CHECK(std::abs(mutual_information(indep, method)) <= 1e-12);

    // Y = X uniform on m: I(X,X) = H(X) = log m.
    for (std::size_t m : {std::size_t{2}, std::size_t{3}, std::size_t{5}}) {
        CHECK(mutual_information(diagonal_joint(m)) ==
              doctest::Approx(std::log(static_cast<double>(m))).epsilon(1e-12));
    }
}

TEST_CASE("mutual information equivalence and symmetry on random joints") {
    Rng rng(314);
    for (int rep = 0; rep < 1000; ++rep) {
        std::size_t m = 2 + static_cast<std::size_t>(rep % 5);
        std::size_t k = 2 + static_cast<std::size_t>((rep / 5) % 5);
        auto j = rng.random_joint(indexed_alphabet(m), indexed_alphabet(k));
        double a = mutual_information(j, MiMethod::definition);
        double b = mutual_information(j, MiMethod::divergence_from_product);
        double c = mutual_information(j, MiMethod::expected_conditional_divergence);
        CHECK(std::abs(a - b) <= 1e-10);
        CHECK(std::abs(a - c) <= 1e-10);
        CHECK(std::abs(b - c) <= 1e-10);
        CHECK(a >= -1e-12);
        CHECK(std::abs(a - mutual_information(transpose(j))) <= 1e-10);
    }
}

TEST_CASE("conditional mutual information") {
    Alphabet bit({"0", "1"});

    SUBCASE("xor triple by exact enumeration") {
        // X, Y independent fair bits, Z = X xor Y: 4 cells of 1/4.
        std::vector<double> probs(8, 0.0);
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y) probs[(x * 2 + y) * 2 + (x ^ y)] = 0.25;
        TripleJoint t(bit, bit, bit, probs);
        CHECK(std::abs(mutual_information(t.marginal_xy())) <= 1e-12);
        // Enumeration oracle: each z slice is a 2x2 joint with two cells of
        // 1/2 and uniform marginals, so each contributes log 2.
        double oracle = 0.0;
        for (std::size_t z = 0; z < 2; ++z) oracle += 0.5 * std::log(2.0);
        CHECK(conditional_mutual_information(t) == doctest::Approx(oracle).epsilon(1e-12));
        CHECK(conditional_mutual_information(t) == doctest::Approx(kLn2).epsilon(1e-12));
    }

    SUBCASE("constant z leaves plain mutual information") {
        Rng rng(8);
        auto j = rng.random_joint(bit, bit);
        auto t = extend_markov(j, Channel::constant(bit, bit, "0"));
        CHECK(conditional_mutual_information(t) ==
              doctest::Approx(mutual_information(j)).epsilon(1e-10));
    }

    SUBCASE("z = y kills the conditional information") {
        Rng rng(9);
        auto j = rng.random_joint(bit, bit);
        auto t = extend_markov(j, Channel::identity(bit));
        CHECK(std::abs(conditional_mutual_information(t)) <= 1e-12);
    }
}

TEST_CASE("gibbs stationarity check") {
    SUBCASE("uniform(3), step 1e-3") {
        auto report = gibbs_stationarity_check(uniform(Alphabet({"a", "b", "c"})), 1e-3, 20, 1);
        CHECK(report.all_directions_positive);
        CHECK(report.min_perturbed_divergence > 0.0);
        for (double g : report.gradient) CHECK(g == doctest::Approx(-1.0).epsilon(1e-4));
        CHECK(report.gradient_spread < 1e-4);
    }

    SUBCASE("skewed interior point, step 1e-4") {
        auto p = make_distribution(Alphabet({"a", "b", "c"}), {0.7, 0.2, 0.1},
                                   NormalizePolicy::strict);
        auto report = gibbs_stationarity_check(p, 1e-4, 20, 2);
        CHECK(report.all_directions_positive);
        // Finite-difference oracle for the first coordinate: central
        // difference of the raw divergence formula in q_0 alone.
        double h = 1e-4;
        auto raw = [&](double q0) { return 0.7 * (std::log(0.7) - std::log(q0)); };
        double oracle = (raw(0.7 + h) - raw(0.7 - h)) / (2 * h);
        CHECK(report.gradient[0] == doctest::Approx(oracle).epsilon(1e-10));
        CHECK(report.gradient_spread < 1e-4);
        for (double g : report.gradient) CHECK(g == doctest::Approx(-1.0).epsilon(1e-4));
    }

    SUBCASE("boundary points are rejected") {
        CHECK_THROWS_WITH_AS(gibbs_stationarity_check(red_only(), 1e-3),
                             doctest::Contains("BoundaryPoint"), Error);
        // Step too big to stay inside the simplex.
        CHECK_THROWS_WITH_AS(gibbs_stationarity_check(uniform(suits()), 0.5),
                             doctest::Contains("BoundaryPoint"), Error);
    }
}

TEST_CASE("base consistency: bits times ln 2 equals nats") {
    Rng rng(616);
    Alphabet a = indexed_alphabet(4);
    auto p = rng.random_distribution(a);
    auto q = rng.random_distribution(a);
    auto j = rng.random_joint(a, a);
    auto t = extend_markov(j, rng.random_channel(a, a));

    auto both_match = [](double nats, double bits) {
        CHECK(std::abs(bits * kLn2 - nats) <= 1e-12);
    };
    both_match(kl_divergence(p, q).value(), kl_divergence(p, q, LogBase::bits).value());
    both_match(entropy(p), entropy(p, LogBase::bits));
    both_match(entropy_via_divergence(p), entropy_via_divergence(p, LogBase::bits));
    both_match(bregman_divergence(p, q).value(),
               bregman_divergence(p, q, LogBase::bits).value());
    both_match(joint_entropy(j), joint_entropy(j, LogBase::bits));
    both_match(conditional_entropy(j), conditional_entropy(j, LogBase::bits));
    both_match(mutual_information(j), mutual_information(j, MiMethod::definition, LogBase::bits));
    both_match(conditional_mutual_information(t),
               conditional_mutual_information(t, LogBase::bits));
}
