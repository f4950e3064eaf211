#include "infolab/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "infolab/detail/compositions.hpp"
#include "infolab/errors.hpp"
#include "infolab/measures.hpp"
#include "infolab/rng.hpp"

namespace infolab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

double log_loss(const Distribution& p, const std::string& outcome, LogBase base) {
    double px = p.prob(outcome);
    if (px == 0.0) return kInf;
    return -std::log(px) * base_scale(base);
}

LossFunction log_loss_function(LogBase base) {
    return {"log_loss", [base](const Distribution& p, const std::string& x) {
                return log_loss(p, x, base);
            }};
}

LossFunction brier_loss_function() {
    return {"brier", [](const Distribution& p, const std::string& x) {
                std::size_t xi = p.alphabet().index_of(x);
                double total = 0.0;
                for (std::size_t y = 0; y < p.size(); ++y) {
                    double diff = (y == xi ? 1.0 : 0.0) - p[y];
                    total += diff * diff;
                }
                return total;
            }};
}

LossFunction local_brier_loss_function() {
    return {"local_brier", [](const Distribution& p, const std::string& x) {
                double d = 1.0 - p.prob(x);
                return d * d;
            }};
}

LossFunction constant_loss_function(double c) {
    return {"constant", [c](const Distribution&, const std::string&) { return c; }};
}

LossFunction affine_log_loss_function(double a, double b, LogBase base) {
    return {"affine_log_loss", [a, b, base](const Distribution& p, const std::string& x) {
                double ll = log_loss(p, x, base);
                return std::isinf(ll) ? kInf : a * ll + b;
            }};
}

double expected_loss(const LossFunction& f, const Distribution& prediction,
                     const Distribution& truth) {
    if (prediction.alphabet() != truth.alphabet())
        fail(ErrorCode::alphabet_mismatch, "prediction and truth alphabets differ");
    double total = 0.0;
    for (std::size_t x = 0; x < truth.size(); ++x) {
        if (truth[x] == 0.0) continue; // 0 * inf = 0
        double loss = f.evaluate(prediction, truth.alphabet().label(x));
        if (std::isinf(loss)) return kInf;
        total += truth[x] * loss;
    }
    return total;
}

ProperReport check_proper(const LossFunction& f, const Distribution& truth, int grid_resolution) {
    if (truth.size() > 4)
        fail(ErrorCode::alphabet_too_large, "grid search supports alphabets up to size 4");
    if (grid_resolution < 10) fail(ErrorCode::bad_input, "grid resolution must be at least 10");

    const double loss_at_truth = expected_loss(f, truth, truth);
    ProperReport report;
    report.is_minimizer = true;
    report.margin = kInf;

    std::vector<double> probs(truth.size());
    detail::for_each_composition(grid_resolution, truth.size(),
                                 [&](const std::vector<std::int64_t>& parts) {
        for (std::size_t i = 0; i < parts.size(); ++i)
            probs[i] = static_cast<double>(parts[i]) / static_cast<double>(grid_resolution);
        Distribution prediction(truth.alphabet(), probs, NormalizePolicy::normalize);
        double loss = expected_loss(f, prediction, truth);
        if (loss + 1e-10 < loss_at_truth) report.is_minimizer = false;
        bool same_as_truth = true;
        for (std::size_t i = 0; i < probs.size(); ++i)
            if (std::abs(prediction[i] - truth[i]) > 1e-12) same_as_truth = false;
        if (!same_as_truth) report.margin = std::min(report.margin, loss - loss_at_truth);
    });
    return report;
}

bool check_local(const LossFunction& f, int trials, std::uint64_t seed) {
    if (trials < 1) fail(ErrorCode::bad_input, "trials must be at least 1");
    // Construct pairs (p, x), (p', x') sharing the same probability of the
    // realized outcome but differing everywhere else, including the position
    // of the outcome in the alphabet.
    Alphabet alphabet({"a", "b", "c"});
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        double v = rng.uniform(0.05, 0.95);
        auto build = [&](std::size_t where) {
            double w = rng.uniform(0.05, 0.95);
            std::vector<double> probs(3);
            probs[where] = v;
            probs[(where + 1) % 3] = (1.0 - v) * w;
            probs[(where + 2) % 3] = (1.0 - v) * (1.0 - w);
            return Distribution(alphabet, std::move(probs), NormalizePolicy::normalize);
        };
        std::size_t i = static_cast<std::size_t>(rng.next_u64() % 3);
        std::size_t j = static_cast<std::size_t>(rng.next_u64() % 3);
        Distribution p = build(i);
        Distribution q = build(j);
        double fp = f.evaluate(p, alphabet.label(i));
        double fq = f.evaluate(q, alphabet.label(j));
        if (std::isinf(fp) != std::isinf(fq)) return false;
        if (std::isfinite(fp) && std::abs(fp - fq) > 1e-10) return false;
    }
    return true;
}

namespace {

GameRecord run_rounds(std::int64_t rounds, std::uint64_t seed,
                      const std::function<GameRound(Rng&)>& play_round) {
    if (rounds < 1) fail(ErrorCode::bad_input, "rounds must be at least 1");
    GameRecord record;
    record.rounds = rounds;
    record.seed = seed;
    record.per_round.reserve(static_cast<std::size_t>(rounds));
    Rng rng(seed);
    double total = 0.0;
    for (std::int64_t r = 0; r < rounds; ++r) {
        record.per_round.push_back(play_round(rng));
        double loss = record.per_round.back().loss;
        if (std::isinf(loss))
            ++record.infinite_rounds;
        else
            total += loss;
    }
    record.average_loss = record.infinite_rounds > 0 ? kInf
                                                     : total / static_cast<double>(rounds);
    return record;
}

} // namespace

GameRecord play_game(const Distribution& deck, const Distribution& prediction,
                     std::int64_t rounds, std::uint64_t seed) {
    if (deck.alphabet() != prediction.alphabet())
        fail(ErrorCode::alphabet_mismatch, "deck and prediction alphabets differ");
    std::vector<double> pred(prediction.probs().begin(), prediction.probs().end());
    return run_rounds(rounds, seed, [&](Rng& rng) {
        GameRound round;
        std::size_t x = rng.sample_index(deck.probs());
        round.outcome = deck.alphabet().label(x);
        round.prediction = pred;
        round.loss = prediction[x] == 0.0 ? kInf : -std::log(prediction[x]);
        return round;
    });
}

GameRecord play_game_with_side_info(
    const JointDistribution& joint,
    const std::function<Distribution(const std::string& y_label)>& strategy, std::int64_t rounds,
    std::uint64_t seed) {
    // Cache the strategy's prediction per side-information label.
    std::map<std::string, Distribution> cache;
    auto predict = [&](const std::string& y) -> const Distribution& {
        auto it = cache.find(y);
        if (it == cache.end()) it = cache.emplace(y, strategy(y)).first;
        return it->second;
    };
    return run_rounds(rounds, seed, [&](Rng& rng) {
        GameRound round;
        std::size_t flat = rng.sample_index(joint.probs());
        std::size_t x = flat / joint.cols();
        std::size_t y = flat % joint.cols();
        round.outcome = joint.x_alphabet().label(x);
        round.side_info = joint.y_alphabet().label(y);
        const Distribution& prediction = predict(round.side_info);
        if (prediction.alphabet() != joint.x_alphabet())
            fail(ErrorCode::alphabet_mismatch, "strategy prediction is not over the X alphabet");
        round.prediction.assign(prediction.probs().begin(), prediction.probs().end());
        round.loss = prediction[x] == 0.0 ? kInf : -std::log(prediction[x]);
        return round;
    });
}

std::function<Distribution(const std::string&)> conditional_strategy(
    const JointDistribution& joint) {
    return [joint](const std::string& y) { return conditional_slice(joint, y); };
}

} // namespace infolab
