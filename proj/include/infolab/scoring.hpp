#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "infolab/distribution.hpp"
#include "infolab/extended_real.hpp"
#include "infolab/joint.hpp"

namespace infolab {

// Loss for predicting with distribution p when outcome x occurred. May
// return +inf (log loss on a zero-probability outcome).
struct LossFunction {
    std::string name;
    std::function<double(const Distribution& prediction, const std::string& outcome)> evaluate;
};

// -log p(x); +inf when p(x) = 0.
double log_loss(const Distribution& p, const std::string& outcome, LogBase base = LogBase::nats);

LossFunction log_loss_function(LogBase base = LogBase::nats);
LossFunction brier_loss_function();       // sum_y (1[y=x] - p(y))^2
LossFunction local_brier_loss_function(); // (1 - p(x))^2
LossFunction constant_loss_function(double c);
// A * (-log p(x)) + B; shares log loss's proper/local verdicts for A > 0.
LossFunction affine_log_loss_function(double a, double b, LogBase base = LogBase::nats);

// sum_x truth(x) f(prediction, x), with the convention 0 * inf = 0.
double expected_loss(const LossFunction& f, const Distribution& prediction,
                     const Distribution& truth);

struct ProperReport {
    bool is_minimizer = false; // truth beats every grid prediction within 1e-10
    double margin = 0.0;       // min over non-truth grid points of (loss - truth loss)
};

// Grid search over a barycentric simplex grid (resolution parts per
// coordinate, truth included as a candidate). Alphabets above size 4 are
// rejected; resolution must be at least 10.
ProperReport check_proper(const LossFunction& f, const Distribution& truth, int grid_resolution);

// Samples constructed pairs (p,x), (p',x') with p(x) = p'(x') and reports
// whether the losses always agree within 1e-10.
bool check_local(const LossFunction& f, int trials, std::uint64_t seed);

struct GameRound {
    std::string outcome;
    std::string side_info; // empty when the game has none
    std::vector<double> prediction;
    double loss = 0.0;
};

struct GameRecord {
    std::int64_t rounds = 0;
    std::vector<GameRound> per_round;
    double average_loss = 0.0; // +inf if any round's loss is infinite
    std::int64_t infinite_rounds = 0;
    std::uint64_t seed = 0;
};

// Repeated prediction game: draw an outcome from the deck, score the fixed
// prediction with log loss. Playing the deck itself realizes H(deck) as the
// expected loss.
GameRecord play_game(const Distribution& deck, const Distribution& prediction,
                     std::int64_t rounds, std::uint64_t seed);

// Side-information variant: draw (x,y) from the joint, reveal y, score the
// strategy's prediction of x. The conditional-slice strategy realizes H(X|Y).
GameRecord play_game_with_side_info(
    const JointDistribution& joint,
    const std::function<Distribution(const std::string& y_label)>& strategy, std::int64_t rounds,
    std::uint64_t seed);

// Strategy that predicts p(X | Y = y); slices are cached per label.
std::function<Distribution(const std::string&)> conditional_strategy(const JointDistribution& joint);

} // namespace infolab
