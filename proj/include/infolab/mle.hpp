#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "infolab/distribution.hpp"
#include "infolab/extended_real.hpp"

namespace infolab {

// Parametric family of distributions over a fixed alphabet. evaluate() must
// return a valid Distribution for every theta in the box (the categorical
// family's all-zero corner is the one documented exception, rejected by the
// normalize policy).
struct ParametricFamily {
    std::string name;
    int parameter_dim = 0;
    std::vector<std::pair<double, double>> parameter_box; // closed per-coordinate bounds
    Alphabet alphabet;
    std::function<Distribution(const std::vector<double>&)> evaluate;
    // Set when the maximizer is known in closed form (full categorical: the
    // empirical distribution itself).
    std::function<std::vector<double>(const Distribution& empirical)> closed_form_mle;
};

enum class FitMode { max_likelihood, min_divergence };

struct FitResult {
    std::vector<double> theta_star;
    double objective_value = 0.0; // mean log-likelihood or KL, per mode
    int iterations = 0;
    bool converged = false;
    FitMode mode = FitMode::max_likelihood;
};

// (1/n) sum_i log p_theta(x_i); -inf when any observed symbol has zero mass.
double mean_log_likelihood(const ParametricFamily& family, const std::vector<double>& theta,
                           std::span<const std::string> data);

// kl(p_hat, p_theta). Related to the mean log-likelihood by
// mll = -H(p_hat) - kl whenever finite.
ExtendedReal kl_objective(const ParametricFamily& family, const std::vector<double>& theta,
                          const Distribution& p_hat);

// Maximum-likelihood / minimum-divergence fit. One-dimensional families use
// golden-section search on the box (absolute tolerance tol in theta, with a
// 64-point feasibility grid first); families with a closed form skip the
// search entirely.
FitResult fit(const ParametricFamily& family, std::span<const std::string> data, FitMode mode,
              double tol = 1e-8);

ParametricFamily categorical_family(const Alphabet& alphabet);

// p_theta(i) proportional to exp(theta * i), theta in [-10, 10].
ParametricFamily exponential_tilt_family(const Alphabet& alphabet);

std::vector<ParametricFamily> builtin_families(const Alphabet& alphabet);

const char* fit_mode_name(FitMode mode) noexcept;

} // namespace infolab
