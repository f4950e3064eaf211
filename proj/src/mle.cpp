#include "infolab/mle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "infolab/errors.hpp"
#include "infolab/measures.hpp"

namespace infolab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr int kFeasibilityGridPoints = 64;

void require_in_box(const ParametricFamily& family, const std::vector<double>& theta) {
    if (theta.size() != static_cast<std::size_t>(family.parameter_dim))
        fail(ErrorCode::bad_shape, "theta has wrong dimension for family " + family.name);
    for (std::size_t i = 0; i < theta.size(); ++i) {
        auto [lo, hi] = family.parameter_box[i];
        if (theta[i] < lo || theta[i] > hi)
            fail(ErrorCode::out_of_box, "theta[" + std::to_string(i) + "] = " +
                                            std::to_string(theta[i]) + " outside [" +
                                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

struct GoldenResult {
    double x = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Derivative-free minimization on [lo, hi] to absolute tolerance tol in x.
// Ties move left, so plateaus resolve toward the smaller parameter.
GoldenResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                     double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    GoldenResult result;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    const int max_iter = 200;
    while (b - a > tol && result.iterations < max_iter) {
        ++result.iterations;
        if (f2 < f1) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        }
    }
    result.converged = b - a <= tol;
    result.x = f1 <= f2 ? x1 : x2;
    return result;
}

} // namespace

double mean_log_likelihood(const ParametricFamily& family, const std::vector<double>& theta,
                           std::span<const std::string> data) {
    require_in_box(family, theta);
    if (data.empty()) fail(ErrorCode::empty_sample, "no data");
    Distribution model = family.evaluate(theta);
    // (1/n) sum_i log p_theta(x_i), accumulated through counts.
    std::vector<std::int64_t> counts(family.alphabet.size(), 0);
    for (const auto& s : data) ++counts[family.alphabet.index_of(s)];
    double total = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        if (model[i] == 0.0) return kNegInf;
        total += static_cast<double>(counts[i]) * std::log(model[i]);
    }
    return total / static_cast<double>(data.size());
}

ExtendedReal kl_objective(const ParametricFamily& family, const std::vector<double>& theta,
                          const Distribution& p_hat) {
    require_in_box(family, theta);
    return kl_divergence(p_hat, family.evaluate(theta));
}

FitResult fit(const ParametricFamily& family, std::span<const std::string> data, FitMode mode,
              double tol) {
    if (data.empty()) fail(ErrorCode::empty_sample, "no data");
    auto [p_hat, type] = empirical_from_samples(family.alphabet, data);
    (void)type;

    FitResult result;
    result.mode = mode;

    auto objective_at = [&](const std::vector<double>& theta) {
        return mode == FitMode::max_likelihood
                   ? mean_log_likelihood(family, theta, data)
                   : -kl_objective(family, theta, p_hat).to_double();
    };

    if (family.closed_form_mle) {
        result.theta_star = family.closed_form_mle(p_hat);
        result.objective_value = mode == FitMode::max_likelihood
                                     ? mean_log_likelihood(family, result.theta_star, data)
                                     : kl_objective(family, result.theta_star, p_hat).to_double();
        result.iterations = 0;
        result.converged = true;
        return result;
    }

    if (family.parameter_dim != 1)
        fail(ErrorCode::bad_input,
             "family " + family.name + " has no closed form and is not one-dimensional");

    // Probe a coarse grid to locate the feasible (finite-objective) region
    // before handing a bracket to golden section.
    auto [lo, hi] = family.parameter_box[0];
    double best_x = 0.0, best_f = kNegInf;
    bool any_finite = false;
    const double step = (hi - lo) / (kFeasibilityGridPoints - 1);
    for (int i = 0; i < kFeasibilityGridPoints; ++i) {
        double x = lo + step * i;
        double f = objective_at({x});
        if (std::isfinite(f) && (!any_finite || f > best_f)) {
            any_finite = true;
            best_f = f;
            best_x = x;
        }
    }
    if (!any_finite)
        fail(ErrorCode::no_finite_objective, "objective infinite across the whole grid");

    double bracket_lo = std::max(lo, best_x - step);
    double bracket_hi = std::min(hi, best_x + step);
    // Shrink toward the best point while an endpoint is infeasible.
    for (int guard = 0; guard < 60 && !std::isfinite(objective_at({bracket_lo})); ++guard)
        bracket_lo = 0.5 * (bracket_lo + best_x);
    for (int guard = 0; guard < 60 && !std::isfinite(objective_at({bracket_hi})); ++guard)
        bracket_hi = 0.5 * (bracket_hi + best_x);

    GoldenResult gr = golden_section_minimize([&](double x) { return -objective_at({x}); },
                                              bracket_lo, bracket_hi, tol);
    result.theta_star = {gr.x};
    result.iterations = gr.iterations;
    result.converged = gr.converged;
    result.objective_value = mode == FitMode::max_likelihood
                                 ? mean_log_likelihood(family, result.theta_star, data)
                                 : kl_objective(family, result.theta_star, p_hat).to_double();
    return result;
}

ParametricFamily categorical_family(const Alphabet& alphabet) {
    return ParametricFamily{
        .name = "categorical",
        .parameter_dim = static_cast<int>(alphabet.size()),
        .parameter_box = std::vector<std::pair<double, double>>(alphabet.size(), {0.0, 1.0}),
        .alphabet = alphabet,
        .evaluate =
            [alphabet](const std::vector<double>& theta) {
                return make_distribution(alphabet, theta, NormalizePolicy::normalize);
            },
        .closed_form_mle =
            [](const Distribution& empirical) {
                return std::vector<double>(empirical.probs().begin(), empirical.probs().end());
            },
    };
}

ParametricFamily exponential_tilt_family(const Alphabet& alphabet) {
    return ParametricFamily{
        .name = "tilt",
        .parameter_dim = 1,
        .parameter_box = {{-10.0, 10.0}},
        .alphabet = alphabet,
        .evaluate =
            [alphabet](const std::vector<double>& theta) {
                // p_theta(i) = exp(theta * i) / Z, stabilized by the max score.
                const std::size_t m = alphabet.size();
                double t = theta.at(0);
                double shift = std::max(0.0, t * static_cast<double>(m - 1));
                std::vector<double> w(m);
                for (std::size_t i = 0; i < m; ++i)
                    w[i] = std::exp(t * static_cast<double>(i) - shift);
                return make_distribution(alphabet, std::move(w), NormalizePolicy::normalize);
            },
        .closed_form_mle = nullptr,
    };
}

std::vector<ParametricFamily> builtin_families(const Alphabet& alphabet) {
    return {categorical_family(alphabet), exponential_tilt_family(alphabet)};
}

const char* fit_mode_name(FitMode mode) noexcept {
    return mode == FitMode::max_likelihood ? "max_likelihood" : "min_divergence";
}

} // namespace infolab
