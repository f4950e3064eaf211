#include "infolab/joint.hpp"

#include <cmath>
#include <numeric>

#include "infolab/errors.hpp"

namespace infolab {

namespace {

std::vector<double> validated_matrix(std::size_t rows, std::size_t cols,
                                     std::vector<double> probs, NormalizePolicy policy) {
    if (probs.size() != rows * cols)
        fail(ErrorCode::bad_shape, "expected " + std::to_string(rows * cols) +
                                       " entries, got " + std::to_string(probs.size()));
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0) || std::isnan(p)) fail(ErrorCode::negative_weight, "negative joint entry");
        total += p;
    }
    if (policy == NormalizePolicy::strict) {
        if (std::abs(total - 1.0) > kSumTolerance)
            fail(ErrorCode::not_normalized, "joint entries sum to " + std::to_string(total));
    } else {
        if (!(total > 0.0)) fail(ErrorCode::zero_total, "joint entries sum to zero");
        for (auto& p : probs) p /= total;
    }
    return probs;
}

} // namespace

JointDistribution::JointDistribution(Alphabet x_alphabet, Alphabet y_alphabet,
                                     std::vector<double> probs, NormalizePolicy policy)
    : x_alphabet_(std::move(x_alphabet)),
      y_alphabet_(std::move(y_alphabet)),
      probs_(validated_matrix(x_alphabet_.size(), y_alphabet_.size(), std::move(probs), policy)) {}

Distribution JointDistribution::flatten() const {
    return Distribution(product_alphabet(x_alphabet_, y_alphabet_), probs_,
                        NormalizePolicy::normalize);
}

JointDistribution product(const Distribution& px, const Distribution& py) {
    std::vector<double> probs(px.size() * py.size());
    for (std::size_t i = 0; i < px.size(); ++i)
        for (std::size_t j = 0; j < py.size(); ++j) probs[i * py.size() + j] = px[i] * py[j];
    return JointDistribution(px.alphabet(), py.alphabet(), std::move(probs),
                             NormalizePolicy::normalize);
}

Distribution marginal_x(const JointDistribution& j) {
    std::vector<double> sums(j.rows(), 0.0);
    for (std::size_t x = 0; x < j.rows(); ++x)
        for (std::size_t y = 0; y < j.cols(); ++y) sums[x] += j.at(x, y);
    return Distribution(j.x_alphabet(), std::move(sums), NormalizePolicy::normalize);
}

Distribution marginal_y(const JointDistribution& j) {
    std::vector<double> sums(j.cols(), 0.0);
    for (std::size_t x = 0; x < j.rows(); ++x)
        for (std::size_t y = 0; y < j.cols(); ++y) sums[y] += j.at(x, y);
    return Distribution(j.y_alphabet(), std::move(sums), NormalizePolicy::normalize);
}

Distribution conditional_slice(const JointDistribution& j, const std::string& y_label) {
    std::size_t y = j.y_alphabet().index_of(y_label);
    double py = 0.0;
    for (std::size_t x = 0; x < j.rows(); ++x) py += j.at(x, y);
    if (!(py > 0.0))
        fail(ErrorCode::zero_conditioning_event, "p_Y('" + y_label + "') = 0");
    std::vector<double> probs(j.rows());
    for (std::size_t x = 0; x < j.rows(); ++x) probs[x] = j.at(x, y) / py;
    return Distribution(j.x_alphabet(), std::move(probs), NormalizePolicy::normalize);
}

JointDistribution transpose(const JointDistribution& j) {
    std::vector<double> probs(j.rows() * j.cols());
    for (std::size_t x = 0; x < j.rows(); ++x)
        for (std::size_t y = 0; y < j.cols(); ++y) probs[y * j.rows() + x] = j.at(x, y);
    return JointDistribution(j.y_alphabet(), j.x_alphabet(), std::move(probs),
                             NormalizePolicy::normalize);
}

} // namespace infolab
