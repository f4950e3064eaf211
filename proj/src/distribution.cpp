#include "infolab/distribution.hpp"

#include <cmath>
#include <numeric>

#include "infolab/errors.hpp"

namespace infolab {

namespace {

std::vector<double> validated_probs(const Alphabet& alphabet, std::vector<double> weights,
                                    NormalizePolicy policy) {
    if (weights.size() != alphabet.size())
        fail(ErrorCode::bad_shape, "expected " + std::to_string(alphabet.size()) +
                                       " weights, got " + std::to_string(weights.size()));
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] >= 0.0) || std::isnan(weights[i]))
            fail(ErrorCode::negative_weight,
                 "weight for '" + alphabet.label(i) + "' is " + std::to_string(weights[i]));
    }
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (policy == NormalizePolicy::strict) {
        if (std::abs(total - 1.0) > kSumTolerance)
            fail(ErrorCode::not_normalized, "weights sum to " + std::to_string(total));
    } else {
        if (!(total > 0.0)) fail(ErrorCode::zero_total, "weights sum to zero");
        for (auto& w : weights) w /= total;
    }
    return weights;
}

} // namespace

Distribution::Distribution(Alphabet alphabet, std::vector<double> probs, NormalizePolicy policy)
    : alphabet_(std::move(alphabet)),
      probs_(validated_probs(alphabet_, std::move(probs), policy)) {}

double Distribution::prob(const std::string& label) const {
    return probs_[alphabet_.index_of(label)];
}

bool Distribution::strictly_positive() const noexcept {
    for (double p : probs_)
        if (p <= 0.0) return false;
    return true;
}

EmpiricalType::EmpiricalType(Alphabet alphabet, std::vector<std::int64_t> counts)
    : alphabet_(std::move(alphabet)), counts_(std::move(counts)) {
    if (counts_.size() != alphabet_.size())
        fail(ErrorCode::bad_shape, "count vector length does not match alphabet");
    total_ = 0;
    for (auto c : counts_) {
        if (c < 0) fail(ErrorCode::negative_weight, "negative count");
        total_ += c;
    }
    if (total_ < 1) fail(ErrorCode::empty_sample, "type has no samples");
}

Distribution EmpiricalType::distribution() const {
    std::vector<double> probs(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i)
        probs[i] = static_cast<double>(counts_[i]) / static_cast<double>(total_);
    return Distribution(alphabet_, std::move(probs), NormalizePolicy::normalize);
}

Distribution make_distribution(const Alphabet& alphabet, std::vector<double> weights,
                               NormalizePolicy policy) {
    return Distribution(alphabet, std::move(weights), policy);
}

Distribution uniform(const Alphabet& alphabet) {
    std::vector<double> probs(alphabet.size(), 1.0 / static_cast<double>(alphabet.size()));
    return Distribution(alphabet, std::move(probs), NormalizePolicy::normalize);
}

EmpiricalResult empirical_from_samples(const Alphabet& alphabet,
                                       std::span<const std::string> samples) {
    if (samples.empty()) fail(ErrorCode::empty_sample, "no samples");
    std::vector<std::int64_t> counts(alphabet.size(), 0);
    for (const auto& s : samples) ++counts[alphabet.index_of(s)];
    EmpiricalType type(alphabet, std::move(counts));
    return EmpiricalResult{type.distribution(), std::move(type)};
}

} // namespace infolab
