#pragma once

#include <span>
#include <string>
#include <vector>

#include "infolab/distribution.hpp"

namespace infolab {

// Distribution over a product alphabet X x Y, stored row-major: p(x,y) at
// index x*cols + y.
class JointDistribution {
public:
    JointDistribution(Alphabet x_alphabet, Alphabet y_alphabet, std::vector<double> probs,
                      NormalizePolicy policy = NormalizePolicy::strict);

    const Alphabet& x_alphabet() const noexcept { return x_alphabet_; }
    const Alphabet& y_alphabet() const noexcept { return y_alphabet_; }
    std::size_t rows() const noexcept { return x_alphabet_.size(); }
    std::size_t cols() const noexcept { return y_alphabet_.size(); }
    double at(std::size_t x, std::size_t y) const { return probs_.at(x * cols() + y); }
    std::span<const double> probs() const noexcept { return probs_; }

    // The same mass viewed as a distribution over the product alphabet.
    Distribution flatten() const;

private:
    Alphabet x_alphabet_;
    Alphabet y_alphabet_;
    std::vector<double> probs_;
};

JointDistribution product(const Distribution& px, const Distribution& py);

Distribution marginal_x(const JointDistribution& j);
Distribution marginal_y(const JointDistribution& j);

// p(x | Y = y); throws ZeroConditioningEvent if the marginal of y vanishes.
Distribution conditional_slice(const JointDistribution& j, const std::string& y_label);

JointDistribution transpose(const JointDistribution& j);

} // namespace infolab
