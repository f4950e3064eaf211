#include "infolab/triple.hpp"

#include <cmath>

#include "infolab/errors.hpp"

namespace infolab {

namespace {

std::vector<double> validated_tensor(std::size_t total, std::vector<double> probs,
                                     NormalizePolicy policy) {
    if (probs.size() != total) fail(ErrorCode::bad_shape, "triple tensor has wrong shape");
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0) || std::isnan(p)) fail(ErrorCode::negative_weight, "negative triple entry");
        sum += p;
    }
    if (policy == NormalizePolicy::strict) {
        if (std::abs(sum - 1.0) > kSumTolerance)
            fail(ErrorCode::not_normalized, "triple entries sum to " + std::to_string(sum));
    } else {
        if (!(sum > 0.0)) fail(ErrorCode::zero_total, "triple entries sum to zero");
        for (auto& p : probs) p /= sum;
    }
    return probs;
}

} // namespace

TripleJoint::TripleJoint(Alphabet x_alphabet, Alphabet y_alphabet, Alphabet z_alphabet,
                         std::vector<double> probs, bool markov_certified, NormalizePolicy policy)
    : x_(std::move(x_alphabet)),
      y_(std::move(y_alphabet)),
      z_(std::move(z_alphabet)),
      probs_(validated_tensor(x_.size() * y_.size() * z_.size(), std::move(probs), policy)),
      markov_certified_(markov_certified) {
    if (markov_certified_ && !markov_chain_holds(*this))
        fail(ErrorCode::bad_input, "markov certificate requested but p(z|x,y) != p(z|y)");
}

JointDistribution TripleJoint::marginal_xy() const {
    std::vector<double> probs(dim_x() * dim_y(), 0.0);
    for (std::size_t x = 0; x < dim_x(); ++x)
        for (std::size_t y = 0; y < dim_y(); ++y)
            for (std::size_t z = 0; z < dim_z(); ++z) probs[x * dim_y() + y] += at(x, y, z);
    return JointDistribution(x_, y_, std::move(probs), NormalizePolicy::normalize);
}

JointDistribution TripleJoint::marginal_xz() const {
    std::vector<double> probs(dim_x() * dim_z(), 0.0);
    for (std::size_t x = 0; x < dim_x(); ++x)
        for (std::size_t y = 0; y < dim_y(); ++y)
            for (std::size_t z = 0; z < dim_z(); ++z) probs[x * dim_z() + z] += at(x, y, z);
    return JointDistribution(x_, z_, std::move(probs), NormalizePolicy::normalize);
}

JointDistribution TripleJoint::marginal_yz() const {
    std::vector<double> probs(dim_y() * dim_z(), 0.0);
    for (std::size_t x = 0; x < dim_x(); ++x)
        for (std::size_t y = 0; y < dim_y(); ++y)
            for (std::size_t z = 0; z < dim_z(); ++z) probs[y * dim_z() + z] += at(x, y, z);
    return JointDistribution(y_, z_, std::move(probs), NormalizePolicy::normalize);
}

Distribution TripleJoint::marginal_z() const {
    std::vector<double> probs(dim_z(), 0.0);
    for (std::size_t x = 0; x < dim_x(); ++x)
        for (std::size_t y = 0; y < dim_y(); ++y)
            for (std::size_t z = 0; z < dim_z(); ++z) probs[z] += at(x, y, z);
    return Distribution(z_, std::move(probs), NormalizePolicy::normalize);
}

JointDistribution TripleJoint::group_yz() const {
    // The tensor layout is already x-major over the flattened (y,z) pairs.
    return JointDistribution(x_, product_alphabet(y_, z_),
                             std::vector<double>(probs_.begin(), probs_.end()),
                             NormalizePolicy::normalize);
}

TripleJoint TripleJoint::swap_yz() const {
    std::vector<double> probs(probs_.size());
    for (std::size_t x = 0; x < dim_x(); ++x)
        for (std::size_t y = 0; y < dim_y(); ++y)
            for (std::size_t z = 0; z < dim_z(); ++z)
                probs[(x * dim_z() + z) * dim_y() + y] = at(x, y, z);
    return TripleJoint(x_, z_, y_, std::move(probs), false, NormalizePolicy::normalize);
}

TripleJoint extend_markov(const JointDistribution& jxy, const Channel& ch) {
    if (ch.in_alphabet() != jxy.y_alphabet())
        fail(ErrorCode::alphabet_mismatch, "channel input does not match joint Y alphabet");
    const std::size_t r = ch.out_alphabet().size();
    std::vector<double> probs(jxy.rows() * jxy.cols() * r, 0.0);
    for (std::size_t x = 0; x < jxy.rows(); ++x)
        for (std::size_t y = 0; y < jxy.cols(); ++y) {
            double pxy = jxy.at(x, y);
            for (std::size_t z = 0; z < r; ++z)
                probs[(x * jxy.cols() + y) * r + z] = pxy * ch.at(y, z);
        }
    return TripleJoint(jxy.x_alphabet(), jxy.y_alphabet(), ch.out_alphabet(), std::move(probs),
                       /*markov_certified=*/true, NormalizePolicy::normalize);
}

bool markov_chain_holds(const TripleJoint& t, double tol) {
    // p(z|x,y) must match p(z|y) = p(y,z)/p(y) wherever p(x,y) > 0.
    const std::size_t k = t.dim_y();
    const std::size_t r = t.dim_z();
    std::vector<double> py(k, 0.0);
    std::vector<double> pyz(k * r, 0.0);
    for (std::size_t x = 0; x < t.dim_x(); ++x)
        for (std::size_t y = 0; y < k; ++y)
            for (std::size_t z = 0; z < r; ++z) {
                pyz[y * r + z] += t.at(x, y, z);
                py[y] += t.at(x, y, z);
            }
    for (std::size_t x = 0; x < t.dim_x(); ++x)
        for (std::size_t y = 0; y < k; ++y) {
            double pxy = 0.0;
            for (std::size_t z = 0; z < r; ++z) pxy += t.at(x, y, z);
            if (!(pxy > 0.0)) continue;
            for (std::size_t z = 0; z < r; ++z) {
                double z_given_xy = t.at(x, y, z) / pxy;
                double z_given_y = pyz[y * r + z] / py[y];
                if (std::abs(z_given_xy - z_given_y) > tol) return false;
            }
        }
    return true;
}

} // namespace infolab
