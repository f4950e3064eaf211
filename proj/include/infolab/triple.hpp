#pragma once

#include <span>
#include <vector>

#include "infolab/channel.hpp"
#include "infolab/joint.hpp"

namespace infolab {

// Three-variable joint p(x,y,z), stored x-major then y then z. When
// markov_certified is set the chain X - Y - Z holds: p(z|x,y) = p(z|y)
// wherever p(x,y) > 0, verified at construction within 1e-10.
class TripleJoint {
public:
    TripleJoint(Alphabet x_alphabet, Alphabet y_alphabet, Alphabet z_alphabet,
                std::vector<double> probs, bool markov_certified = false,
                NormalizePolicy policy = NormalizePolicy::strict);

    const Alphabet& x_alphabet() const noexcept { return x_; }
    const Alphabet& y_alphabet() const noexcept { return y_; }
    const Alphabet& z_alphabet() const noexcept { return z_; }
    std::size_t dim_x() const noexcept { return x_.size(); }
    std::size_t dim_y() const noexcept { return y_.size(); }
    std::size_t dim_z() const noexcept { return z_.size(); }
    double at(std::size_t x, std::size_t y, std::size_t z) const {
        return probs_.at((x * y_.size() + y) * z_.size() + z);
    }
    std::span<const double> probs() const noexcept { return probs_; }
    bool markov_certified() const noexcept { return markov_certified_; }

    JointDistribution marginal_xy() const;
    JointDistribution marginal_xz() const;
    JointDistribution marginal_yz() const;
    Distribution marginal_z() const;

    // X against the pair (Y,Z) flattened to a single alphabet.
    JointDistribution group_yz() const;

    // Exchange the roles of Y and Z (drops any Markov certificate).
    TripleJoint swap_yz() const;

private:
    Alphabet x_, y_, z_;
    std::vector<double> probs_;
    bool markov_certified_;
};

// p(x,y,z) = p(x,y) ch(z|y); the result satisfies Z independent of X given Y
// by construction and is returned with the Markov certificate set.
TripleJoint extend_markov(const JointDistribution& jxy, const Channel& ch);

// Certificate check for the chain X - Y - Z: p(z|x,y) = p(z|y) wherever
// p(x,y) > 0, within tol.
bool markov_chain_holds(const TripleJoint& t, double tol = 1e-10);

} // namespace infolab
