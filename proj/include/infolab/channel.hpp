#pragma once

#include <functional>
#include <string>
#include <vector>

#include "infolab/joint.hpp"

namespace infolab {

// Row-stochastic conditional distribution p(out | in). Deterministic
// functions are the special case of 0/1 rows.
class Channel {
public:
    Channel(Alphabet in_alphabet, Alphabet out_alphabet, std::vector<double> rows,
            NormalizePolicy policy = NormalizePolicy::strict);

    static Channel identity(const Alphabet& alphabet);
    static Channel constant(const Alphabet& in_alphabet, const Alphabet& out_alphabet,
                            const std::string& out_label);
    static Channel from_function(const Alphabet& in_alphabet, const Alphabet& out_alphabet,
                                 const std::function<std::string(const std::string&)>& g);

    const Alphabet& in_alphabet() const noexcept { return in_alphabet_; }
    const Alphabet& out_alphabet() const noexcept { return out_alphabet_; }
    double at(std::size_t in, std::size_t out) const {
        return rows_.at(in * out_alphabet_.size() + out);
    }
    Distribution row(std::size_t in) const;
    std::span<const double> rows() const noexcept { return rows_; }

    // True when every entry is exactly 0 or 1 (within 1e-12).
    bool deterministic() const noexcept;

private:
    Alphabet in_alphabet_;
    Alphabet out_alphabet_;
    std::vector<double> rows_;
};

// p_Z(z) = sum_y p_Y(y) p(z|y).
Distribution pushforward(const Distribution& py, const Channel& ch);

// Apply a channel to one coordinate of a joint, leaving the other untouched.
JointDistribution push_x(const JointDistribution& j, const Channel& ch);
JointDistribution push_y(const JointDistribution& j, const Channel& ch);

} // namespace infolab
