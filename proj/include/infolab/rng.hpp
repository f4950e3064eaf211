#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "infolab/channel.hpp"
#include "infolab/distribution.hpp"
#include "infolab/joint.hpp"

namespace infolab {

// Seeded generator with platform-independent output. The mt19937_64 engine
// is fully specified by the standard; the library distributions are not, so
// uniform doubles and index draws are derived from the raw stream directly.
// Identical seeds give identical draws on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);

    // Inverse-CDF draw from a probability vector (linear scan).
    std::size_t sample_index(std::span<const double> probs);

    // Uniform point on the simplex interior (flat Dirichlet), strictly positive.
    std::vector<double> simplex_point(std::size_t m);

    Distribution random_distribution(const Alphabet& alphabet);
    JointDistribution random_joint(const Alphabet& x, const Alphabet& y);
    Channel random_channel(const Alphabet& in, const Alphabet& out);

private:
    std::mt19937_64 engine_;
};

} // namespace infolab
