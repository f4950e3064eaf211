#include "infolab/rng.hpp"

#include <cmath>

namespace infolab {

double Rng::uniform() {
    // 53 random bits -> [0, 1); identical on every platform.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::size_t Rng::sample_index(std::span<const double> probs) {
    double u = uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        if (u < acc) return i;
    }
    // Round-off can leave acc slightly below 1; charge the last positive entry.
    for (std::size_t i = probs.size(); i-- > 0;)
        if (probs[i] > 0.0) return i;
    return probs.size() - 1;
}

std::vector<double> Rng::simplex_point(std::size_t m) {
    // -log(1-U) are iid exponentials; normalizing gives a flat Dirichlet draw.
    std::vector<double> v(m);
    double total = 0.0;
    for (auto& e : v) {
        e = -std::log1p(-uniform());
        if (e <= 0.0) e = 1e-300;
        total += e;
    }
    for (auto& e : v) e /= total;
    return v;
}

Distribution Rng::random_distribution(const Alphabet& alphabet) {
    return Distribution(alphabet, simplex_point(alphabet.size()), NormalizePolicy::normalize);
}

JointDistribution Rng::random_joint(const Alphabet& x, const Alphabet& y) {
    return JointDistribution(x, y, simplex_point(x.size() * y.size()),
                             NormalizePolicy::normalize);
}

Channel Rng::random_channel(const Alphabet& in, const Alphabet& out) {
    std::vector<double> rows;
    rows.reserve(in.size() * out.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        auto row = simplex_point(out.size());
        rows.insert(rows.end(), row.begin(), row.end());
    }
    return Channel(in, out, std::move(rows), NormalizePolicy::normalize);
}

} // namespace infolab
