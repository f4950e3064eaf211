#include "infolab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "infolab/errors.hpp"
#include "infolab/rng.hpp"

namespace infolab {

double base_scale(LogBase base) noexcept {
    return base == LogBase::nats ? 1.0 : 1.0 / std::numbers::ln2;
}

const char* base_name(LogBase base) noexcept {
    return base == LogBase::nats ? "nats" : "bits";
}

namespace {

void require_same_alphabet(const Distribution& p, const Distribution& q) {
    if (p.alphabet() != q.alphabet())
        fail(ErrorCode::alphabet_mismatch, "distributions live on different alphabets");
}

// sum_i p_i (log p_i - log q_i) over raw nonnegative vectors, with the
// 0 log 0 conventions. Differences of logs rather than log of the ratio keep
// tiny q entries out of overflow territory. Returns +inf on support violation.
double kl_nats_raw(std::span<const double> p, std::span<const double> q) {
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
        sum += p[i] * (std::log(p[i]) - std::log(q[i]));
    }
    return sum;
}

double entropy_nats(std::span<const double> probs) {
    double h = 0.0;
    for (double p : probs)
        if (p > 0.0) h -= p * std::log(p);
    return h;
}

} // namespace

ExtendedReal kl_divergence(const Distribution& p, const Distribution& q, LogBase base) {
    require_same_alphabet(p, q);
    double nats = kl_nats_raw(p.probs(), q.probs());
    if (std::isinf(nats)) return ExtendedReal::infinity();
    return ExtendedReal(nats * base_scale(base));
}

double entropy(const Distribution& p, LogBase base) {
    return entropy_nats(p.probs()) * base_scale(base);
}

double entropy_via_divergence(const Distribution& p, LogBase base) {
    double m = static_cast<double>(p.size());
    double d = kl_divergence(p, uniform(p.alphabet())).value(); // uniform has full support
    return (std::log(m) - d) * base_scale(base);
}

ExtendedReal bregman_divergence(const Distribution& p, const Distribution& q, LogBase base) {
    require_same_alphabet(p, q);
    if (!q.strictly_positive())
        fail(ErrorCode::boundary_point, "gradient of H undefined where q has a zero entry");
    // -[H(p) - H(q) - <grad H(q), p - q>] with grad H(q)_i = -(1 + log q_i).
    double hp = entropy_nats(p.probs());
    double hq = entropy_nats(q.probs());
    double inner = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        inner += -(1.0 + std::log(q[i])) * (p[i] - q[i]);
    return ExtendedReal(-(hp - hq - inner) * base_scale(base));
}

double joint_entropy(const JointDistribution& j, LogBase base) {
    return entropy_nats(j.probs()) * base_scale(base);
}

double conditional_entropy(const JointDistribution& j, LogBase base) {
    Distribution py = marginal_y(j);
    // Direct form of H(X|Y).
    double direct = 0.0;
    for (std::size_t x = 0; x < j.rows(); ++x)
        for (std::size_t y = 0; y < j.cols(); ++y) {
            double pxy = j.at(x, y);
            if (pxy == 0.0) continue;
            direct -= pxy * (std::log(pxy) - std::log(py[y]));
        }
    // Cross-check against H(X,Y) - H(Y); disagreement means a logic error.
    double via_chain = entropy_nats(j.probs()) - entropy_nats(py.probs());
    if (std::abs(direct - via_chain) > 1e-10)
        throw std::logic_error("conditional entropy routes disagree");
    return direct * base_scale(base);
}

double mutual_information(const JointDistribution& j, MiMethod method, LogBase base) {
    switch (method) {
        case MiMethod::definition:
            return (entropy_nats(marginal_x(j).probs()) - conditional_entropy(j, LogBase::nats)) *
                   base_scale(base);
        case MiMethod::divergence_from_product: {
            JointDistribution indep = product(marginal_x(j), marginal_y(j));
            return kl_nats_raw(j.probs(), indep.probs()) * base_scale(base);
        }
        case MiMethod::expected_conditional_divergence: {
            Distribution px = marginal_x(j);
            Distribution py = marginal_y(j);
            double sum = 0.0;
            for (std::size_t y = 0; y < j.cols(); ++y) {
                if (py[y] == 0.0) continue;
                std::vector<double> slice(j.rows());
                for (std::size_t x = 0; x < j.rows(); ++x) slice[x] = j.at(x, y) / py[y];
                sum += py[y] * kl_nats_raw(slice, px.probs());
            }
            return sum * base_scale(base);
        }
    }
    throw std::logic_error("unreachable");
}

double conditional_mutual_information(const TripleJoint& t, LogBase base) {
    Distribution pz = t.marginal_z();
    double sum = 0.0;
    for (std::size_t z = 0; z < t.dim_z(); ++z) {
        if (pz[z] == 0.0) continue;
        std::vector<double> slice(t.dim_x() * t.dim_y());
        for (std::size_t x = 0; x < t.dim_x(); ++x)
            for (std::size_t y = 0; y < t.dim_y(); ++y)
                slice[x * t.dim_y() + y] = t.at(x, y, z) / pz[z];
        // MI of the conditional slice = kl(slice, product of its marginals).
        std::vector<double> sx(t.dim_x(), 0.0), sy(t.dim_y(), 0.0);
        for (std::size_t x = 0; x < t.dim_x(); ++x)
            for (std::size_t y = 0; y < t.dim_y(); ++y) {
                sx[x] += slice[x * t.dim_y() + y];
                sy[y] += slice[x * t.dim_y() + y];
            }
        std::vector<double> prod(slice.size());
        for (std::size_t x = 0; x < t.dim_x(); ++x)
            for (std::size_t y = 0; y < t.dim_y(); ++y)
                prod[x * t.dim_y() + y] = sx[x] * sy[y];
        sum += pz[z] * kl_nats_raw(slice, prod);
    }
    return sum * base_scale(base);
}

GibbsStationarityReport gibbs_stationarity_check(const Distribution& p, double step,
                                                 int directions, std::uint64_t seed) {
    if (!p.strictly_positive())
        fail(ErrorCode::boundary_point, "stationarity check needs p in the simplex interior");
    double pmin = *std::min_element(p.probs().begin(), p.probs().end());
    if (!(step > 0.0) || step >= pmin)
        fail(ErrorCode::boundary_point, "step must lie in (0, min p) to keep q nonnegative");

    const std::size_t m = p.size();
    GibbsStationarityReport report;
    report.step = step;
    report.directions = directions;
    report.min_perturbed_divergence = std::numeric_limits<double>::infinity();
    report.all_directions_positive = true;

    Rng rng(seed);
    std::vector<double> q(m);
    for (int k = 0; k < directions; ++k) {
        // Random tangent direction: zero mean, norm = step.
        std::vector<double> v(m);
        double norm = 0.0;
        do {
            double mean = 0.0;
            for (auto& e : v) {
                e = rng.uniform(-1.0, 1.0);
                mean += e;
            }
            mean /= static_cast<double>(m);
            norm = 0.0;
            for (auto& e : v) {
                e -= mean;
                norm += e * e;
            }
            norm = std::sqrt(norm);
        } while (norm < 1e-12);
        for (std::size_t i = 0; i < m; ++i) q[i] = p[i] + v[i] * (step / norm);
        double d = kl_nats_raw(p.probs(), q);
        report.min_perturbed_divergence = std::min(report.min_perturbed_divergence, d);
        if (!(d > 0.0)) report.all_directions_positive = false;
    }

    // Central finite differences of q -> kl(p, q) at q = p, one coordinate at
    // a time on the raw (unnormalized) formula; analytically -p_i/q_i = -1.
    report.gradient.resize(m);
    std::vector<double> qp(p.probs().begin(), p.probs().end());
    std::vector<double> qm(qp);
    for (std::size_t i = 0; i < m; ++i) {
        qp[i] = p[i] + step;
        qm[i] = p[i] - step;
        report.gradient[i] = (kl_nats_raw(p.probs(), qp) - kl_nats_raw(p.probs(), qm)) / (2 * step);
        qp[i] = p[i];
        qm[i] = p[i];
    }
    auto [lo, hi] = std::minmax_element(report.gradient.begin(), report.gradient.end());
    report.gradient_spread = *hi - *lo;
    return report;
}

} // namespace infolab
