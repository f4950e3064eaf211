#pragma once

#include <cstdint>
#include <vector>

#include "infolab/distribution.hpp"
#include "infolab/extended_real.hpp"
#include "infolab/joint.hpp"
#include "infolab/triple.hpp"

namespace infolab {

// sum_x p(x) log(p(x)/q(x)) with the conventions 0 log(0/0) = 0,
// 0 log(0/q) = 0, and p(x) > 0 with q(x) = 0 giving +infinity.
ExtendedReal kl_divergence(const Distribution& p, const Distribution& q,
                           LogBase base = LogBase::nats);

// -sum_x p(x) log p(x), skipping zero entries.
double entropy(const Distribution& p, LogBase base = LogBase::nats);

// log m - kl(p, uniform); agrees with entropy() within 1e-10.
double entropy_via_divergence(const Distribution& p, LogBase base = LogBase::nats);

// First-order Taylor remainder of -H at q, evaluated at p. Coincides with the
// KL divergence on the simplex interior; q must be strictly positive.
ExtendedReal bregman_divergence(const Distribution& p, const Distribution& q,
                                LogBase base = LogBase::nats);

double joint_entropy(const JointDistribution& j, LogBase base = LogBase::nats);

// H(X|Y), computed both as -sum p(x,y) log p(x|y) and as H(X,Y) - H(Y); the
// two routes are cross-checked within 1e-10 on every call.
double conditional_entropy(const JointDistribution& j, LogBase base = LogBase::nats);

enum class MiMethod {
    definition,                      // H(X) - H(X|Y)
    divergence_from_product,         // kl(p_XY, p_X x p_Y)
    expected_conditional_divergence, // E_Y[ kl(p_X|Y, p_X) ]
};

double mutual_information(const JointDistribution& j, MiMethod method = MiMethod::definition,
                          LogBase base = LogBase::nats);

// I(X,Y|Z) = sum_z p_Z(z) kl(p_XY|z, p_X|z x p_Y|z); slices with p_Z(z) = 0
// contribute nothing.
double conditional_mutual_information(const TripleJoint& t, LogBase base = LogBase::nats);

struct GibbsStationarityReport {
    double step = 0.0;
    int directions = 0;
    bool all_directions_positive = false; // kl(p, p+v) > 0 for every tangent v
    double min_perturbed_divergence = 0.0;
    std::vector<double> gradient;         // finite-difference d/dq kl(p, q) at q = p
    double gradient_spread = 0.0;         // max - min over coordinates
};

// Numerical check of the stationarity behind Gibbs' inequality: perturbing q
// away from p along the simplex tangent raises the divergence, and the
// gradient at q = p is the constant vector -1 (natural log).
GibbsStationarityReport gibbs_stationarity_check(const Distribution& p, double step,
                                                 int directions = 20, std::uint64_t seed = 0);

} // namespace infolab
