#pragma once

#include <string>
#include <vector>

#include "infolab/channel.hpp"
#include "infolab/extended_real.hpp"
#include "infolab/joint.hpp"
#include "infolab/triple.hpp"

namespace infolab {

struct DpiReport {
    double i_xy = 0.0;
    double i_xz = 0.0;
    double i_x_yz = 0.0;        // I(X, (Y,Z)) with the pair flattened
    double i_xy_given_z = 0.0;
    double i_xz_given_y = 0.0;
    bool markov_certified = false;
    bool dpi_holds = false;     // i_xz <= i_xy + 1e-10
    double chain_identity_residual = 0.0; // |i_x_yz - i_xz - i_xy_given_z|
};

// Compose a joint with a channel on Y into a Markov triple X - Y - Z.
TripleJoint triple_from_markov(const JointDistribution& jxy, const Channel& ch);

// All five informations plus the chain-rule residual and the processing
// verdict. The chain identity holds for any triple; the DPI verdict is only
// guaranteed when the triple carries the Markov certificate.
DpiReport analyze(const TripleJoint& t, LogBase base = LogBase::nats);

struct NamedTriple {
    std::string name;
    TripleJoint triple;
};

// The two canonical triples showing that conditioning can push mutual
// information in either direction: the XOR triple (I(X,Y) = 0 yet
// I(X,Y|Z) = log 2, not Markov) and the copy triple (Z = Y, I(X,Y|Z) = 0).
std::vector<NamedTriple> conditional_mi_sign_gallery();

// Two noninteracting particles evolving by deterministic maps gy then gx per
// step; returns I(X_t, Y_t) for t = 0..steps, nonincreasing by the DPI.
std::vector<double> particle_demo(const JointDistribution& initial_joint, const Channel& gx,
                                  const Channel& gy, int steps, LogBase base = LogBase::nats);

} // namespace infolab
