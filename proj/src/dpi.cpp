#include "infolab/dpi.hpp"

#include <cmath>

#include "infolab/errors.hpp"
#include "infolab/measures.hpp"

namespace infolab {

namespace {

constexpr double kDpiTolerance = 1e-10;

void require_deterministic_endomorphism(const Channel& ch, const Alphabet& alphabet,
                                        const char* which) {
    if (!(ch.in_alphabet() == alphabet) || !(ch.out_alphabet() == alphabet))
        fail(ErrorCode::not_endomorphism,
             std::string(which) + " must map the alphabet to itself");
    if (!ch.deterministic())
        fail(ErrorCode::not_deterministic, std::string(which) + " has non-0/1 rows");
}

} // namespace

TripleJoint triple_from_markov(const JointDistribution& jxy, const Channel& ch) {
    return extend_markov(jxy, ch);
}

DpiReport analyze(const TripleJoint& t, LogBase base) {
    DpiReport report;
    report.markov_certified = t.markov_certified();
    report.i_xy = mutual_information(t.marginal_xy(), MiMethod::definition, base);
    report.i_xz = mutual_information(t.marginal_xz(), MiMethod::definition, base);
    report.i_x_yz = mutual_information(t.group_yz(), MiMethod::definition, base);
    report.i_xy_given_z = conditional_mutual_information(t, base);
    report.i_xz_given_y = conditional_mutual_information(t.swap_yz(), base);
    report.dpi_holds = report.i_xz <= report.i_xy + kDpiTolerance;
    report.chain_identity_residual =
        std::abs(report.i_x_yz - report.i_xz - report.i_xy_given_z);
    return report;
}

std::vector<NamedTriple> conditional_mi_sign_gallery() {
    Alphabet bit({"0", "1"});

    // XOR: X and Y independent fair bits, Z = X xor Y. Pairwise independent,
    // yet Z reveals the relation: I(X,Y) = 0 while I(X,Y|Z) = log 2.
    std::vector<double> xor_probs(8, 0.0);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) xor_probs[(x * 2 + y) * 2 + (x ^ y)] = 0.25;
    TripleJoint xor_triple(bit, bit, bit, std::move(xor_probs), /*markov_certified=*/false);

    // Copy: X = Y a fair bit, Z = Y. Knowing Z leaves nothing for Y to add:
    // I(X,Y) = log 2 while I(X,Y|Z) = 0.
    std::vector<double> copy_pair(4, 0.0);
    copy_pair[0] = 0.5;
    copy_pair[3] = 0.5;
    JointDistribution jxy(bit, bit, std::move(copy_pair));
    TripleJoint copy_triple = extend_markov(jxy, Channel::identity(bit));

    return {{"xor", std::move(xor_triple)}, {"copy", std::move(copy_triple)}};
}

std::vector<double> particle_demo(const JointDistribution& initial_joint, const Channel& gx,
                                  const Channel& gy, int steps, LogBase base) {
    require_deterministic_endomorphism(gx, initial_joint.x_alphabet(), "gx");
    require_deterministic_endomorphism(gy, initial_joint.y_alphabet(), "gy");
    if (steps < 0) fail(ErrorCode::bad_input, "steps must be nonnegative");

    std::vector<double> sequence;
    sequence.reserve(static_cast<std::size_t>(steps) + 1);
    JointDistribution joint = initial_joint;
    sequence.push_back(mutual_information(joint, MiMethod::definition, base));
    for (int t = 0; t < steps; ++t) {
        // One time step: each particle evolves separately, Y first then X.
        joint = push_y(joint, gy);
        joint = push_x(joint, gx);
        sequence.push_back(mutual_information(joint, MiMethod::definition, base));
    }
    return sequence;
}

} // namespace infolab
