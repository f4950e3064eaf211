#include "infolab/channel.hpp"

#include <cmath>

#include "infolab/errors.hpp"

namespace infolab {

namespace {

std::vector<double> validated_rows(const Alphabet& in, const Alphabet& out,
                                   std::vector<double> rows, NormalizePolicy policy) {
    const std::size_t k = in.size();
    const std::size_t r = out.size();
    if (rows.size() != k * r) fail(ErrorCode::bad_shape, "channel matrix has wrong shape");
    for (std::size_t i = 0; i < k; ++i) {
        double total = 0.0;
        for (std::size_t j = 0; j < r; ++j) {
            double v = rows[i * r + j];
            if (!(v >= 0.0) || std::isnan(v))
                fail(ErrorCode::negative_weight, "negative channel entry in row " + in.label(i));
            total += v;
        }
        if (policy == NormalizePolicy::strict) {
            if (std::abs(total - 1.0) > kSumTolerance)
                fail(ErrorCode::not_normalized,
                     "channel row '" + in.label(i) + "' sums to " + std::to_string(total));
        } else {
            if (!(total > 0.0))
                fail(ErrorCode::zero_total, "channel row '" + in.label(i) + "' sums to zero");
            for (std::size_t j = 0; j < r; ++j) rows[i * r + j] /= total;
        }
    }
    return rows;
}

} // namespace

Channel::Channel(Alphabet in_alphabet, Alphabet out_alphabet, std::vector<double> rows,
                 NormalizePolicy policy)
    : in_alphabet_(std::move(in_alphabet)),
      out_alphabet_(std::move(out_alphabet)),
      rows_(validated_rows(in_alphabet_, out_alphabet_, std::move(rows), policy)) {}

Channel Channel::identity(const Alphabet& alphabet) {
    const std::size_t m = alphabet.size();
    std::vector<double> rows(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) rows[i * m + i] = 1.0;
    return Channel(alphabet, alphabet, std::move(rows));
}

Channel Channel::constant(const Alphabet& in_alphabet, const Alphabet& out_alphabet,
                          const std::string& out_label) {
    const std::size_t j = out_alphabet.index_of(out_label);
    std::vector<double> rows(in_alphabet.size() * out_alphabet.size(), 0.0);
    for (std::size_t i = 0; i < in_alphabet.size(); ++i)
        rows[i * out_alphabet.size() + j] = 1.0;
    return Channel(in_alphabet, out_alphabet, std::move(rows));
}

Channel Channel::from_function(const Alphabet& in_alphabet, const Alphabet& out_alphabet,
                               const std::function<std::string(const std::string&)>& g) {
    std::vector<double> rows(in_alphabet.size() * out_alphabet.size(), 0.0);
    for (std::size_t i = 0; i < in_alphabet.size(); ++i) {
        std::size_t j = out_alphabet.index_of(g(in_alphabet.label(i)));
        rows[i * out_alphabet.size() + j] = 1.0;
    }
    return Channel(in_alphabet, out_alphabet, std::move(rows));
}

Distribution Channel::row(std::size_t in) const {
    std::vector<double> probs(rows_.begin() + in * out_alphabet_.size(),
                              rows_.begin() + (in + 1) * out_alphabet_.size());
    return Distribution(out_alphabet_, std::move(probs), NormalizePolicy::normalize);
}

bool Channel::deterministic() const noexcept {
    for (double v : rows_)
        if (std::abs(v) > 1e-12 && std::abs(v - 1.0) > 1e-12) return false;
    return true;
}

Distribution pushforward(const Distribution& py, const Channel& ch) {
    if (py.alphabet() != ch.in_alphabet())
        fail(ErrorCode::alphabet_mismatch, "distribution alphabet does not match channel input");
    std::vector<double> probs(ch.out_alphabet().size(), 0.0);
    for (std::size_t y = 0; y < py.size(); ++y)
        for (std::size_t z = 0; z < probs.size(); ++z) probs[z] += py[y] * ch.at(y, z);
    return Distribution(ch.out_alphabet(), std::move(probs), NormalizePolicy::normalize);
}

JointDistribution push_x(const JointDistribution& j, const Channel& ch) {
    if (j.x_alphabet() != ch.in_alphabet())
        fail(ErrorCode::alphabet_mismatch, "joint X alphabet does not match channel input");
    const std::size_t r = ch.out_alphabet().size();
    std::vector<double> probs(r * j.cols(), 0.0);
    for (std::size_t x = 0; x < j.rows(); ++x)
        for (std::size_t z = 0; z < r; ++z) {
            double w = ch.at(x, z);
            if (w == 0.0) continue;
            for (std::size_t y = 0; y < j.cols(); ++y) probs[z * j.cols() + y] += j.at(x, y) * w;
        }
    return JointDistribution(ch.out_alphabet(), j.y_alphabet(), std::move(probs),
                             NormalizePolicy::normalize);
}

JointDistribution push_y(const JointDistribution& j, const Channel& ch) {
    if (j.y_alphabet() != ch.in_alphabet())
        fail(ErrorCode::alphabet_mismatch, "joint Y alphabet does not match channel input");
    const std::size_t r = ch.out_alphabet().size();
    std::vector<double> probs(j.rows() * r, 0.0);
    for (std::size_t x = 0; x < j.rows(); ++x)
        for (std::size_t y = 0; y < j.cols(); ++y) {
            double pxy = j.at(x, y);
            if (pxy == 0.0) continue;
            for (std::size_t z = 0; z < r; ++z) probs[x * r + z] += pxy * ch.at(y, z);
        }
    return JointDistribution(j.x_alphabet(), ch.out_alphabet(), std::move(probs),
                             NormalizePolicy::normalize);
}

} // namespace infolab
