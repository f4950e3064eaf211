#include "infolab/types_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "infolab/detail/compositions.hpp"
#include "infolab/errors.hpp"
#include "infolab/measures.hpp"
#include "infolab/rng.hpp"

namespace infolab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kSandwichTolerance = 1e-9;

} // namespace

std::uint64_t checked_type_count(std::int64_t n, std::size_t m, std::size_t cap) {
    if (n < 1) fail(ErrorCode::bad_input, "n must be at least 1");
    // binom(n+m-1, m-1); estimate in floating point first so huge n cannot
    // overflow the exact integer product.
    double estimate = 0.0; // log of the count
    for (std::size_t i = 1; i < m; ++i)
        estimate += std::log(static_cast<double>(n) + i) - std::log(static_cast<double>(i));
    if (estimate > std::log(static_cast<double>(cap)) + 1.0)
        fail(ErrorCode::enumeration_too_large,
             "about exp(" + std::to_string(estimate) + ") types exceeds cap " +
                 std::to_string(cap));
    std::uint64_t count = 1;
    for (std::size_t i = 1; i < m; ++i)
        count = count * (static_cast<std::uint64_t>(n) + i) / i; // exact: product of i consecutive ints
    if (count > cap)
        fail(ErrorCode::enumeration_too_large,
             std::to_string(count) + " types exceeds cap " + std::to_string(cap));
    return count;
}

void for_each_type(std::int64_t n, const Alphabet& alphabet, std::size_t cap,
                   const std::function<void(const EmpiricalType&)>& visit) {
    checked_type_count(n, alphabet.size(), cap);
    detail::for_each_composition(n, alphabet.size(), [&](const std::vector<std::int64_t>& counts) {
        visit(EmpiricalType(alphabet, counts));
    });
}

std::vector<EmpiricalType> enumerate_types(std::int64_t n, const Alphabet& alphabet,
                                           std::size_t cap) {
    std::vector<EmpiricalType> types;
    types.reserve(checked_type_count(n, alphabet.size(), cap));
    for_each_type(n, alphabet, cap, [&](const EmpiricalType& t) { types.push_back(t); });
    return types;
}

double type_log_probability(const EmpiricalType& t, const Distribution& q) {
    if (t.alphabet() != q.alphabet())
        fail(ErrorCode::alphabet_mismatch, "type and distribution alphabets differ");
    const auto& counts = t.counts();
    double log_coeff = std::lgamma(static_cast<double>(t.total()) + 1.0);
    double log_mass = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        if (q[i] == 0.0) return kNegInf;
        log_coeff -= std::lgamma(static_cast<double>(counts[i]) + 1.0);
        log_mass += static_cast<double>(counts[i]) * std::log(q[i]);
    }
    return log_coeff + log_mass;
}

BoundReport chernoff_sandwich(const EmpiricalType& t, const Distribution& q) {
    if (t.alphabet() != q.alphabet())
        fail(ErrorCode::alphabet_mismatch, "type and distribution alphabets differ");
    BoundReport report;
    report.counts = t.counts();
    const double n = static_cast<double>(t.total());
    const double m = static_cast<double>(q.size());
    ExtendedReal d = kl_divergence(t.distribution(), q);
    report.exact_log_prob = type_log_probability(t, q);
    if (d.is_infinite()) {
        // Impossible type: zero probability, zero bounds; the sandwich holds.
        report.lower_log_bound = kNegInf;
        report.upper_log_bound = kNegInf;
        report.holds = std::isinf(report.exact_log_prob);
        return report;
    }
    report.upper_log_bound = -n * d.value();
    report.lower_log_bound = report.upper_log_bound - m * std::log(n + 1.0);
    report.holds = report.lower_log_bound - kSandwichTolerance <= report.exact_log_prob &&
                   report.exact_log_prob <= report.upper_log_bound + kSandwichTolerance;
    return report;
}

ChernoffSummary verify_chernoff(std::int64_t n, const Distribution& q, std::size_t cap) {
    ChernoffSummary summary;
    summary.n = n;
    summary.alphabet_size = q.size();
    summary.max_slack = kNegInf;
    for_each_type(n, q.alphabet(), cap, [&](const EmpiricalType& t) {
        BoundReport r = chernoff_sandwich(t, q);
        ++summary.types_checked;
        if (r.holds) ++summary.types_holding;
        if (std::isfinite(r.exact_log_prob)) {
            summary.max_slack = std::max(summary.max_slack, r.exact_log_prob - r.upper_log_bound);
            summary.max_slack = std::max(summary.max_slack, r.lower_log_bound - r.exact_log_prob);
            summary.total_probability += std::exp(r.exact_log_prob);
        }
    });
    summary.all_hold = summary.types_holding == summary.types_checked;
    return summary;
}

EmpiricalType nearest_type(std::int64_t n, const Distribution& p) {
    const std::size_t m = p.size();
    std::vector<std::int64_t> counts(m);
    std::vector<std::pair<double, std::size_t>> remainders(m); // (-frac, index): ties to lowest index
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < m; ++i) {
        double target = static_cast<double>(n) * p[i];
        counts[i] = static_cast<std::int64_t>(std::floor(target));
        assigned += counts[i];
        remainders[i] = {-(target - std::floor(target)), i};
    }
    std::sort(remainders.begin(), remainders.end());
    for (std::int64_t k = 0; k < n - assigned; ++k) ++counts[remainders[k % m].second];
    return EmpiricalType(p.alphabet(), std::move(counts));
}

std::vector<RateRow> surprise_rate_convergence(const Distribution& p, const Distribution& q,
                                               std::span<const std::int64_t> n_values,
                                               std::size_t cap) {
    if (p.alphabet() != q.alphabet())
        fail(ErrorCode::alphabet_mismatch, "p and q alphabets differ");
    std::vector<RateRow> rows;
    rows.reserve(n_values.size());
    double target = kl_divergence(p, q).to_double();
    for (std::int64_t n : n_values) {
        if (n < 1 || static_cast<std::uint64_t>(n) > cap)
            fail(ErrorCode::enumeration_too_large,
                 "n = " + std::to_string(n) + " outside the enumeration cap");
        RateRow row;
        row.n = n;
        EmpiricalType t = nearest_type(n, p);
        row.rate = -type_log_probability(t, q) / static_cast<double>(n);
        row.type_divergence = kl_divergence(t.distribution(), q).to_double();
        row.target_divergence = target;
        row.gap_bound = static_cast<double>(p.size()) * std::log(static_cast<double>(n) + 1.0) /
                        static_cast<double>(n);
        rows.push_back(row);
    }
    return rows;
}

TypeHistogram sample_types(const Distribution& q, std::int64_t n, std::int64_t trials,
                           std::uint64_t seed) {
    if (n < 1 || trials < 1) fail(ErrorCode::bad_input, "n and trials must be at least 1");
    TypeHistogram hist;
    hist.n = n;
    hist.trials = trials;
    hist.seed = seed;
    Rng rng(seed);
    std::map<std::vector<std::int64_t>, std::int64_t> acc;
    std::vector<std::int64_t> counts(q.size());
    for (std::int64_t t = 0; t < trials; ++t) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::int64_t i = 0; i < n; ++i) ++counts[rng.sample_index(q.probs())];
        ++acc[counts];
    }
    hist.entries.assign(acc.begin(), acc.end());
    return hist;
}

} // namespace infolab
