#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "infolab/distribution.hpp"

namespace infolab {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

struct BoundReport {
    std::vector<std::int64_t> counts;
    double exact_log_prob = 0.0;  // -inf when the type charges a null symbol
    double lower_log_bound = 0.0; // -n d(t/n, q) - m log(n+1)
    double upper_log_bound = 0.0; // -n d(t/n, q)
    bool holds = false;           // lower - 1e-9 <= exact <= upper + 1e-9
};

struct ChernoffSummary {
    std::int64_t n = 0;
    std::size_t alphabet_size = 0;
    std::size_t types_checked = 0;
    std::size_t types_holding = 0;
    bool all_hold = false;
    double max_slack = 0.0;         // worst max(exact-upper, lower-exact) over finite types
    double total_probability = 0.0; // sum of exp(exact_log_prob); 1 within 1e-9
};

struct RateRow {
    std::int64_t n = 0;
    double rate = 0.0;              // -(1/n) log P(t_n; q)
    double type_divergence = 0.0;   // d(t_n/n, q) for the rounded type
    double target_divergence = 0.0; // d(p, q)
    double gap_bound = 0.0;         // m log(n+1) / n
};

struct TypeHistogram {
    std::int64_t n = 0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    // (counts, occurrences), ascending lexicographic in counts.
    std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> entries;
};

// Number of compositions of n into m nonnegative parts, binom(n+m-1, m-1);
// throws EnumerationTooLarge if it exceeds cap.
std::uint64_t checked_type_count(std::int64_t n, std::size_t m, std::size_t cap);

// All empirical types with n samples, each exactly once, first coordinate
// descending (the order (2,0),(1,1),(0,2) for n = 2, m = 2).
std::vector<EmpiricalType> enumerate_types(std::int64_t n, const Alphabet& alphabet,
                                           std::size_t cap = kDefaultEnumerationCap);

void for_each_type(std::int64_t n, const Alphabet& alphabet, std::size_t cap,
                   const std::function<void(const EmpiricalType&)>& visit);

// log of the multinomial probability of observing exactly the counts t under
// q: log[ n!/prod c_i! * prod q_i^c_i ], via log-gamma. -inf iff some c_i > 0
// has q_i = 0.
double type_log_probability(const EmpiricalType& t, const Distribution& q);

BoundReport chernoff_sandwich(const EmpiricalType& t, const Distribution& q);

// Runs the sandwich over every type of size n and accumulates the report.
ChernoffSummary verify_chernoff(std::int64_t n, const Distribution& q,
                                std::size_t cap = kDefaultEnumerationCap);

// Largest-remainder rounding of n*p to integer counts summing to n, ties
// broken toward the lowest index.
EmpiricalType nearest_type(std::int64_t n, const Distribution& p);

// Per-sample surprise -(1/n) log P(t_n; q) against the divergence it
// converges to, for the type nearest p at each requested n.
std::vector<RateRow> surprise_rate_convergence(const Distribution& p, const Distribution& q,
                                               std::span<const std::int64_t> n_values,
                                               std::size_t cap = kDefaultEnumerationCap);

// Monte Carlo histogram of observed types, deterministic for a fixed seed.
TypeHistogram sample_types(const Distribution& q, std::int64_t n, std::int64_t trials,
                           std::uint64_t seed);

} // namespace infolab
