#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "infolab/alphabet.hpp"

namespace infolab {

// Normalization tolerance for construction in strict mode.
inline constexpr double kSumTolerance = 1e-9;

enum class NormalizePolicy { strict, normalize };

// Point in the probability simplex over an Alphabet. Immutable after
// construction; entries are nonnegative and sum to 1 within kSumTolerance.
class Distribution {
public:
    Distribution(Alphabet alphabet, std::vector<double> probs,
                 NormalizePolicy policy = NormalizePolicy::strict);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::span<const double> probs() const noexcept { return probs_; }
    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_.at(i); }
    double prob(const std::string& label) const;
    bool strictly_positive() const noexcept;

private:
    Alphabet alphabet_;
    std::vector<double> probs_;
};

// Empirical count vector of n samples over an alphabet.
class EmpiricalType {
public:
    EmpiricalType(Alphabet alphabet, std::vector<std::int64_t> counts);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<std::int64_t>& counts() const noexcept { return counts_; }
    std::int64_t total() const noexcept { return total_; }
    Distribution distribution() const;

private:
    Alphabet alphabet_;
    std::vector<std::int64_t> counts_;
    std::int64_t total_;
};

Distribution make_distribution(const Alphabet& alphabet, std::vector<double> weights,
                               NormalizePolicy policy);

Distribution uniform(const Alphabet& alphabet);

struct EmpiricalResult {
    Distribution distribution;
    EmpiricalType type;
};

EmpiricalResult empirical_from_samples(const Alphabet& alphabet,
                                       std::span<const std::string> samples);

} // namespace infolab
