#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace infolab {

// Ordered set of distinct symbol labels. Cheap to copy (shared immutable data),
// so it can be embedded in every distribution, joint, and type without cost.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> labels);

    std::size_t size() const noexcept { return data_->labels.size(); }
    const std::vector<std::string>& labels() const noexcept { return data_->labels; }
    const std::string& label(std::size_t i) const { return data_->labels.at(i); }

    // Index of a label; throws UnknownLabel if absent.
    std::size_t index_of(const std::string& label) const;
    std::optional<std::size_t> find(const std::string& label) const noexcept;
    bool contains(const std::string& label) const noexcept { return find(label).has_value(); }

    friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
        return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
    }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) noexcept { return !(a == b); }

private:
    struct Data {
        std::vector<std::string> labels;
        std::unordered_map<std::string, std::size_t> index;
    };
    std::shared_ptr<const Data> data_;
};

// Alphabet of integer labels "0".."m-1".
Alphabet indexed_alphabet(std::size_t m);

// Product alphabet with labels "a,b" in row-major (a-major) order.
Alphabet product_alphabet(const Alphabet& a, const Alphabet& b);

} // namespace infolab
