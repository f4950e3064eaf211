#include "infolab/alphabet.hpp"

#include "infolab/errors.hpp"

namespace infolab {

Alphabet::Alphabet(std::vector<std::string> labels) {
    if (labels.empty()) fail(ErrorCode::bad_shape, "alphabet needs at least one label");
    auto data = std::make_shared<Data>();
    data->index.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = data->index.emplace(labels[i], i);
        if (!inserted) fail(ErrorCode::duplicate_label, "duplicate label '" + labels[i] + "'");
    }
    data->labels = std::move(labels);
    data_ = std::move(data);
}

std::size_t Alphabet::index_of(const std::string& label) const {
    auto it = data_->index.find(label);
    if (it == data_->index.end())
        fail(ErrorCode::unknown_label, "label '" + label + "' not in alphabet");
    return it->second;
}

std::optional<std::size_t> Alphabet::find(const std::string& label) const noexcept {
    auto it = data_->index.find(label);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
}

Alphabet indexed_alphabet(std::size_t m) {
    std::vector<std::string> labels;
    labels.reserve(m);
    for (std::size_t i = 0; i < m; ++i) labels.push_back(std::to_string(i));
    return Alphabet(std::move(labels));
}

Alphabet product_alphabet(const Alphabet& a, const Alphabet& b) {
    std::vector<std::string> labels;
    labels.reserve(a.size() * b.size());
    for (const auto& la : a.labels())
        for (const auto& lb : b.labels()) labels.push_back(la + "," + lb);
    return Alphabet(std::move(labels));
}

} // namespace infolab
