#pragma once

#include <cstdint>
#include <vector>

namespace infolab::detail {

// Visit every composition of n into m nonnegative parts, first coordinate
// descending from n to 0. The scratch vector is reused across visits.
template <typename Visit>
void for_each_composition(std::int64_t n, std::size_t m, Visit&& visit) {
    std::vector<std::int64_t> parts(m, 0);
    // descend(slot, remaining): fill parts[slot..] with compositions of remaining
    auto descend = [&](auto&& self, std::size_t slot, std::int64_t remaining) -> void {
        if (slot + 1 == m) {
            parts[slot] = remaining;
            visit(const_cast<const std::vector<std::int64_t>&>(parts));
            return;
        }
        for (std::int64_t v = remaining; v >= 0; --v) {
            parts[slot] = v;
            self(self, slot + 1, remaining - v);
        }
    };
    if (m == 0) return;
    descend(descend, 0, n);
}

} // namespace infolab::detail
