#include "lispace/oracle.hpp"

#include <algorithm>

namespace lispace::oracle {

std::vector<std::size_t> dp_ending_table(std::span<const std::int64_t> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> ending(n, 1);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (values[j] < values[i]) ending[i] = std::max(ending[i], ending[j] + 1);
    return ending;
}

std::size_t dp_lis_length(std::span<const std::int64_t> values) {
    if (values.empty()) return 0;
    const auto ending = dp_ending_table(values);
    return *std::max_element(ending.begin(), ending.end());
}

std::vector<Element> dp_lis_extract(std::span<const std::int64_t> values) {
    if (values.empty()) return {};
    const auto ending = dp_ending_table(values);
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (ending[i] > ending[best]) best = i;

    std::vector<Element> out;
    out.reserve(ending[best]);
    out.push_back({values[best], best});
    std::size_t need = ending[best];
    std::size_t at = best;
    while (need > 1) {
        --need;
        for (std::size_t j = at; j-- > 0;) {
            if (ending[j] == need && values[j] < values[at]) {
                out.push_back({values[j], j});
                at = j;
                break;
            }
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace lispace::oracle
