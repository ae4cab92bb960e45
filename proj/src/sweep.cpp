#include "witt3/sweep.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace witt3 {

Range parse_range(std::string_view text) {
    auto dots = text.find("..");
    auto fail = [&] { return std::invalid_argument("invalid range '" + std::string(text) + "', expected LO..HI"); };
    if (dots == std::string_view::npos) throw fail();
    auto parse = [&](std::string_view s) {
        Index v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw fail();
        return v;
    };
    Range r{parse(text.substr(0, dots)), parse(text.substr(dots + 2))};
    if (r.empty()) throw std::invalid_argument("empty range '" + std::string(text) + "'");
    return r;
}

std::vector<std::pair<Index, Index>> grid(const Range& r) {
    std::vector<std::pair<Index, Index>> g;
    for (Index k = r.lo; k <= r.hi; ++k) {
        for (Index l = r.lo; l <= r.hi; ++l) g.emplace_back(k, l);
    }
    return g;
}

}  // namespace witt3
