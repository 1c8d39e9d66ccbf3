#pragma once

#include <optional>

namespace skein {

// Degree cutoff of a completed-algebra element. std::nullopt means unbounded:
// a plain algebra element with finite support, no truncation applied.
using Cutoff = std::optional<int>;

constexpr Cutoff unbounded{};

inline Cutoff min_cutoff(Cutoff a, Cutoff b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

inline bool within_cutoff(Cutoff c, int degree) { return !c || degree <= *c; }

}  // namespace skein
