#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "eea/error.hpp"

namespace eea {

/// True if `perm` contains each of 0..n-1 exactly once.
inline bool is_permutation_of(std::span<const int> perm, std::size_t n)
{
    if (perm.size() != n) { return false; }
    std::vector<char> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) { return false; }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

inline void require_permutation(std::span<const int> perm, std::size_t n)
{
    if (!is_permutation_of(perm, n)) {
        throw InvalidIndividual("not a permutation of 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
}

} // namespace eea
