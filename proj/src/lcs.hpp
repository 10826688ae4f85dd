#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace hp {

struct LcsWitness {
    int64_t length = 0;
    /// One maximal matching, strictly increasing in both coordinates, 1-based.
    std::vector<std::pair<int64_t, int64_t>> pairs;
};

/// Exact LCS length and one witness matching. Quadratic dynamic program with
/// full table; backtracking prefers advancing in S first.
LcsWitness lcs(std::string_view S, std::string_view T);

}  // namespace hp
