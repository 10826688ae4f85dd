#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hairpin_ops.hpp"
#include "strand.hpp"

namespace hp {

/// Restricts reachable states to i <= i_max and j >= j_min. On reduction
/// instances this is the "never delete y" window.
struct PruneWindow {
    int64_t i_max;
    int64_t j_min;
};

struct SearchLimits {
    uint64_t max_states = 200'000'000;  // expanded-state budget per solve
};

struct SearchStats {
    uint64_t states_expanded = 0;
    uint64_t frontier_peak = 0;
    double wall_time_ms = 0.0;
};

constexpr int64_t kUnreachable = -1;

struct SearchResult {
    int64_t distance = kUnreachable;  // kUnreachable is a value, not an error
    std::vector<DeletionStep> witness;  // present iff distance is finite
    SubstringState start{0, 0};
    SubstringState goal{0, 0};  // settled goal state when distance is finite
    SearchStats stats;
    bool reachable() const { return distance != kUnreachable; }
};

/// Exact shortest number of hairpin deletions transforming host[from] into
/// host[to], breadth-first over unit-weight edges. Throws BudgetExceeded when
/// the expanded-state budget runs out.
SearchResult state_distance(const Strand& host, SubstringState from, SubstringState to,
                            Semantics sem, std::optional<PruneWindow> window = {},
                            SearchLimits limits = {});

/// Minimum over all occurrences of y in x of the deletion distance from the
/// full string to that occurrence. BFS settles states in distance order, so a
/// single search accepting the first-settled occurrence yields the minimum.
SearchResult hdd(const Strand& x, const Strand& y, Semantics sem,
                 std::optional<PruneWindow> window = {}, SearchLimits limits = {});

/// HCD(y, x) = HDD(x, y); witness steps read in reverse as completions.
SearchResult hcd(const Strand& y, const Strand& x, Semantics sem,
                 std::optional<PruneWindow> window = {}, SearchLimits limits = {});

/// Iterative-deepening enumeration of all deletion sequences up to depth_cap.
/// Exact minimum when found within the cap; kUnreachable otherwise. Intended
/// as an independent oracle for small hosts (|x| <= ~16).
int64_t brute_force_hdd(const Strand& x, const Strand& y, Semantics sem, int64_t depth_cap);

}  // namespace hp
