#include "solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <unordered_set>

namespace hp {

namespace {

constexpr uint16_t kUnvisited = std::numeric_limits<uint16_t>::max();

struct Clock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

// Multi-goal BFS over the (i, j) rectangle. Dense distance/predecessor tables;
// the predecessor entry stores only the incoming step (+len left, -len right),
// the previous state is derivable from it.
SearchResult bfs(const Strand& host, SubstringState from,
                 const std::vector<SubstringState>& goals, Semantics sem,
                 std::optional<PruneWindow> window, SearchLimits limits) {
    Clock clock;
    SearchResult res;
    res.start = from;

    const int64_t i_lo = from.i;
    const int64_t j_hi = from.j;
    const int64_t i_hi = window ? std::min(window->i_max, j_hi) : j_hi;
    const int64_t j_lo = window ? std::max(window->j_min, i_lo) : i_lo;
    const int64_t height = i_hi - i_lo + 1;
    const int64_t width = j_hi - j_lo + 1;
    if (height <= 0 || width <= 0) {
        res.stats.wall_time_ms = clock.ms();
        return res;
    }
    const uint64_t area = static_cast<uint64_t>(height) * static_cast<uint64_t>(width);
    if (area > (uint64_t{1} << 32))
        throw PreconditionViolated("state space too large; supply a prune window");

    auto index_of = [&](int64_t i, int64_t j) -> uint32_t {
        return static_cast<uint32_t>((i - i_lo) * width + (j - j_lo));
    };
    auto finish = [&](uint32_t goal_idx, int64_t dist, const std::vector<int32_t>& pred) {
        res.distance = dist;
        int64_t i = i_lo + goal_idx / width;
        int64_t j = j_lo + goal_idx % width;
        res.goal = {i, j};
        while (!(i == from.i && j == from.j)) {
            int32_t p = pred[index_of(i, j)];
            if (p > 0) {
                res.witness.push_back({Side::Left, p});
                i -= p;
            } else {
                res.witness.push_back({Side::Right, -p});
                j += -p;
            }
        }
        std::reverse(res.witness.begin(), res.witness.end());
        res.stats.wall_time_ms = clock.ms();
        return res;
    };

    std::unordered_set<uint32_t> goal_set;
    for (const auto& g : goals)
        if (g.i >= i_lo && g.i <= i_hi && g.j >= j_lo && g.j <= j_hi && g.i <= g.j)
            goal_set.insert(index_of(g.i, g.j));
    if (goal_set.empty()) {
        res.stats.wall_time_ms = clock.ms();
        return res;
    }

    std::vector<uint16_t> dist(area, kUnvisited);
    std::vector<int32_t> pred(area, 0);
    std::vector<uint32_t> frontier, next;

    const uint32_t start_idx = index_of(from.i, from.j);
    if (goal_set.count(start_idx)) return finish(start_idx, 0, pred);
    dist[start_idx] = 0;
    frontier.push_back(start_idx);

    const Symbol* data = host.raw().data();
    const Alphabet& alpha = host.alphabet();

    int64_t level = 0;
    while (!frontier.empty()) {
        res.stats.frontier_peak = std::max<uint64_t>(res.stats.frontier_peak, frontier.size());
        if (level + 1 >= kUnvisited)
            throw PreconditionViolated("distance exceeds table range");
        for (uint32_t idx : frontier) {
            if (++res.stats.states_expanded > limits.max_states)
                throw BudgetExceeded("state budget exhausted", res.stats.states_expanded);
            const int64_t i = i_lo + idx / width;
            const int64_t j = j_lo + idx % width;
            const int64_t n = j - i + 1;
            if (n <= 1) continue;
            const int64_t cap = n / 2;
            for (int64_t len = 1; len <= cap; ++len) {
                // arm condition, extended one position per iteration
                if (data[i + len - 2] != alpha.inv(data[j - len])) break;
                if (sem == Semantics::Original &&
                    (2 * len >= n || data[i + len - 1] != alpha.inv(data[j - len - 1])))
                    continue;
                if (i + len <= i_hi) {  // left deletion
                    uint32_t c = index_of(i + len, j);
                    if (dist[c] == kUnvisited) {
                        dist[c] = static_cast<uint16_t>(level + 1);
                        pred[c] = static_cast<int32_t>(len);
                        if (goal_set.count(c)) return finish(c, level + 1, pred);
                        next.push_back(c);
                    }
                }
                if (j - len >= j_lo) {  // right deletion
                    uint32_t c = index_of(i, j - len);
                    if (dist[c] == kUnvisited) {
                        dist[c] = static_cast<uint16_t>(level + 1);
                        pred[c] = static_cast<int32_t>(-len);
                        if (goal_set.count(c)) return finish(c, level + 1, pred);
                        next.push_back(c);
                    }
                }
            }
        }
        frontier.swap(next);
        next.clear();
        ++level;
    }
    res.stats.wall_time_ms = clock.ms();
    return res;  // unreachable
}

}  // namespace

SearchResult state_distance(const Strand& host, SubstringState from, SubstringState to,
                            Semantics sem, std::optional<PruneWindow> window,
                            SearchLimits limits) {
    auto valid = [&](SubstringState s) {
        return s.i >= 1 && s.j <= host.size() && s.i <= s.j;
    };
    if (!valid(from) || !valid(to))
        throw PreconditionViolated("state_distance: state out of range");
    return bfs(host, from, {to}, sem, window, limits);
}

SearchResult hdd(const Strand& x, const Strand& y, Semantics sem,
                 std::optional<PruneWindow> window, SearchLimits limits) {
    if (y.empty()) {
        SearchResult res;
        if (x.empty()) res.distance = 0;
        return res;  // deletions never empty a nonempty strand
    }
    if (x.empty()) return {};
    std::vector<SubstringState> goals;
    for (int64_t p : find_occurrences(x, y)) goals.push_back({p, p + y.size() - 1});
    if (goals.empty()) {
        SearchResult res;
        res.start = {1, x.size()};
        return res;
    }
    if (!window) {
        // tightest rectangle covering every occurrence
        int64_t i_max = 1, j_min = x.size();
        for (const auto& g : goals) {
            i_max = std::max(i_max, g.i);
            j_min = std::min(j_min, g.j);
        }
        window = PruneWindow{i_max, j_min};
    }
    return bfs(x, {1, x.size()}, goals, sem, window, limits);
}

SearchResult hcd(const Strand& y, const Strand& x, Semantics sem,
                 std::optional<PruneWindow> window, SearchLimits limits) {
    return hdd(x, y, sem, window, limits);
}

namespace {

bool bounded_dfs(const Strand& s, const Strand& y, Semantics sem, int64_t remaining) {
    if (s == y) return remaining >= 0;
    if (remaining <= 0 || s.size() <= y.size()) return false;
    if (!y.empty() && find_occurrences(s, y).empty()) return false;
    for (int64_t len : valid_deletion_lengths(s, Side::Left, sem)) {
        if (bounded_dfs(apply_deletion(s, {Side::Left, len}, sem), y, sem, remaining - 1))
            return true;
        if (bounded_dfs(apply_deletion(s, {Side::Right, len}, sem), y, sem, remaining - 1))
            return true;
    }
    return false;
}

}  // namespace

int64_t brute_force_hdd(const Strand& x, const Strand& y, Semantics sem, int64_t depth_cap) {
    for (int64_t depth = 0; depth <= depth_cap; ++depth)
        if (bounded_dfs(x, y, sem, depth)) return depth;
    return kUnreachable;
}

}  // namespace hp
