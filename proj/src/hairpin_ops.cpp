#include "hairpin_ops.hpp"

#include <sstream>

namespace hp {

int64_t max_arm(const Strand& host, int64_t i, int64_t j) {
    int64_t len = j - i + 1;
    if (len <= 1) return 0;
    int64_t cap = len / 2;
    int64_t m = 0;
    while (m < cap && host.at(i + m) == host.inv_at(j - m)) ++m;
    return m;
}

int64_t max_arm(const Strand& s) { return s.empty() ? 0 : max_arm(s, 1, s.size()); }

bool original_boundary_ok(const Strand& host, int64_t i, int64_t j, int64_t len) {
    int64_t n = j - i + 1;
    // The remainder must still contain the boundary index; len = n/2 leaves none.
    if (2 * len >= n) return false;
    return host.at(i + len) == host.inv_at(j - len);
}

bool deletion_valid(const Strand& host, int64_t i, int64_t j, const DeletionStep& step,
                    Semantics sem) {
    if (step.length < 1 || step.length > max_arm(host, i, j)) return false;
    if (sem == Semantics::Original && !original_boundary_ok(host, i, j, step.length))
        return false;
    return true;
}

std::vector<int64_t> valid_deletion_lengths(const Strand& s, Side side, Semantics sem) {
    std::vector<int64_t> out;
    if (s.empty()) return out;
    int64_t m = max_arm(s);
    for (int64_t len = 1; len <= m; ++len) {
        if (sem == Semantics::Original && !original_boundary_ok(s, 1, s.size(), len))
            continue;
        out.push_back(len);
    }
    (void)side;  // validity is side-symmetric; side selects which end is removed
    return out;
}

Strand apply_deletion(const Strand& s, const DeletionStep& step, Semantics sem) {
    if (s.empty() || !deletion_valid(s, 1, s.size(), step, sem))
        throw InvalidStep("invalid hairpin deletion of length " + std::to_string(step.length));
    if (step.side == Side::Left) return s.substr(step.length + 1, s.size());
    return s.substr(1, s.size() - step.length);
}

Strand apply_completion(const Strand& s, Side side, int64_t len, Semantics sem) {
    int64_t n = s.size();
    if (len < 1 || len > n)
        throw InvalidStep("completion length " + std::to_string(len) + " out of range");
    if (sem == Semantics::Original) {
        if (side == Side::Right) {
            if (len + 1 > n || s.at(len + 1) != s.inv_at(n))
                throw InvalidStep("right completion boundary constraint fails");
        } else {
            if (n - len < 1 || s.at(n - len) != s.inv_at(1))
                throw InvalidStep("left completion boundary constraint fails");
        }
    }
    if (side == Side::Right) return s + reverse_complement(s.substr(1, len));
    return reverse_complement(s.substr(n - len + 1, n)) + s;
}

SubstringState replay_path(const Strand& host, SubstringState start,
                           std::span<const DeletionStep> steps, Semantics sem) {
    if (start.i < 1 || start.j > host.size() || start.i > start.j)
        throw InvalidStep("start state out of range", 0);
    SubstringState cur = start;
    for (size_t k = 0; k < steps.size(); ++k) {
        const DeletionStep& st = steps[k];
        if (!deletion_valid(host, cur.i, cur.j, st, sem))
            throw InvalidStep("invalid step", static_cast<int64_t>(k + 1));
        if (st.side == Side::Left)
            cur.i += st.length;
        else
            cur.j -= st.length;
    }
    return cur;
}

std::string steps_to_text(std::span<const DeletionStep> steps) {
    std::string out;
    for (const auto& st : steps) {
        out += (st.side == Side::Left) ? 'L' : 'R';
        out += ' ';
        out += std::to_string(st.length);
        out += '\n';
    }
    return out;
}

std::vector<DeletionStep> steps_from_text(const std::string& text) {
    std::vector<DeletionStep> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        char side;
        int64_t len;
        if (!(ls >> side >> len) || (side != 'L' && side != 'R') || len < 1)
            throw ParseError("bad witness line: " + line);
        out.push_back({side == 'L' ? Side::Left : Side::Right, len});
    }
    return out;
}

}  // namespace hp
