#pragma once

#include <span>
#include <string>
#include <vector>

#include "strand.hpp"

namespace hp {

/// Original keeps the boundary-symbol constraint on the re-completion;
/// Modified drops it. Both share the arm condition.
enum class Semantics { Modified, Original };

enum class Side { Left, Right };

struct DeletionStep {
    Side side;
    int64_t length;  // >= 1
    bool operator==(const DeletionStep&) const = default;
};

/// Substring view x[i..j] of a host strand, 1-based inclusive.
struct SubstringState {
    int64_t i;
    int64_t j;
    bool operator==(const SubstringState&) const = default;
    int64_t length() const { return j - i + 1; }
};

/// Largest m <= floor(len/2) such that s[k] = inv(s[len-k+1]) for all k in [m],
/// computed on the view host[i..j].
int64_t max_arm(const Strand& host, int64_t i, int64_t j);
int64_t max_arm(const Strand& s);

/// Whether a deletion of `len` on either side is valid on host[i..j].
/// The arm condition must have been established separately (len <= max_arm);
/// this checks only the Original-semantics boundary constraint, which is the
/// same for both sides: 2*len < |view| and view[len+1] = inv(view[n-len]).
bool original_boundary_ok(const Strand& host, int64_t i, int64_t j, int64_t len);

bool deletion_valid(const Strand& host, int64_t i, int64_t j, const DeletionStep& step,
                    Semantics sem);

/// Materialized set of valid deletion lengths, ascending. Intended for tests
/// and small strands; the solver iterates the {1..max_arm} range directly.
std::vector<int64_t> valid_deletion_lengths(const Strand& s, Side side, Semantics sem);

/// Throws InvalidStep when the step is not valid on s.
Strand apply_deletion(const Strand& s, const DeletionStep& step, Semantics sem);

/// Right: s . rc(s[1..len]); left: rc(s[n-len+1..n]) . s.
/// Throws InvalidStep when the length or boundary constraint fails.
Strand apply_completion(const Strand& s, Side side, int64_t len, Semantics sem);

/// Applies steps in order to the substring view of host, validating each.
/// Throws InvalidStep carrying the 1-based index of the failing step.
SubstringState replay_path(const Strand& host, SubstringState start,
                           std::span<const DeletionStep> steps, Semantics sem);

/// Witness text format: one step per line, "L <len>" or "R <len>".
std::string steps_to_text(std::span<const DeletionStep> steps);
std::vector<DeletionStep> steps_from_text(const std::string& text);

}  // namespace hp
