#pragma once

#include <cstdint>
#include <vector>

#include "hairpin_ops.hpp"
#include "strand.hpp"

namespace hp {

/// Fibonacci with the 1,1,2,3,... indexing: fib(0)=fib(1)=1.
/// Throws OverflowError beyond the 64-bit range.
int64_t fib(int64_t n);

/// Least y with fib(y) * den >= num, exact integer arithmetic.
/// num/den must be a positive rational.
int64_t fib_inverse(int64_t num, int64_t den = 1);

/// True iff fib_inverse(a) <= fib_inverse(a/k) + k - 1 for all 2 <= k <= a.
bool is_fibonacci_regular(int64_t a);

struct SyncCostSpec {
    int64_t ext;    // >= 3, period exponent of per = 010^ext
    int64_t inner;  // >= 3, != ext; interior exponent of q
    int64_t a;      // positive arm multiplicity
};

/// Closed-form synchronized-deletion cost fib_inverse(a) + max(ext-inner-1,0) + 3.
/// Throws PreconditionViolated unless spec.a is Fibonacci-regular and the spec
/// invariants hold.
int64_t sync_deletion_cost(const SyncCostSpec& spec);

/// The period block 010^ext over the binary alphabet.
Strand period_strand(int64_t ext);

/// q = 010^inner . 01 . filler_left . 1100 . filler_right . rc(010^inner . 01).
/// Throws PatternViolation if the assembled q leaves the admissible class
/// (pattern mismatch, a second occurrence of 1100, or an occurrence of
/// per/rc(per) for per = 010^ext).
Strand build_sync_q(int64_t ext, int64_t inner, const Strand& filler_left,
                    const Strand& filler_right);

struct FibInstance {
    Strand host;   // per^a . 01 . q . 101 . rc(per)^a
    Strand inner;  // q
};

FibInstance build_fib_test_instance(const SyncCostSpec& spec, const Strand& filler_left,
                                    const Strand& filler_right);

struct CompletionStep {
    Side side;
    int64_t length;
};

/// The greedy doubling sequence transforming per^k . q . rc(per)^k into
/// per^a . q . rc(per)^a; exactly fib_inverse(a, k) steps.
/// Throws PatternViolation if q is not admissible for per.
std::vector<CompletionStep> greedy_completion_trace(const Strand& per, const Strand& q,
                                                    int64_t k, int64_t a);

/// Parses s as per^c . q . rc(per)^d and returns {c, d}; {-1, -1} when s is
/// not of that exact form. Used by the growth-bound trace monitor.
std::pair<int64_t, int64_t> parse_arm_multiplicities(const Strand& s, const Strand& per,
                                                     const Strand& q);

}  // namespace hp
