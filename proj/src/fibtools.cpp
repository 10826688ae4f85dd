#include "fibtools.hpp"

#include <algorithm>

namespace hp {

namespace {

// fib(91) is the last value representable in int64.
constexpr int64_t kMaxFibIndex = 91;

Strand bin(const char* text) { return Strand::parse(Alphabet::binary(), text); }

}  // namespace

int64_t fib(int64_t n) {
    if (n < 0) throw PreconditionViolated("fib: negative index");
    if (n > kMaxFibIndex) throw OverflowError("fib: value exceeds 64-bit range");
    int64_t a = 1, b = 1;  // fib(0), fib(1)
    for (int64_t i = 2; i <= n; ++i) {
        int64_t c = a + b;
        a = b;
        b = c;
    }
    return n == 0 ? 1 : b;
}

int64_t fib_inverse(int64_t num, int64_t den) {
    if (num <= 0 || den <= 0) throw PreconditionViolated("fib_inverse: query must be positive");
    for (int64_t y = 0; y <= kMaxFibIndex; ++y) {
        if (static_cast<__int128>(fib(y)) * den >= num) return y;
    }
    throw OverflowError("fib_inverse: query beyond representable Fibonacci range");
}

bool is_fibonacci_regular(int64_t a) {
    if (a < 1) throw PreconditionViolated("is_fibonacci_regular: a must be positive");
    int64_t fa = fib_inverse(a);
    for (int64_t k = 2; k <= a; ++k)
        if (fa > fib_inverse(a, k) + k - 1) return false;
    return true;
}

int64_t sync_deletion_cost(const SyncCostSpec& spec) {
    if (spec.ext < 3 || spec.inner < 3 || spec.ext == spec.inner)
        throw PreconditionViolated("sync_deletion_cost: need min(ext,inner) >= 3 and ext != inner");
    if (spec.a < 1 || !is_fibonacci_regular(spec.a))
        throw PreconditionViolated("sync_deletion_cost: a must be Fibonacci-regular");
    return fib_inverse(spec.a) + std::max<int64_t>(spec.ext - spec.inner - 1, 0) + 3;
}

Strand period_strand(int64_t ext) {
    std::string t = "01";
    t.append(static_cast<size_t>(ext), '0');
    return Strand::parse(Alphabet::binary(), t);
}

Strand build_sync_q(int64_t ext, int64_t inner, const Strand& filler_left,
                    const Strand& filler_right) {
    if (inner < 3) throw PatternViolation("build_sync_q: inner must be >= 3");
    Strand head = period_strand(inner) + bin("01");  // 010^inner . 01
    Strand core = bin("1100");                       // 11 followed by its complement
    Strand q = head + filler_left + core + filler_right + reverse_complement(head);

    // exactly one center marker
    if (find_occurrences(q, core).size() != 1)
        throw PatternViolation("build_sync_q: q must contain exactly one occurrence of 1100");
    // prefix/suffix class membership
    if (!(q.substr(1, head.size()) == head) ||
        !(q.substr(q.size() - head.size() + 1, q.size()) == reverse_complement(head)))
        throw PatternViolation("build_sync_q: q leaves the admissible pattern class");
    // the period block may only occur anchored at the ends of q
    Strand per = period_strand(ext);
    for (int64_t p : find_occurrences(q, per))
        if (p != 1)
            throw PatternViolation("build_sync_q: stray occurrence of the period block in q");
    Strand rper = reverse_complement(per);
    for (int64_t p : find_occurrences(q, rper))
        if (p + rper.size() - 1 != q.size())
            throw PatternViolation("build_sync_q: stray occurrence of the reversed period block in q");
    return q;
}

FibInstance build_fib_test_instance(const SyncCostSpec& spec, const Strand& filler_left,
                                    const Strand& filler_right) {
    if (spec.ext < 3 || spec.inner < 3 || spec.ext == spec.inner || spec.a < 1)
        throw PreconditionViolated("build_fib_test_instance: bad spec");
    Strand q = build_sync_q(spec.ext, spec.inner, filler_left, filler_right);
    Strand per = period_strand(spec.ext);
    Strand host = per.repeat(spec.a) + bin("01") + q + bin("101") +
                  reverse_complement(per).repeat(spec.a);
    return {std::move(host), std::move(q)};
}

std::pair<int64_t, int64_t> parse_arm_multiplicities(const Strand& s, const Strand& per,
                                                     const Strand& q) {
    Strand rper = reverse_complement(per);
    for (int64_t p : find_occurrences(s, q)) {
        int64_t left = p - 1, right = s.size() - (p + q.size() - 1);
        if (left % per.size() != 0 || right % per.size() != 0) continue;
        int64_t c = left / per.size(), d = right / per.size();
        if (s.substr(1, left) == per.repeat(c) &&
            s.substr(p + q.size(), s.size()) == rper.repeat(d))
            return {c, d};
    }
    return {-1, -1};
}

std::vector<CompletionStep> greedy_completion_trace(const Strand& per, const Strand& q,
                                                    int64_t k, int64_t a) {
    if (k < 1 || a < k) throw PreconditionViolated("greedy_completion_trace: need a >= k >= 1");
    Strand start = per.repeat(k) + q + reverse_complement(per).repeat(k);
    if (parse_arm_multiplicities(start, per, q) != std::pair<int64_t, int64_t>{k, k})
        throw PatternViolation("greedy_completion_trace: q is not admissible for per");
    std::vector<CompletionStep> steps;
    int64_t c = k, d = k;
    while (c < a || d < a) {
        if (c >= d) {
            int64_t grow = std::min(c + d, a) - d;
            steps.push_back({Side::Right, grow * per.size()});
            d += grow;
        } else {
            int64_t grow = std::min(c + d, a) - c;
            steps.push_back({Side::Left, grow * per.size()});
            c += grow;
        }
    }
    return steps;
}

}  // namespace hp
