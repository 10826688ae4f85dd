#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "solver.hpp"

namespace hp {

/// One verified reduction instance. predicted = solved and witness_len =
/// solved on success; `error` carries a budget/solver failure instead.
struct VerificationRecord {
    std::string S, T;
    int64_t predicted = 0;
    int64_t solved = kUnreachable;
    int64_t witness_len = 0;
    bool well_behaved_witness_ok = false;
    uint64_t states_expanded = 0;
    double wall_time_ms = 0.0;
    std::string error;  // empty on success

    bool ok() const;
};

struct BenchRecord {
    std::string S, T;
    int64_t instance_size = 0;  // |x|
    int64_t solved = kUnreachable;
    double wall_time_ms = 0.0;
    uint64_t states_expanded = 0;
    uint64_t frontier_peak = 0;
    std::map<int64_t, int64_t> arm_histogram;  // witness step length -> count
};

struct LemmaCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyPlan {
    // exhaustive grid, all ternary pairs with |S| <= max_len_S, |T| <= max_len_T
    bool exhaustive = false;
    int max_len_S = 1;
    int max_len_T = 1;
    // plus `random_count` seeded pairs with lengths in [random_min_len, random_max_len]
    int random_count = 0;
    int random_min_len = 2;
    int random_max_len = 3;
    uint64_t seed = 0;
    int jobs = 1;
    SearchLimits limits{};
};

/// The (S, T) instance list a plan denotes, in emission order.
std::vector<std::pair<std::string, std::string>> plan_instances(const VerifyPlan& plan);

/// Builds, solves, predicts and witness-checks every instance of the plan.
/// Instances run on `jobs` workers; records keep plan order. Per-instance
/// budget failures are recorded, not thrown.
std::vector<VerificationRecord> run_verify(const VerifyPlan& plan);

/// Every per-lemma solver check: constant identities, Fibonacci-regularity,
/// corner distances, the synchronized-deletion closed form, and periodic-arm
/// completion distances with growth-bound monitoring.
std::vector<LemmaCheck> run_lemmas();

/// Random instances at each requested (|S|, |T|) size, `repetitions` per size.
std::vector<BenchRecord> run_bench(const std::vector<std::pair<int, int>>& sizes,
                                   int repetitions, uint64_t seed,
                                   SearchLimits limits = {});

std::string verification_record_json(const VerificationRecord& r);
std::string bench_csv_header();
std::string bench_record_csv(const BenchRecord& r);
std::string lemma_check_json(const LemmaCheck& c);

/// Applies the HAIRPIN_MAX_STATES environment override, if set and numeric.
SearchLimits limits_from_env(SearchLimits base = {});

}  // namespace hp
