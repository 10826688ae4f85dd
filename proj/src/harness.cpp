#include "harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "fibtools.hpp"
#include "lcs.hpp"
#include "reduction.hpp"

namespace hp {

bool VerificationRecord::ok() const {
    return error.empty() && solved == predicted && witness_len == solved &&
           well_behaved_witness_ok;
}

std::vector<std::pair<std::string, std::string>> plan_instances(const VerifyPlan& plan) {
    std::vector<std::pair<std::string, std::string>> out;
    if (plan.exhaustive) {
        auto all_upto = [](int max_len) {
            std::vector<std::string> v{""};
            std::vector<std::string> prev{""};
            for (int len = 1; len <= max_len; ++len) {
                std::vector<std::string> cur;
                for (const auto& p : prev)
                    for (char c : {'0', '1', '2'}) cur.push_back(p + c);
                v.insert(v.end(), cur.begin(), cur.end());
                prev = std::move(cur);
            }
            return v;
        };
        auto ss = all_upto(plan.max_len_S);
        auto ts = all_upto(plan.max_len_T);
        for (const auto& s : ss)
            for (const auto& t : ts) out.emplace_back(s, t);
    }
    if (plan.random_count > 0) {
        std::mt19937_64 rng(plan.seed);
        std::uniform_int_distribution<int> len(plan.random_min_len, plan.random_max_len);
        std::uniform_int_distribution<int> sym(0, 2);
        for (int k = 0; k < plan.random_count; ++k) {
            std::string s, t;
            int ls = len(rng), lt = len(rng);
            for (int i = 0; i < ls; ++i) s += char('0' + sym(rng));
            for (int i = 0; i < lt; ++i) t += char('0' + sym(rng));
            out.emplace_back(s, t);
        }
    }
    return out;
}

namespace {

VerificationRecord verify_one(const std::string& S, const std::string& T,
                              const SearchLimits& limits) {
    VerificationRecord rec;
    rec.S = S;
    rec.T = T;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        auto inst = build_reduction(S, T);
        rec.predicted = predicted_hdd(S, T);
        auto res = hdd(inst.x, inst.y, Semantics::Modified, inst.window(), limits);
        rec.solved = res.distance;
        rec.witness_len = static_cast<int64_t>(res.witness.size());
        rec.states_expanded = res.stats.states_expanded;
        auto w = build_well_behaved_witness(inst, lcs(S, T));
        rec.well_behaved_witness_ok =
            static_cast<int64_t>(w.size()) == rec.predicted && check_well_behaved(inst, w);
    } catch (const BudgetExceeded& e) {
        rec.states_expanded = e.states_expanded;
        rec.error = e.what();
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    rec.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return rec;
}

}  // namespace

std::vector<VerificationRecord> run_verify(const VerifyPlan& plan) {
    auto instances = plan_instances(plan);
    std::vector<VerificationRecord> records(instances.size());
    const int jobs = std::max(1, plan.jobs);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k; (k = next.fetch_add(1)) < instances.size();)
            records[k] = verify_one(instances[k].first, instances[k].second, plan.limits);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return records;
}

namespace {

void add_check(std::vector<LemmaCheck>& out, const std::string& name, bool pass,
               std::string detail) {
    out.push_back({name, pass, std::move(detail)});
}

Strand periodic_arm_host(const Strand& per, const Strand& q, int64_t mult) {
    return per.repeat(mult) + q + reverse_complement(per).repeat(mult);
}

}  // namespace

std::vector<LemmaCheck> run_lemmas() {
    std::vector<LemmaCheck> out;
    const GadgetConstants c{};

    {
        bool ok = true;
        std::ostringstream d;
        for (int a = 0; a < 3; ++a) {
            ok = ok && 2 * c.D[a] - c.D_sync[a] == c.B && c.D[a] == c.iota[a] + 2 &&
                 c.D_sync[a] == 31 - 2 * a;
            d << "alpha=" << a << ": 2*" << c.D[a] << "-" << c.D_sync[a] << "=" << c.B
              << "; ";
        }
        add_check(out, "constant-identities", ok, d.str());
    }

    {
        bool ok = is_fibonacci_regular(53) && is_fibonacci_regular(54) &&
                  is_fibonacci_regular(55) && is_fibonacci_regular(144) &&
                  is_fibonacci_regular(1) && !is_fibonacci_regular(2) &&
                  !is_fibonacci_regular(3);
        add_check(out, "fibonacci-regular-constants", ok,
                  "{53,54,55,144,1} regular; {2,3} not");
    }

    {
        auto inst = build_reduction("0", "0");
        auto left = state_distance(inst.x, inst.corner(1, 1), inst.corner(2, 1),
                                   Semantics::Modified, inst.window());
        auto right = state_distance(inst.x, inst.corner(1, 1), inst.corner(1, 2),
                                    Semantics::Modified, inst.window());
        bool ok = left.distance == c.D[0] && right.distance == c.D[0];
        std::ostringstream d;
        d << "left " << left.distance << ", right " << right.distance << ", expected "
          << c.D[0];
        add_check(out, "one-gadget-deletion-cost", ok, d.str());

        auto both = state_distance(inst.x, inst.corner(1, 1), inst.corner(2, 2),
                                   Semantics::Modified, inst.window());
        std::ostringstream d2;
        d2 << both.distance << " expected " << c.D_sync[0];
        add_check(out, "matched-pair-deletion-cost", both.distance == c.D_sync[0],
                  d2.str());
    }

    {
        auto inst = build_reduction("0", "1");
        auto both = state_distance(inst.x, inst.corner(1, 1), inst.corner(2, 2),
                                   Semantics::Modified, inst.window());
        const int64_t expected = c.iota[0] + c.iota[1] + 4;
        std::ostringstream d;
        d << both.distance << " expected " << expected;
        add_check(out, "mismatched-pair-deletion-cost", both.distance == expected,
                  d.str());
    }

    {
        bool ok = true;
        std::ostringstream d;
        const std::pair<int64_t, int64_t> shapes[] = {{9, 3}, {9, 5}, {9, 7},
                                                      {3, 9}, {5, 9}, {7, 9}};
        for (auto [ext, inner] : shapes) {
            for (int64_t a = 1; a <= 20; ++a) {
                if (!is_fibonacci_regular(a)) continue;
                SyncCostSpec spec{ext, inner, a};
                auto fi = build_fib_test_instance(spec, Strand{}, Strand{});
                auto res = hdd(fi.host, fi.inner, Semantics::Modified);
                if (res.distance != sync_deletion_cost(spec)) {
                    ok = false;
                    d << "mismatch at ext=" << ext << " inner=" << inner << " a=" << a
                      << ": " << res.distance << " vs " << sync_deletion_cost(spec)
                      << "; ";
                }
            }
        }
        if (ok) d << "all shapes, regular a <= 20";
        add_check(out, "synchronized-deletion-cost", ok, d.str());
    }

    {
        bool ok = true;
        std::ostringstream d;
        const Strand per = period_strand(9);
        const Strand q = build_sync_q(9, 3, Strand{}, Strand{});
        for (int64_t k = 1; k <= 2; ++k) {
            for (int64_t a = k; a <= 10; a += k) {
                auto res = hdd(periodic_arm_host(per, q, a), periodic_arm_host(per, q, k),
                               Semantics::Modified);
                if (res.distance != fib_inverse(a, k)) {
                    ok = false;
                    d << "mismatch at k=" << k << " a=" << a << ": " << res.distance
                      << " vs " << fib_inverse(a, k) << "; ";
                }
            }
        }
        if (ok) d << "k in {1,2}, a <= 10";
        add_check(out, "periodic-arm-completion-cost", ok, d.str());
    }

    {
        bool ok = true;
        std::ostringstream d;
        const Strand per = period_strand(9);
        const Strand q = build_sync_q(9, 3, Strand{}, Strand{});
        for (int64_t k = 1; k <= 2 && ok; ++k) {
            for (int64_t a = k; a <= 21; a += k) {
                auto trace = greedy_completion_trace(per, q, k, a);
                Strand s = periodic_arm_host(per, q, k);
                int64_t step = 0;
                for (const auto& st : trace) {
                    s = apply_completion(s, st.side, st.length, Semantics::Modified);
                    ++step;
                    auto [cc, dd] = parse_arm_multiplicities(s, per, q);
                    if (cc < 0 || std::min(cc, dd) > k * fib(step) ||
                        std::max(cc, dd) > k * fib(step + 1)) {
                        ok = false;
                        d << "bound broken at k=" << k << " a=" << a << " step=" << step
                          << "; ";
                    }
                }
                if (!(s == periodic_arm_host(per, q, a))) {
                    ok = false;
                    d << "trace endpoint wrong at k=" << k << " a=" << a << "; ";
                }
                if (static_cast<int64_t>(trace.size()) != fib_inverse(a, k)) {
                    ok = false;
                    d << "trace length wrong at k=" << k << " a=" << a << "; ";
                }
            }
        }
        if (ok) d << "min <= k*Fib(x), max <= k*Fib(x+1) along every greedy trace";
        add_check(out, "greedy-growth-bounds", ok, d.str());
    }

    return out;
}

std::vector<BenchRecord> run_bench(const std::vector<std::pair<int, int>>& sizes,
                                   int repetitions, uint64_t seed, SearchLimits limits) {
    std::vector<BenchRecord> out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> sym(0, 2);
    for (auto [ls, lt] : sizes) {
        for (int rep = 0; rep < repetitions; ++rep) {
            BenchRecord rec;
            for (int i = 0; i < ls; ++i) rec.S += char('0' + sym(rng));
            for (int i = 0; i < lt; ++i) rec.T += char('0' + sym(rng));
            auto inst = build_reduction(rec.S, rec.T);
            rec.instance_size = inst.x.size();
            const auto t0 = std::chrono::steady_clock::now();
            auto res = hdd(inst.x, inst.y, Semantics::Modified, inst.window(), limits);
            rec.wall_time_ms = std::chrono::duration<double, std::milli>(
                                   std::chrono::steady_clock::now() - t0)
                                   .count();
            rec.solved = res.distance;
            rec.states_expanded = res.stats.states_expanded;
            rec.frontier_peak = res.stats.frontier_peak;
            for (const auto& st : res.witness) ++rec.arm_histogram[st.length];
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::string verification_record_json(const VerificationRecord& r) {
    nlohmann::json j{{"S", r.S},
                     {"T", r.T},
                     {"predicted", r.predicted},
                     {"solved", r.solved},
                     {"witness_len", r.witness_len},
                     {"well_behaved_witness_ok", r.well_behaved_witness_ok},
                     {"states_expanded", r.states_expanded},
                     {"wall_time_ms", r.wall_time_ms},
                     {"ok", r.ok()}};
    if (!r.error.empty()) j["error"] = r.error;
    return j.dump();
}

std::string bench_csv_header() {
    return "S,T,instance_size,solved,wall_time_ms,states_expanded,frontier_peak,"
           "arm_histogram";
}

std::string bench_record_csv(const BenchRecord& r) {
    std::ostringstream os;
    os << r.S << ',' << r.T << ',' << r.instance_size << ',' << r.solved << ','
       << r.wall_time_ms << ',' << r.states_expanded << ',' << r.frontier_peak << ',';
    bool first = true;
    for (const auto& [len, cnt] : r.arm_histogram) {
        if (!first) os << ';';
        os << len << ':' << cnt;
        first = false;
    }
    return os.str();
}

std::string lemma_check_json(const LemmaCheck& c) {
    return nlohmann::json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}
        .dump();
}

SearchLimits limits_from_env(SearchLimits base) {
    if (const char* v = std::getenv("HAIRPIN_MAX_STATES")) {
        char* end = nullptr;
        unsigned long long parsed = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && parsed > 0) base.max_states = parsed;
    }
    return base;
}

}  // namespace hp
