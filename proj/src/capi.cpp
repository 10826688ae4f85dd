#include "hairpin.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"

#include "errors.hpp"
#include "fibtools.hpp"
#include "harness.hpp"
#include "lcs.hpp"
#include "lift4.hpp"
#include "reduction.hpp"
#include "solver.hpp"
#include "strand.hpp"

struct hp_strand {
    hp::Strand s;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hp_status fail(hp_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
hp_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const hp::ParseError& e) {
        return fail(HP_ERR_PARSE, e.what());
    } catch (const hp::InvalidStep& e) {
        return fail(HP_ERR_INVALID_STEP, e.what());
    } catch (const hp::PatternViolation& e) {
        return fail(HP_ERR_PATTERN, e.what());
    } catch (const hp::PreconditionViolated& e) {
        return fail(HP_ERR_PRECONDITION, e.what());
    } catch (const hp::OverflowError& e) {
        return fail(HP_ERR_OVERFLOW, e.what());
    } catch (const hp::NonIntegralResult& e) {
        return fail(HP_ERR_NON_INTEGRAL, e.what());
    } catch (const hp::WitnessInvalid& e) {
        return fail(HP_ERR_WITNESS, e.what());
    } catch (const hp::ReplayFailed& e) {
        return fail(HP_ERR_REPLAY, e.what());
    } catch (const hp::MidNotFound& e) {
        return fail(HP_ERR_MID, e.what());
    } catch (const hp::MidNotUnique& e) {
        return fail(HP_ERR_MID, e.what());
    } catch (const hp::BudgetExceeded& e) {
        return fail(HP_ERR_BUDGET, e.what());
    } catch (const std::exception& e) {
        return fail(HP_ERR_UNKNOWN, e.what());
    }
}

const hp::Alphabet& alphabet_by_name(const char* name) {
    std::string n = name ? name : "";
    if (n == "binary") return hp::Alphabet::binary();
    if (n == "quad") return hp::Alphabet::quad();
    throw hp::ParseError("unknown alphabet: " + n);
}

hp::SearchLimits limits_from(uint64_t max_states) {
    if (max_states == 0) return hp::limits_from_env();
    return hp::SearchLimits{max_states};
}

hp::Semantics cpp_sem(hp_semantics sem) {
    return sem == HP_SEM_ORIGINAL ? hp::Semantics::Original : hp::Semantics::Modified;
}

}  // namespace

extern "C" {

hp_status hp_strand_parse(const char* alphabet, const char* text, hp_strand** out) {
    if (!text || !out) return fail(HP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new hp_strand{hp::Strand::parse(alphabet_by_name(alphabet), text)};
        return HP_OK;
    });
}

void hp_strand_free(hp_strand* s) { delete s; }

int64_t hp_strand_size(const hp_strand* s) { return s ? s->s.size() : 0; }

hp_status hp_strand_text(const hp_strand* s, char** out) {
    if (!s || !out) return fail(HP_ERR_ARGUMENT, "null argument");
    *out = dup_string(s->s.text());
    return HP_OK;
}

void hp_string_free(char* s) { std::free(s); }

const char* hp_last_error(void) { return g_last_error.c_str(); }

hp_status hp_solve(const hp_strand* x, const hp_strand* y, hp_semantics sem,
                   uint64_t max_states, char** json_out) {
    if (!x || !y || !json_out) return fail(HP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        auto res = hp::hdd(x->s, y->s, cpp_sem(sem), {}, limits_from(max_states));
        nlohmann::json j;
        if (res.reachable()) {
            j["distance"] = res.distance;
            j["goal"] = {res.goal.i, res.goal.j};
        } else {
            j["distance"] = nullptr;
            j["goal"] = nullptr;
        }
        j["start"] = {res.start.i, res.start.j};
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& st : res.witness)
            steps.push_back((st.side == hp::Side::Left ? "L " : "R ") +
                            std::to_string(st.length));
        j["witness"] = steps;
        j["stats"] = {{"states_expanded", res.stats.states_expanded},
                      {"frontier_peak", res.stats.frontier_peak},
                      {"wall_time_ms", res.stats.wall_time_ms}};
        *json_out = dup_string(j.dump());
        return HP_OK;
    });
}

hp_status hp_reduce(const char* S, const char* T, char** json_out) {
    if (!S || !T || !json_out) return fail(HP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        auto inst = hp::build_reduction(S, T);
        nlohmann::json j{{"S", inst.S},
                         {"T", inst.T},
                         {"x", inst.x.text()},
                         {"y", inst.y.text()},
                         {"left_p", inst.leftP},
                         {"right_p", inst.rightP},
                         {"left_i", inst.leftI},
                         {"right_i", inst.rightI},
                         {"predicted_hdd", hp::predicted_hdd(S, T)}};
        *json_out = dup_string(j.dump());
        return HP_OK;
    });
}

hp_status hp_predicted_hdd(const char* S, const char* T, int64_t* out) {
    if (!S || !T || !out) return fail(HP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = hp::predicted_hdd(S, T);
        return HP_OK;
    });
}

hp_status hp_lcs_length(const char* S, const char* T, int64_t* out) {
    if (!S || !T || !out) return fail(HP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = hp::lcs(S, T).length;
        return HP_OK;
    });
}

hp_status hp_fib(int64_t n, int64_t* out) {
    if (!out) return fail(HP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = hp::fib(n);
        return HP_OK;
    });
}

hp_status hp_fib_inverse(int64_t num, int64_t den, int64_t* out) {
    if (!out) return fail(HP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = hp::fib_inverse(num, den);
        return HP_OK;
    });
}

hp_status hp_is_fibonacci_regular(int64_t a, int* out) {
    if (!out) return fail(HP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = hp::is_fibonacci_regular(a) ? 1 : 0;
        return HP_OK;
    });
}

hp_status hp_lift(const hp_strand* s, hp_strand** lifted, int64_t* mid) {
    if (!s || !lifted || !mid) return fail(HP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        auto res = hp::lift(s->s);
        *lifted = new hp_strand{std::move(res.lifted)};
        *mid = res.mid;
        return HP_OK;
    });
}

hp_status hp_verify(int exhaustive, int max_len_s, int max_len_t, int random_count,
                    int random_min_len, int random_max_len, uint64_t seed, int jobs,
                    uint64_t max_states, hp_line_cb cb, void* user, int* all_ok) {
    if (!cb || !all_ok) return fail(HP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        hp::VerifyPlan plan;
        plan.exhaustive = exhaustive != 0;
        plan.max_len_S = max_len_s;
        plan.max_len_T = max_len_t;
        plan.random_count = random_count;
        plan.random_min_len = random_min_len;
        plan.random_max_len = random_max_len;
        plan.seed = seed;
        plan.jobs = jobs;
        plan.limits = limits_from(max_states);
        auto records = hp::run_verify(plan);
        bool ok = true;
        for (const auto& rec : records) {
            cb(hp::verification_record_json(rec).c_str(), user);
            ok = ok && rec.ok();
        }
        *all_ok = ok ? 1 : 0;
        return HP_OK;
    });
}

hp_status hp_lemmas(hp_line_cb cb, void* user, int* all_pass) {
    if (!cb || !all_pass) return fail(HP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        bool ok = true;
        for (const auto& check : hp::run_lemmas()) {
            cb(hp::lemma_check_json(check).c_str(), user);
            ok = ok && check.pass;
        }
        *all_pass = ok ? 1 : 0;
        return HP_OK;
    });
}

hp_status hp_bench(const int* sizes_s, const int* sizes_t, size_t n_sizes,
                   int repetitions, uint64_t seed, uint64_t max_states, hp_line_cb cb,
                   void* user) {
    if (!sizes_s || !sizes_t || !cb) return fail(HP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<std::pair<int, int>> sizes;
        for (size_t k = 0; k < n_sizes; ++k) sizes.emplace_back(sizes_s[k], sizes_t[k]);
        auto records = hp::run_bench(sizes, repetitions, seed, limits_from(max_states));
        cb(hp::bench_csv_header().c_str(), user);
        for (const auto& rec : records) cb(hp::bench_record_csv(rec).c_str(), user);
        return HP_OK;
    });
}

}  // extern "C"
