#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "landscape/classify.hpp"

namespace landscape {

struct SearchFilter {
    std::optional<uint32_t> length;
    std::optional<std::set<SpectrumLevel>> levels;
    std::optional<uint32_t> plateau;
    bool gbent = false;
    bool semibent = false;
    bool regular = false;
    bool exceptional = false;  // at least one k=2, m-odd support point

    bool trivial() const {
        return !length && !levels && !plateau && !gbent && !semibent && !regular && !exceptional;
    }
};

struct BudgetExceeded : std::runtime_error {
    uint32_t required_bits;  // enumeration size is 2^required_bits
    uint64_t budget;

    BudgetExceeded(uint32_t bits, uint64_t b)
        : std::runtime_error("enumeration size 2^" + std::to_string(bits) +
                             " exceeds budget " + std::to_string(b)),
          required_bits(bits),
          budget(b) {}
};

constexpr uint64_t kDefaultSearchBudget = uint64_t(1) << 24;

namespace detail {

// Lexicographic truth-table order: counter digit 0 (most significant, base
// 2^k) is the value at point 0, so successive counters sort the value
// tuples like words. Reproducible "first example found" depends on this.
inline GenBoolFn function_at(uint64_t counter, uint32_t n, uint32_t k) {
    uint64_t points = uint64_t(1) << n;
    GenBoolFn f = GenBoolFn::zeros(n, k);
    for (uint64_t i = points; i-- > 0;) {
        f.values[i] = static_cast<uint32_t>(counter & (f.q() - 1));
        counter >>= k;
    }
    return f;
}

}  // namespace detail

inline bool filter_matches(const SearchFilter& filter, const GenBoolFn& f,
                           const LandscapeOutcome& outcome) {
    if (filter.trivial()) return true;
    if (!outcome.profile) return false;
    const LandscapeProfile& p = *outcome.profile;
    if (filter.length && p.length() != *filter.length) return false;
    if (filter.levels && p.levels != *filter.levels) return false;
    auto s = plateau_order(p, f.n);
    if (filter.plateau && (!s || *s != *filter.plateau)) return false;
    if (filter.gbent && (!s || *s != 0)) return false;
    if (filter.semibent && (!s || (*s != 1 && *s != 2))) return false;
    if (filter.regular || filter.exceptional) {
        RegularityReport rep = regularity(f);
        if (filter.regular && !rep.regular) return false;
        if (filter.exceptional && rep.exceptional.empty()) return false;
    }
    return true;
}

using SearchSink =
    std::function<void(const GenBoolFn&, const std::optional<LandscapeProfile>&)>;

// Visits every f in GB_n^(2^k) in lexicographic truth-table order and emits
// the ones matching the filter. Work is partitioned into contiguous counter
// ranges across jobs and buffered, so emission order is canonical regardless
// of thread count. Returns the number of functions visited.
inline uint64_t enumerate(uint32_t n, uint32_t k, const SearchFilter& filter,
                          const SearchSink& sink, uint64_t budget = kDefaultSearchBudget,
                          unsigned jobs = 1) {
    uint64_t bits64 = uint64_t(k) << n;
    if (bits64 >= 63) throw BudgetExceeded(static_cast<uint32_t>(bits64), budget);
    uint64_t total = uint64_t(1) << bits64;
    if (total > budget) throw BudgetExceeded(static_cast<uint32_t>(bits64), budget);

    struct Match {
        uint64_t counter;
        GenBoolFn fn;
        std::optional<LandscapeProfile> profile;
    };

    if (jobs <= 1) {
        for (uint64_t c = 0; c < total; ++c) {
            GenBoolFn f = detail::function_at(c, n, k);
            LandscapeOutcome outcome = landscape_analyze(f);
            if (filter_matches(filter, f, outcome)) sink(f, outcome.profile);
        }
        return total;
    }

    unsigned workers = static_cast<unsigned>(std::min<uint64_t>(jobs, total));
    std::vector<std::vector<Match>> buckets(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t lo = total / workers * w + std::min<uint64_t>(w, total % workers);
        uint64_t hi = lo + total / workers + (w < total % workers ? 1 : 0);
        threads.emplace_back([&, w, lo, hi] {
            for (uint64_t c = lo; c < hi; ++c) {
                GenBoolFn f = detail::function_at(c, n, k);
                LandscapeOutcome outcome = landscape_analyze(f);
                if (filter_matches(filter, f, outcome))
                    buckets[w].push_back({c, std::move(f), std::move(outcome.profile)});
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& bucket : buckets)
        for (const auto& m : bucket) sink(m.fn, m.profile);
    return total;
}

// Deterministic pseudorandom stream of functions, reproducible from the
// seed across platforms (mt19937_64 output masked to the residue range).
inline void sample(uint32_t n, uint32_t k, uint64_t count, uint64_t seed, const SearchSink& sink) {
    std::mt19937_64 rng(seed);
    for (uint64_t i = 0; i < count; ++i) {
        GenBoolFn f = GenBoolFn::zeros(n, k);
        for (auto& v : f.values) v = static_cast<uint32_t>(rng() & (f.q() - 1));
        LandscapeOutcome outcome = landscape_analyze(f);
        sink(f, outcome.profile);
    }
}

}  // namespace landscape
