#pragma once

// Test-side oracles: the transforms written as their defining quadratic
// sums, kept deliberately independent of the butterfly implementations
// they are used to check.

#include <random>

#include "landscape/transforms.hpp"

namespace oracle {

using namespace landscape;

inline IntSpectrum naive_wht(const BoolFn& f) {
    IntSpectrum s;
    s.n = f.n;
    s.values.assign(f.size(), 0);
    for (uint64_t u = 0; u < f.size(); ++u)
        for (uint64_t x = 0; x < f.size(); ++x)
            s.values[u] += (f.table[x] ^ dot_parity(u, x)) ? -1 : 1;
    return s;
}

// Quadratic-sum gwht. Signed unit counts are tallied per residue before the
// single ring combine at each u; the arithmetic is still the definition,
// term by term, with no butterfly anywhere.
inline CycSpectrum naive_gwht(const GenBoolFn& f) {
    CycSpectrum s(f.n, f.k);
    std::vector<int64_t> count(f.q());
    for (uint64_t u = 0; u < f.size(); ++u) {
        std::fill(count.begin(), count.end(), 0);
        for (uint64_t x = 0; x < f.size(); ++x) count[f.values[x]] += dot_parity(u, x) ? -1 : 1;
        CycInt acc(f.k);
        for (uint32_t r = 0; r < f.q(); ++r)
            if (count[r] != 0) acc.add_monomial_multiple(r, BigInt(count[r]));
        s.values[u] = acc;
    }
    return s;
}

inline IntSpectrum naive_fourier(const GenBoolFn& f) {
    IntSpectrum s;
    s.n = f.n;
    s.values.assign(f.size(), 0);
    for (uint64_t u = 0; u < f.size(); ++u)
        for (uint64_t x = 0; x < f.size(); ++x)
            s.values[u] += dot_parity(u, x) ? -int64_t(f.values[x]) : int64_t(f.values[x]);
    return s;
}

inline GenBoolFn random_genfn(std::mt19937_64& rng, uint32_t n, uint32_t k) {
    GenBoolFn f = GenBoolFn::zeros(n, k);
    for (auto& v : f.values) v = static_cast<uint32_t>(rng() & (f.q() - 1));
    return f;
}

inline BoolFn random_boolfn(std::mt19937_64& rng, uint32_t n) {
    BoolFn f = BoolFn::zeros(n);
    for (auto& b : f.table) b = static_cast<uint8_t>(rng() & 1);
    return f;
}

}  // namespace oracle
