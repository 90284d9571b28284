#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "landscape/cyclotomic.hpp"
#include "landscape/gbf.hpp"

namespace landscape {

struct IntSpectrum {
    uint32_t n = 0;
    std::vector<int64_t> values;  // length 2^n, indexed by u
};

struct CycSpectrum {
    uint32_t n = 0;
    uint32_t k = 1;
    std::vector<CycInt> values;  // length 2^n, uniform level exponent k

    CycSpectrum() = default;
    CycSpectrum(uint32_t n_vars, uint32_t level_exp)
        : n(n_vars), k(level_exp), values(size_t(1) << n_vars, CycInt(level_exp)) {}
};

// In-place size-doubling butterfly: x -> (x0 + x1, x0 - x1) per pair,
// O(n 2^n) additions; unnormalized throughout, matching the transforms.
inline void fwht_inplace(std::vector<int64_t>& v) {
    size_t sz = v.size();
    if (sz == 0 || (sz & (sz - 1))) throw std::invalid_argument("fwht: length not a power of two");
    for (size_t len = 1; len < sz; len <<= 1)
        for (size_t i = 0; i < sz; i += len << 1)
            for (size_t j = i; j < i + len; ++j) {
                int64_t a = v[j], b = v[j + len];
                v[j] = a + b;
                v[j + len] = a - b;
            }
}

// W_f(u) = sum_x (-1)^(f(x) xor u.x)
inline IntSpectrum wht(const BoolFn& f) {
    IntSpectrum s;
    s.n = f.n;
    s.values.resize(f.size());
    for (uint64_t x = 0; x < f.size(); ++x) s.values[x] = f.table[x] ? -1 : 1;
    fwht_inplace(s.values);
    return s;
}

// F_f(u) = sum_x f(x) (-1)^(u.x), residues read as plain integers.
inline IntSpectrum fourier(const GenBoolFn& f) {
    IntSpectrum s;
    s.n = f.n;
    s.values.assign(f.values.begin(), f.values.end());
    fwht_inplace(s.values);
    return s;
}

// H_f(u) = sum_x zeta^f(x) (-1)^(u.x), exactly in Z[zeta]. One integer
// butterfly per ring coordinate of the monomial encoding: coordinate j
// starts from +1 where f(x) = j and -1 where f(x) = j + 2^(k-1).
inline CycSpectrum gwht(const GenBoolFn& f) {
    uint32_t half = 1u << (f.k - 1);
    CycSpectrum s(f.n, f.k);
    std::vector<int64_t> plane(f.size());
    for (uint32_t j = 0; j < half; ++j) {
        for (uint64_t x = 0; x < f.size(); ++x) {
            uint32_t v = f.values[x];
            plane[x] = (v == j) ? 1 : (v == j + half) ? -1 : 0;
        }
        fwht_inplace(plane);
        for (uint64_t u = 0; u < f.size(); ++u)
            if (plane[u] != 0) s.values[u].add_monomial_multiple(j, BigInt(plane[u]));
    }
    return s;
}

// C_{f,g}(z) = sum_x zeta^(f(x xor z) - g(x)), straight from the definition;
// the spectral product identities are checked against this, never used for it.
inline CycSpectrum crosscorrelation(const GenBoolFn& f, const GenBoolFn& g) {
    if (f.n != g.n || f.k != g.k)
        throw std::invalid_argument("crosscorrelation: dimension or level mismatch");
    uint32_t q = f.q();
    CycSpectrum s(f.n, f.k);
    std::vector<int64_t> count(q);
    for (uint64_t z = 0; z < f.size(); ++z) {
        std::fill(count.begin(), count.end(), 0);
        for (uint64_t x = 0; x < f.size(); ++x)
            ++count[(f.values[x ^ z] - g.values[x]) & (q - 1)];
        for (uint32_t r = 0; r < q; ++r)
            if (count[r] != 0) s.values[z].add_monomial_multiple(r, BigInt(count[r]));
    }
    return s;
}

inline CycSpectrum autocorrelation(const GenBoolFn& f) { return crosscorrelation(f, f); }

}  // namespace landscape
