#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "landscape/classify.hpp"

namespace landscape {

struct PlateauResult {
    enum class Method { Direct, Derivative, Moment };

    std::optional<uint32_t> order;
    Method method = Method::Direct;
    std::optional<uint64_t> refutation_point;  // x whose per-point sum deviates
    std::optional<CycInt> off_value;           // the deviating sum, or the off moment
};

// sum over (a, b) of zeta^(D_b D_a f(x)), straight from the definition:
// O(4^n) residue counts per x, then one monomial combine. The proof-side
// autocorrelation chain is a test identity, not the implementation.
inline CycInt second_derivative_sum(const GenBoolFn& f, uint64_t x) {
    uint32_t q = f.q();
    std::vector<int64_t> count(q, 0);
    uint32_t fx = f.values[x];
    for (uint64_t a = 0; a < f.size(); ++a) {
        uint32_t fa = f.values[x ^ a];
        for (uint64_t b = 0; b < f.size(); ++b)
            ++count[(f.values[x ^ a ^ b] - f.values[x ^ b] - fa + fx) & (q - 1)];
    }
    CycInt sum(f.k);
    for (uint32_t r = 0; r < q; ++r)
        if (count[r] != 0) sum.add_monomial_multiple(r, BigInt(count[r]));
    return sum;
}

namespace detail {

// Scalar power of two 2^(n+s) with 0 <= s <= n, else nothing.
inline std::optional<uint32_t> as_plateau_exponent(const CycInt& v, uint32_t n, uint32_t base) {
    auto scalar = v.as_scalar();
    if (!scalar || scalar->sgn() <= 0) return std::nullopt;
    uint32_t e = scalar->v2();
    if (*scalar != BigInt::pow2(e)) return std::nullopt;
    if (e < base || e > base + n) return std::nullopt;
    return e - base;
}

}  // namespace detail

// f is s-plateaued iff the second-derivative sum equals 2^(n+s) at every x.
inline PlateauResult plateau_by_derivatives(const GenBoolFn& f) {
    PlateauResult res;
    res.method = PlateauResult::Method::Derivative;
    CycInt first = second_derivative_sum(f, 0);
    auto s = detail::as_plateau_exponent(first, f.n, f.n);
    if (!s) {
        res.refutation_point = 0;
        res.off_value = first;
        return res;
    }
    for (uint64_t x = 1; x < f.size(); ++x) {
        CycInt v = second_derivative_sum(f, x);
        if (v != first) {
            res.refutation_point = x;
            res.off_value = v;
            return res;
        }
    }
    res.order = *s;
    return res;
}

// sum over d of |H_f(d)|^4, exactly in the ring.
inline CycInt fourth_moment(const GenBoolFn& f) {
    CycSpectrum s = gwht(f);
    CycInt total(f.k);
    for (const auto& h : s.values) {
        CycInt nsq = h.norm_sq();
        total += nsq * nsq;
    }
    return total;
}

// f is s-plateaued iff the fourth moment equals 2^(3n+s); s is confined to
// integers in [0, n], so non-power moments simply yield no order.
inline PlateauResult plateau_by_moment(const GenBoolFn& f) {
    PlateauResult res;
    res.method = PlateauResult::Method::Moment;
    CycInt m = fourth_moment(f);
    auto s = detail::as_plateau_exponent(m, f.n, 3 * f.n);
    if (!s) {
        res.off_value = m;
        return res;
    }
    res.order = *s;
    return res;
}

// Spectral route, for cross-validation against the two above.
inline PlateauResult plateau_direct(const GenBoolFn& f) {
    PlateauResult res;
    res.method = PlateauResult::Method::Direct;
    res.order = plateau_order(f);
    return res;
}

}  // namespace landscape
