#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "landscape/classify.hpp"

namespace landscape {

inline bool is_bent(const BoolFn& f) {
    if (f.n % 2) return false;
    IntSpectrum s = wht(f);
    int64_t target = int64_t(1) << f.n;
    for (int64_t w : s.values)
        if (w * w != target) return false;
    return true;
}

// g(x, y) = f(x) + 2^(k-1) a y on n+1 variables, y the new top variable.
// H_g(u, v) = (1 + (-1)^(a+v)) H_f(u): every nonzero modulus doubles, so a
// level (m, ell) moves to (m+2, ell) while a plateau order s becomes s+1 on
// one more variable (m = n + s on both sides). Zero always enters the lifted
// spectrum (half the points see the vanishing factor), so the length grows
// by one exactly when f had full spectral support.
inline GenBoolFn affine_lift(const GenBoolFn& f, uint8_t a_bit) {
    if (a_bit > 1) throw std::invalid_argument("affine_lift: a_bit must be 0 or 1");
    GenBoolFn g = GenBoolFn::zeros(f.n + 1, f.k);
    uint64_t block = f.size();
    uint32_t add = a_bit ? (1u << (f.k - 1)) : 0;
    for (uint64_t x = 0; x < block; ++x) {
        g.values[x] = f.values[x];
        g.values[x + block] = (f.values[x] + add) & (f.q() - 1);
    }
    return g;
}

// Classical indirect sum: h(x,y) = f1(x) ^ g1(y) ^ (f1(x) ^ f2(x))(g1(y) ^ g2(y)).
// x occupies the low r variables, y the high s_dim variables.
inline BoolFn indirect_sum_boolean(const BoolFn& f1, const BoolFn& f2, const BoolFn& g1,
                                   const BoolFn& g2) {
    if (f1.n != f2.n) throw std::invalid_argument("indirect_sum: f pair dimension mismatch");
    if (g1.n != g2.n) throw std::invalid_argument("indirect_sum: g pair dimension mismatch");
    BoolFn h = BoolFn::zeros(f1.n + g1.n);
    for (uint64_t y = 0; y < g1.size(); ++y)
        for (uint64_t x = 0; x < f1.size(); ++x) {
            uint8_t v = f1.table[x] ^ g1.table[y] ^
                        ((f1.table[x] ^ f2.table[x]) & (g1.table[y] ^ g2.table[y]));
            h.table[(y << f1.n) | x] = v;
        }
    return h;
}

struct IndirectSumSpec {
    GenBoolFn f1, f2;  // on r variables, same level exponent
    BoolFn g1, g2;     // on s_dim variables, bent (verified)
};

namespace detail {

inline std::set<SpectrumLevel> shifted_levels(const LandscapeProfile& p, uint32_t shift) {
    std::set<SpectrumLevel> out;
    for (const auto& lv : p.levels) out.insert(SpectrumLevel{lv.m + shift, lv.ell});
    return out;
}

}  // namespace detail

// Generalized indirect sum h(x,y) = f1(x) + 2^(k-1) g1(y) + (f2(x) - f1(x))(g1(y) + g2(y)),
// everything reduced mod 2^k with g1(y) + g2(y) read as an integer in {0,1,2},
// exactly as displayed. The constructed spectrum obeys
//   2 H_h(u,v) = H_f1(u)(W_g1(v) + W_g2(v)) + H_f2(u)(W_g1(v) - W_g2(v)),
// which drives the post-construction verification below: the claimed output
// levels are recomputed from scratch and any mismatch throws, since with the
// preconditions satisfied a mismatch can only be an implementation bug.
inline GenBoolFn indirect_sum_generalized(const IndirectSumSpec& spec) {
    const GenBoolFn& f1 = spec.f1;
    const GenBoolFn& f2 = spec.f2;
    if (f1.n != f2.n || f1.k != f2.k)
        throw std::invalid_argument("indirect_sum: f pair dimension or level mismatch");
    if (spec.g1.n != spec.g2.n)
        throw std::invalid_argument("indirect_sum: g pair dimension mismatch");
    if (!is_bent(spec.g1) || !is_bent(spec.g2))
        throw std::invalid_argument("indirect_sum: g1 and g2 must be bent");

    auto p1 = landscape_profile(f1);
    auto p2 = landscape_profile(f2);
    if (!p1 || !p2)
        throw std::invalid_argument("indirect_sum: f1 and f2 must be landscape functions");

    auto t1 = plateau_order(*p1, f1.n);
    auto t2 = plateau_order(*p2, f2.n);
    bool same_plateau = t1 && t2 && *t1 == *t2;
    if (!same_plateau) {
        // Length-3 / general-landscape conclusions additionally need the
        // bent pair distinct and non-complementary.
        if (spec.g1 == spec.g2 || spec.g1 == spec.g2.complement())
            throw std::invalid_argument(
                "indirect_sum: g1 must differ from g2 and from its complement");
    }

    uint32_t q = f1.q();
    GenBoolFn h = GenBoolFn::zeros(f1.n + spec.g1.n, f1.k);
    for (uint64_t y = 0; y < spec.g1.size(); ++y) {
        uint32_t gsum = uint32_t(spec.g1.table[y]) + uint32_t(spec.g2.table[y]);
        uint32_t glin = uint32_t(spec.g1.table[y]) << (f1.k - 1);
        for (uint64_t x = 0; x < f1.size(); ++x) {
            uint32_t v = f1.values[x] + glin + (f2.values[x] - f1.values[x]) * gsum;
            h.values[(y << f1.n) | x] = v & (q - 1);
        }
    }

    auto ph = landscape_profile(h);
    if (!ph) throw std::logic_error("indirect_sum: output failed landscape verification");
    if (same_plateau) {
        auto th = plateau_order(*ph, h.n);
        if (!th || *th != *t1)
            throw std::logic_error("indirect_sum: output is not t-plateaued as claimed");
    } else {
        std::set<SpectrumLevel> expected = detail::shifted_levels(*p1, spec.g1.n);
        for (const auto& lv : detail::shifted_levels(*p2, spec.g1.n)) expected.insert(lv);
        if (ph->levels != expected)
            throw std::logic_error("indirect_sum: output levels differ from the claimed set");
        if (t1 && t2 && ph->length() != 3)
            throw std::logic_error("indirect_sum: output length is not 3 as claimed");
    }
    return h;
}

// Maiorana-McFarland bent function on r variables: f(x, y) = x . perm(y) ^ tail(y),
// x the low r/2 variables.
inline BoolFn mm_bent(uint32_t r, const std::vector<uint32_t>& perm, const BoolFn& tail) {
    if (r < 2 || r % 2) throw std::invalid_argument("mm_bent: r must be even and positive");
    uint32_t m = r / 2;
    uint64_t msize = uint64_t(1) << m;
    if (perm.size() != msize) throw std::invalid_argument("mm_bent: permutation size != 2^(r/2)");
    std::vector<uint8_t> seen(msize, 0);
    for (uint32_t v : perm) {
        if (v >= msize || seen[v]) throw std::invalid_argument("mm_bent: perm is not a bijection");
        seen[v] = 1;
    }
    if (tail.n != m) throw std::invalid_argument("mm_bent: tail must be on r/2 variables");
    BoolFn f = BoolFn::zeros(r);
    for (uint64_t y = 0; y < msize; ++y)
        for (uint64_t x = 0; x < msize; ++x)
            f.table[(y << m) | x] = dot_parity(x, perm[y]) ^ tail.table[y];
    return f;
}

inline BoolFn mm_bent(uint32_t r) {
    uint32_t m = r / 2;
    std::vector<uint32_t> identity(uint64_t(1) << m);
    std::iota(identity.begin(), identity.end(), 0u);
    return mm_bent(r, identity, BoolFn::zeros(m));
}

// Pads f with t ignored variables; a bent f becomes t-plateaued with
// |W| in {0, 2^(r/2 + t)}.
inline BoolFn pad_plateaued(const BoolFn& f, uint32_t t) {
    if (t == 0) return f;
    BoolFn g = BoolFn::zeros(f.n + t);
    for (uint64_t z = 0; z < (uint64_t(1) << t); ++z)
        for (uint64_t x = 0; x < f.size(); ++x) g.table[(z << f.n) | x] = f.table[x];
    return g;
}

}  // namespace landscape
