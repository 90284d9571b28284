#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "landscape/classify.hpp"

namespace landscape {

// H_f(a) = 2^-(k-1) * sum over (c,d) in F_2^(k-1) x F_2^(k-1) of
// (-1)^(c.d) zeta^idx(d) W_{f_c}(a). The sum is accumulated exactly and the
// final division by 2^(k-1) must be exact; a remainder can only mean an
// implementation fault, never bad input.
inline CycSpectrum reconstruct_gwht(const GenBoolFn& f) {
    if (f.k < 2) throw std::invalid_argument("reconstruct_gwht: requires k >= 2");
    uint32_t half = 1u << (f.k - 1);
    std::vector<IntSpectrum> comp_wht;
    comp_wht.reserve(half);
    for (uint32_t c = 0; c < half; ++c) comp_wht.push_back(wht(component(f, c)));

    CycSpectrum s(f.n, f.k);
    for (uint64_t a = 0; a < f.size(); ++a) {
        std::vector<int64_t> exponent_coeff(half, 0);
        for (uint32_t d = 0; d < half; ++d)
            for (uint32_t c = 0; c < half; ++c) {
                int64_t w = comp_wht[c].values[a];
                exponent_coeff[d] += dot_parity(c, d) ? -w : w;
            }
        CycInt acc(f.k);
        for (uint32_t d = 0; d < half; ++d)
            if (exponent_coeff[d] != 0) acc.add_monomial_multiple(d, BigInt(exponent_coeff[d]));
        CycInt scaled(f.k);
        for (uint32_t j = 0; j < half; ++j)
            if (!acc.coeff(j).is_zero())
                scaled.add_monomial_multiple(j, acc.coeff(j).div_pow2_exact(f.k - 1));
        s.values[a] = scaled;
    }
    return s;
}

// Per-point certificate for the component characterization of landscape
// functions. Which fields are meaningful depends on the tag.
struct ComponentWitness {
    enum class Tag { Zero, EvenLevel, OddLevel, OddLevelK2 };

    uint64_t point = 0;
    Tag tag = Tag::Zero;
    std::optional<SpectrumLevel> level;

    // EvenLevel: W_{f_c}(a) = (-1)^(c.gbits + s) 2^(m/2) ell
    uint32_t g = 0;
    uint8_t s = 0;

    // OddLevel (k >= 3): difference of two signed indicators, with the ring
    // constraint g2 - g1 + 2^(k-1)(s2 - s1) = 2^(k-2) in Z_2^k
    uint32_t g1 = 0, g2 = 0;
    uint8_t s1 = 0, s2 = 0;

    // OddLevelK2: either family of the Gaussian branch
    bool pythagorean = false;
    uint64_t l1 = 0, l2 = 0;
    int eps1 = 1, eps2 = 1, tau = 1;
    int sig1 = 1, sig2 = 1;
};

struct WitnessReport {
    bool pass = false;
    std::optional<std::pair<uint64_t, uint32_t>> counterexample;  // (point a, component c)
    std::string reason;
    bool closing_moduli_ok = false;  // nonzero |W_{f_c}| all lie in {2^ceil(m_i/2) * ell_i}
    std::vector<ComponentWitness> witnesses;
};

namespace detail {

// Case checks on a single point, given the component transform values at
// that point. Split out so the contrapositive paths are testable directly.
// When several witness tuples fit, enumeration order below makes the
// reported one deterministic: ascending (g1, s1) in the odd case, reps
// ascending then (eps1, eps2, tau) over (+1, -1) in the Gaussian case.

inline bool check_point_zero(const std::vector<int64_t>& w, uint32_t* bad_c) {
    for (uint32_t c = 0; c < w.size(); ++c)
        if (w[c] != 0) {
            *bad_c = c;
            return false;
        }
    return true;
}

inline std::optional<ComponentWitness> check_point_even(const std::vector<int64_t>& w, uint32_t k,
                                                        SpectrumLevel lv, uint32_t* bad_c) {
    int64_t base = (int64_t(1) << (lv.m / 2)) * int64_t(lv.ell);
    ComponentWitness wit;
    wit.tag = ComponentWitness::Tag::EvenLevel;
    wit.level = lv;
    if (w[0] != base && w[0] != -base) {
        *bad_c = 0;
        return std::nullopt;
    }
    wit.s = w[0] < 0;
    uint32_t gbits = 0;
    for (uint32_t i = 0; i + 1 < k; ++i) {
        int64_t wi = w[size_t(1) << i];
        if (wi != base && wi != -base) {
            *bad_c = 1u << i;
            return std::nullopt;
        }
        if ((wi < 0) != (w[0] < 0)) gbits |= 1u << i;
    }
    wit.g = gbits;
    for (uint32_t c = 0; c < w.size(); ++c) {
        int64_t expect = (dot_parity(c, gbits) ^ wit.s) ? -base : base;
        if (w[c] != expect) {
            *bad_c = c;
            return std::nullopt;
        }
    }
    return wit;
}

inline std::optional<ComponentWitness> check_point_odd(const std::vector<int64_t>& w, uint32_t k,
                                                       SpectrumLevel lv, uint32_t* bad_c) {
    uint32_t half = 1u << (k - 1);
    int64_t base = (int64_t(1) << ((lv.m - 1) / 2)) * int64_t(lv.ell);
    for (uint32_t g1 = 0; g1 < half; ++g1)
        for (uint8_t s1 = 0; s1 <= 1; ++s1) {
            uint32_t v = (g1 + (uint32_t(s1) << (k - 1)) + (1u << (k - 2))) & ((1u << k) - 1);
            uint32_t g2 = v & (half - 1);
            uint8_t s2 = static_cast<uint8_t>(v >> (k - 1));
            bool ok = true;
            uint32_t first_bad = 0;
            for (uint32_t c = 0; c < w.size(); ++c) {
                int t1 = (dot_parity(c, g1) ^ s1) ? -1 : 1;
                int t2 = (dot_parity(c, g2) ^ s2) ? -1 : 1;
                if (w[c] != (t1 - t2) * base) {
                    ok = false;
                    first_bad = c;
                    break;
                }
            }
            if (ok) {
                ComponentWitness wit;
                wit.tag = ComponentWitness::Tag::OddLevel;
                wit.level = lv;
                wit.g1 = g1;
                wit.s1 = s1;
                wit.g2 = g2;
                wit.s2 = s2;
                return wit;
            }
            *bad_c = first_bad;
        }
    return std::nullopt;
}

inline std::optional<ComponentWitness> check_point_k2_odd(const std::vector<int64_t>& w,
                                                          SpectrumLevel lv, uint32_t* bad_c) {
    int64_t base = int64_t(1) << ((lv.m - 1) / 2);
    ComponentWitness wit;
    wit.tag = ComponentWitness::Tag::OddLevelK2;
    wit.level = lv;
    for (const auto& [l1, l2] : pythagorean_reps(lv.ell))
        for (int eps1 : {1, -1})
            for (int eps2 : {1, -1})
                for (int tau : {1, -1}) {
                    int64_t sum = int64_t(l1) * eps1 + int64_t(l2) * eps2;
                    int64_t diff = int64_t(l1) * eps2 - int64_t(l2) * eps1;
                    if (w[0] == base * (sum + tau * diff) && w[1] == base * (sum - tau * diff)) {
                        wit.pythagorean = true;
                        wit.l1 = l1;
                        wit.l2 = l2;
                        wit.eps1 = eps1;
                        wit.eps2 = eps2;
                        wit.tau = tau;
                        return wit;
                    }
                }
    for (int sig1 : {1, -1})
        for (int sig2 : {1, -1})
            if (w[0] == base * int64_t(lv.ell) * (sig1 + sig2) &&
                w[1] == base * int64_t(lv.ell) * (sig1 - sig2)) {
                wit.pythagorean = false;
                wit.sig1 = sig1;
                wit.sig2 = sig2;
                return wit;
            }
    *bad_c = 0;
    return std::nullopt;
}

}  // namespace detail

// Bidirectional checker for the component characterization: classifies every
// point of H_f through the landscape machinery, then verifies the component
// transforms take exactly the displayed shapes, extracting witnesses.
// Failures are verdicts (with the first counterexample), not errors.
inline WitnessReport check_components(const GenBoolFn& f) {
    if (f.k < 2) throw std::invalid_argument("check_components: requires k >= 2");
    WitnessReport rep;

    CycSpectrum spectrum = gwht(f);
    auto outcome = landscape_analyze(spectrum);
    if (!outcome.profile) {
        rep.pass = false;
        rep.counterexample = {*outcome.failure_point, 0};
        std::ostringstream os;
        os << "spectral modulus at point " << *outcome.failure_point
           << " is not of the form 2^(m/2)*ell; hypothesis fails";
        rep.reason = os.str();
        return rep;
    }
    const LandscapeProfile& profile = *outcome.profile;

    uint32_t half = 1u << (f.k - 1);
    std::vector<IntSpectrum> comp_wht;
    comp_wht.reserve(half);
    for (uint32_t c = 0; c < half; ++c) comp_wht.push_back(wht(component(f, c)));

    std::vector<int64_t> w(half);
    for (uint64_t a = 0; a < f.size(); ++a) {
        for (uint32_t c = 0; c < half; ++c) w[c] = comp_wht[c].values[a];
        uint32_t bad_c = 0;
        const auto& lv = profile.point_level[a];
        if (!lv) {
            if (!detail::check_point_zero(w, &bad_c)) {
                rep.counterexample = {a, bad_c};
                rep.reason = "H_f vanishes but a component transform does not";
                return rep;
            }
            ComponentWitness wit;
            wit.tag = ComponentWitness::Tag::Zero;
            wit.point = a;
            rep.witnesses.push_back(wit);
            continue;
        }
        std::optional<ComponentWitness> wit;
        if (lv->m % 2 == 0)
            wit = detail::check_point_even(w, f.k, *lv, &bad_c);
        else if (f.k >= 3)
            wit = detail::check_point_odd(w, f.k, *lv, &bad_c);
        else
            wit = detail::check_point_k2_odd(w, *lv, &bad_c);
        if (!wit) {
            rep.counterexample = {a, bad_c};
            rep.reason = "no component witness matches the displayed form";
            return rep;
        }
        wit->point = a;
        rep.witnesses.push_back(*wit);
    }

    // Closing claim: nonzero component moduli lie in {2^ceil(m_i/2) * ell_i}.
    rep.closing_moduli_ok = true;
    std::set<int64_t> allowed;
    for (const auto& lv : profile.levels)
        allowed.insert((int64_t(1) << ((lv.m + 1) / 2)) * int64_t(lv.ell));
    for (uint64_t a = 0; a < f.size() && rep.closing_moduli_ok; ++a)
        for (uint32_t c = 0; c < half; ++c) {
            int64_t v = comp_wht[c].values[a];
            if (v != 0 && !allowed.count(v < 0 ? -v : v)) {
                rep.closing_moduli_ok = false;
                rep.counterexample = {a, c};
                rep.reason = "component modulus outside the predicted set";
                break;
            }
        }
    rep.pass = rep.closing_moduli_ok;
    return rep;
}

}  // namespace landscape
