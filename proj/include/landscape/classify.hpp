#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "landscape/transforms.hpp"

namespace landscape {

// One spectral level: nonzero modulus 2^(m/2) * ell with ell odd, carried
// around as the exact pair (m, ell) so no irrational value is ever stored.
struct SpectrumLevel {
    uint32_t m = 0;
    uint64_t ell = 1;

    friend bool operator==(const SpectrumLevel& a, const SpectrumLevel& b) {
        return a.m == b.m && a.ell == b.ell;
    }
    friend bool operator<(const SpectrumLevel& a, const SpectrumLevel& b) {
        return a.m != b.m ? a.m < b.m : a.ell < b.ell;
    }
};

struct LandscapeProfile {
    std::set<SpectrumLevel> levels;
    bool has_zero = false;
    std::vector<uint64_t> support;                         // points with H != 0, ascending
    std::vector<std::optional<SpectrumLevel>> point_level;  // per point; nullopt where H = 0

    uint32_t length() const {
        return static_cast<uint32_t>(levels.size()) + (has_zero ? 1 : 0);
    }
};

struct LandscapeOutcome {
    std::optional<LandscapeProfile> profile;
    std::optional<uint64_t> failure_point;  // first point whose modulus is not 2^(m/2)*ell
};

// |H|^2 = c decomposes as 2^m * ell^2 with ell odd iff the odd part of c is
// a perfect square; m is then the 2-adic valuation.
inline std::optional<SpectrumLevel> modulus_sq_decompose(const BigInt& c) {
    if (c.sgn() <= 0) return std::nullopt;
    uint32_t m = c.v2();
    auto root = c.div_pow2_exact(m).perfect_square_root();
    if (!root) return std::nullopt;
    auto ell = root->to_int64();
    if (!ell) throw std::overflow_error("modulus_sq_decompose: level does not fit 64 bits");
    return SpectrumLevel{m, static_cast<uint64_t>(*ell)};
}

inline std::optional<SpectrumLevel> modulus_sq_decompose(int64_t c) {
    return modulus_sq_decompose(BigInt(c));
}

inline LandscapeOutcome landscape_analyze(const CycSpectrum& spectrum) {
    LandscapeOutcome out;
    LandscapeProfile p;
    p.point_level.resize(spectrum.values.size());
    for (uint64_t u = 0; u < spectrum.values.size(); ++u) {
        auto nsq = spectrum.values[u].norm_sq().as_scalar();
        if (!nsq) {
            out.failure_point = u;
            return out;
        }
        if (nsq->is_zero()) {
            p.has_zero = true;
            continue;
        }
        auto level = modulus_sq_decompose(*nsq);
        if (!level) {
            out.failure_point = u;
            return out;
        }
        p.levels.insert(*level);
        p.support.push_back(u);
        p.point_level[u] = *level;
    }
    out.profile = std::move(p);
    return out;
}

inline LandscapeOutcome landscape_analyze(const GenBoolFn& f) {
    return landscape_analyze(gwht(f));
}

inline std::optional<LandscapeProfile> landscape_profile(const GenBoolFn& f) {
    return landscape_analyze(f).profile;
}

// s-plateaued: exactly one level (m, 1) with m = n + s. Parseval pins
// 2^(n-s) support points, so s = 0 forces full support and s >= 1 forces
// zeros; no separate has_zero condition is needed.
inline std::optional<uint32_t> plateau_order(const LandscapeProfile& p, uint32_t n) {
    if (p.levels.size() != 1) return std::nullopt;
    const SpectrumLevel& lv = *p.levels.begin();
    if (lv.ell != 1 || lv.m < n) return std::nullopt;
    return lv.m - n;
}

inline std::optional<uint32_t> plateau_order(const GenBoolFn& f) {
    auto p = landscape_profile(f);
    if (!p) return std::nullopt;
    return plateau_order(*p, f.n);
}

inline bool is_gbent(const GenBoolFn& f) {
    auto s = plateau_order(f);
    return s && *s == 0;
}

inline bool is_semibent(const GenBoolFn& f) {
    auto s = plateau_order(f);
    return s && (*s == 1 || *s == 2);
}

// All positive pairs l1 <= l2 with l1^2 + l2^2 = ell^2, by bounded search.
inline std::vector<std::pair<uint64_t, uint64_t>> pythagorean_reps(uint64_t ell) {
    if (ell < 1 || ell % 2 == 0)
        throw std::invalid_argument("pythagorean_reps: ell must be odd and positive");
    std::vector<std::pair<uint64_t, uint64_t>> reps;
    for (uint64_t l1 = 1; 2 * l1 * l1 <= ell * ell; ++l1) {
        uint64_t rest = ell * ell - l1 * l1;
        auto root = BigInt(static_cast<int64_t>(rest)).perfect_square_root();
        if (root) reps.emplace_back(l1, static_cast<uint64_t>(*root->to_int64()));
    }
    return reps;
}

// All pairs 0 <= a <= b with a^2 + b^2 = target.
inline std::vector<std::pair<uint64_t, uint64_t>> gaussian_sum_of_squares(uint64_t target) {
    std::vector<std::pair<uint64_t, uint64_t>> reps;
    for (uint64_t a = 0; 2 * a * a <= target; ++a) {
        uint64_t rest = target - a * a;
        auto root = BigInt(static_cast<int64_t>(rest)).perfect_square_root();
        if (root) reps.emplace_back(a, static_cast<uint64_t>(*root->to_int64()));
    }
    return reps;
}

struct RegularityReport {
    enum class Family { Pythagorean, Diagonal, Unmatched };

    struct ExceptionalPoint {
        uint64_t point = 0;
        int64_t re = 0, im = 0;  // H(u) = re + im*i at k = 2
        Family family = Family::Unmatched;
        // Pythagorean data: H = 2^((m-1)/2) (l1 e1 + l2 e2 + i tau (l1 e2 - l2 e1))
        uint64_t l1 = 0, l2 = 0;
        int eps1 = 1, eps2 = 1, tau = 1;
        // Diagonal data: H = 2^((m-1)/2) ell (sig1 + sig2 i)
        int sig1 = 1, sig2 = 1;
    };

    bool regular = false;
    GenBoolFn dual;  // f*; zero outside the support and at exceptional points
    std::vector<ExceptionalPoint> exceptional;  // k = 2, m odd points
    std::vector<uint64_t> unmatched;            // support points matching no predicted form
};

namespace detail {

// Matches H = a + b i (k = 2, m odd, |H|^2 = 2^m ell^2) against the two
// known families. The Pythagorean family is not assumed to exhaust the
// representations: points matching neither are reported, not rejected.
inline RegularityReport::ExceptionalPoint classify_gaussian_point(uint64_t u, int64_t a, int64_t b,
                                                                  uint32_t m, uint64_t ell) {
    RegularityReport::ExceptionalPoint pt;
    pt.point = u;
    pt.re = a;
    pt.im = b;
    int64_t base = int64_t(1) << ((m - 1) / 2);
    for (const auto& [l1, l2] : pythagorean_reps(ell)) {
        for (int eps1 : {1, -1})
            for (int eps2 : {1, -1})
                for (int tau : {1, -1}) {
                    int64_t re = base * (int64_t(l1) * eps1 + int64_t(l2) * eps2);
                    int64_t im = base * tau * (int64_t(l1) * eps2 - int64_t(l2) * eps1);
                    if (re == a && im == b) {
                        pt.family = RegularityReport::Family::Pythagorean;
                        pt.l1 = l1;
                        pt.l2 = l2;
                        pt.eps1 = eps1;
                        pt.eps2 = eps2;
                        pt.tau = tau;
                        return pt;
                    }
                }
    }
    for (int sig1 : {1, -1})
        for (int sig2 : {1, -1})
            if (base * int64_t(ell) * sig1 == a && base * int64_t(ell) * sig2 == b) {
                pt.family = RegularityReport::Family::Diagonal;
                pt.sig1 = sig1;
                pt.sig2 = sig2;
                return pt;
            }
    pt.family = RegularityReport::Family::Unmatched;
    return pt;
}

}  // namespace detail

// Dual extraction. At a support point of level (m, ell): for m even, or m
// odd with k != 2, there is a unique j with H(u) = 2^(m/2) ell zeta^j (the
// m odd case routing through sqrt2_element); the 2^k candidate exponents
// are simply enumerated. k = 2 with m odd is the exceptional
// Gaussian-integer branch.
inline RegularityReport regularity(const GenBoolFn& f, const CycSpectrum& spectrum,
                                   const LandscapeProfile& profile) {
    RegularityReport rep;
    rep.dual = GenBoolFn::zeros(f.n, f.k);
    bool all_regular = true;
    for (uint64_t u : profile.support) {
        const SpectrumLevel lv = *profile.point_level[u];
        const CycInt& h = spectrum.values[u];
        if (lv.m % 2 == 1 && f.k == 2) {
            auto a = h.coeff(0).to_int64();
            auto b = h.coeff(1).to_int64();
            if (!a || !b) throw std::overflow_error("regularity: coefficient does not fit 64 bits");
            auto pt = detail::classify_gaussian_point(u, *a, *b, lv.m, lv.ell);
            if (pt.family == RegularityReport::Family::Unmatched) rep.unmatched.push_back(u);
            rep.exceptional.push_back(pt);
            all_regular = false;
            continue;
        }
        CycInt base(f.k);
        if (lv.m % 2 == 0)
            base = CycInt::from_integer(BigInt::pow2(lv.m / 2) * BigInt(int64_t(lv.ell)), f.k);
        else
            base = CycInt::sqrt2_element(f.k).scaled(BigInt::pow2((lv.m - 1) / 2) *
                                                     BigInt(int64_t(lv.ell)));
        bool found = false;
        for (uint32_t j = 0; j < f.q() && !found; ++j) {
            if (base.times_monomial(j) == h) {
                rep.dual.values[u] = j;
                found = true;
            }
        }
        if (!found) {
            rep.unmatched.push_back(u);
            all_regular = false;
        }
    }
    rep.regular = all_regular;
    return rep;
}

inline RegularityReport regularity(const GenBoolFn& f) {
    CycSpectrum spectrum = gwht(f);
    auto outcome = landscape_analyze(spectrum);
    if (!outcome.profile)
        throw std::invalid_argument("regularity: input is not a landscape function");
    return regularity(f, spectrum, *outcome.profile);
}

}  // namespace landscape
