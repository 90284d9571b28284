#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace landscape {

// Shared point-index convention: x = (x_1,...,x_n) maps to
// index = sum x_i * 2^(i-1), i.e. x_1 is the least significant bit.
inline int dot_parity(uint64_t u, uint64_t x) {
    return std::popcount(u & x) & 1;
}

struct BoolFn {
    uint32_t n = 0;
    std::vector<uint8_t> table;  // entries 0/1, length 2^n

    BoolFn() = default;
    BoolFn(uint32_t n_vars, std::vector<uint8_t> bits) : n(n_vars), table(std::move(bits)) {
        validate();
    }

    static BoolFn zeros(uint32_t n_vars) {
        return BoolFn(n_vars, std::vector<uint8_t>(size_t(1) << n_vars, 0));
    }

    static BoolFn from_lambda(uint32_t n_vars, const std::function<int(uint64_t)>& fn) {
        BoolFn f = zeros(n_vars);
        for (uint64_t x = 0; x < f.table.size(); ++x) f.table[x] = fn(x) & 1;
        return f;
    }

    size_t size() const { return table.size(); }
    uint8_t operator()(uint64_t x) const { return table[x]; }

    BoolFn complement() const {
        BoolFn r = *this;
        for (auto& b : r.table) b ^= 1;
        return r;
    }

    friend BoolFn operator^(const BoolFn& a, const BoolFn& b) {
        if (a.n != b.n) throw std::invalid_argument("BoolFn: dimension mismatch");
        BoolFn r = a;
        for (size_t i = 0; i < r.table.size(); ++i) r.table[i] ^= b.table[i];
        return r;
    }

    friend bool operator==(const BoolFn& a, const BoolFn& b) {
        return a.n == b.n && a.table == b.table;
    }
    friend bool operator!=(const BoolFn& a, const BoolFn& b) { return !(a == b); }

private:
    void validate() const {
        if (n < 1) throw std::invalid_argument("BoolFn: need at least one variable");
        if (table.size() != size_t(1) << n) throw std::invalid_argument("BoolFn: table length != 2^n");
        for (uint8_t b : table)
            if (b > 1) throw std::invalid_argument("BoolFn: non-bit entry");
    }
};

// f: F_2^n -> Z_{2^k}, stored densely as residues.
struct GenBoolFn {
    uint32_t n = 0;
    uint32_t k = 1;
    std::vector<uint32_t> values;  // entries in [0, 2^k), length 2^n

    GenBoolFn() = default;
    GenBoolFn(uint32_t n_vars, uint32_t level_exp, std::vector<uint32_t> vals)
        : n(n_vars), k(level_exp), values(std::move(vals)) {
        validate();
    }

    static GenBoolFn zeros(uint32_t n_vars, uint32_t level_exp) {
        return GenBoolFn(n_vars, level_exp, std::vector<uint32_t>(size_t(1) << n_vars, 0));
    }

    static GenBoolFn from_lambda(uint32_t n_vars, uint32_t level_exp,
                                 const std::function<uint32_t(uint64_t)>& fn) {
        GenBoolFn f = zeros(n_vars, level_exp);
        for (uint64_t x = 0; x < f.values.size(); ++x) f.values[x] = fn(x) & (f.q() - 1);
        return f;
    }

    static GenBoolFn from_bool(const BoolFn& f) {
        return GenBoolFn(f.n, 1, std::vector<uint32_t>(f.table.begin(), f.table.end()));
    }

    uint32_t q() const { return 1u << k; }
    size_t size() const { return values.size(); }
    uint32_t operator()(uint64_t x) const { return values[x]; }

    friend bool operator==(const GenBoolFn& a, const GenBoolFn& b) {
        return a.n == b.n && a.k == b.k && a.values == b.values;
    }
    friend bool operator!=(const GenBoolFn& a, const GenBoolFn& b) { return !(a == b); }

private:
    void validate() const {
        if (n < 1) throw std::invalid_argument("GenBoolFn: need at least one variable");
        if (k < 1 || k > 24) throw std::invalid_argument("GenBoolFn: level exponent out of range");
        if (values.size() != size_t(1) << n)
            throw std::invalid_argument("GenBoolFn: values length != 2^n");
        for (uint32_t v : values)
            if (v >= q()) throw std::invalid_argument("GenBoolFn: value out of range [0, 2^k)");
    }
};

// f(x) = a_0(x) + 2 a_1(x) + ... + 2^(k-1) a_{k-1}(x): the binary digits of
// each output, one Boolean plane per bit.
inline std::vector<BoolFn> to_bitplanes(const GenBoolFn& f) {
    std::vector<BoolFn> planes(f.k, BoolFn::zeros(f.n));
    for (uint64_t x = 0; x < f.size(); ++x)
        for (uint32_t i = 0; i < f.k; ++i) planes[i].table[x] = (f.values[x] >> i) & 1;
    return planes;
}

inline GenBoolFn from_bitplanes(const std::vector<BoolFn>& planes) {
    if (planes.empty()) throw std::invalid_argument("from_bitplanes: no planes");
    uint32_t n = planes[0].n;
    for (const auto& p : planes)
        if (p.n != n) throw std::invalid_argument("from_bitplanes: inconsistent dimensions");
    GenBoolFn f = GenBoolFn::zeros(n, static_cast<uint32_t>(planes.size()));
    for (uint64_t x = 0; x < f.size(); ++x) {
        uint32_t v = 0;
        for (uint32_t i = 0; i < planes.size(); ++i) v |= uint32_t(planes[i].table[x]) << i;
        f.values[x] = v;
    }
    return f;
}

// D_a f(x) = f(x) - f(x xor a) mod 2^k.
inline GenBoolFn derivative(const GenBoolFn& f, uint64_t a) {
    GenBoolFn r = GenBoolFn::zeros(f.n, f.k);
    uint32_t mask = f.q() - 1;
    for (uint64_t x = 0; x < f.size(); ++x)
        r.values[x] = (f.values[x] - f.values[x ^ a]) & mask;
    return r;
}

// D_b D_a f(x) = f(x^a^b) - f(x^b) - f(x^a) + f(x) mod 2^k.
inline GenBoolFn second_derivative(const GenBoolFn& f, uint64_t a, uint64_t b) {
    GenBoolFn r = GenBoolFn::zeros(f.n, f.k);
    uint32_t mask = f.q() - 1;
    for (uint64_t x = 0; x < f.size(); ++x)
        r.values[x] = (f.values[x ^ a ^ b] - f.values[x ^ b] - f.values[x ^ a] + f.values[x]) & mask;
    return r;
}

// Canonical bijection between bit tuples (c_0,...,c_{w-1}) and Z_{2^w}.
inline uint32_t component_index(const std::vector<uint8_t>& bits) {
    uint32_t j = 0;
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) throw std::invalid_argument("component_index: non-bit entry");
        j |= uint32_t(bits[i]) << i;
    }
    return j;
}

inline std::vector<uint8_t> component_bits(uint32_t j, uint32_t width) {
    if (width < 32 && j >= (1u << width))
        throw std::invalid_argument("component_bits: index out of range");
    std::vector<uint8_t> bits(width);
    for (uint32_t i = 0; i < width; ++i) bits[i] = (j >> i) & 1;
    return bits;
}

// Component f_c = (xor of c_i * a_i over i = 0..k-2) xor a_{k-1}, for
// c in F_2^(k-1). This is the unique index pairing under which the
// component reconstruction of the generalized transform holds (checkable
// by hand at k = 2: f_0 = a_1, f_1 = a_0 xor a_1).
inline BoolFn component(const GenBoolFn& f, uint32_t c) {
    if (f.k < 2) throw std::invalid_argument("component: requires k >= 2");
    if (c >= (1u << (f.k - 1))) throw std::invalid_argument("component: index out of range");
    BoolFn r = BoolFn::zeros(f.n);
    for (uint64_t x = 0; x < f.size(); ++x) {
        uint32_t v = f.values[x];
        // bits i with c_i = 1, plus the top plane a_{k-1}
        r.table[x] = (std::popcount(v & c) + (v >> (f.k - 1))) & 1;
    }
    return r;
}

inline BoolFn component(const GenBoolFn& f, const std::vector<uint8_t>& c_bits) {
    if (f.k < 2 || c_bits.size() != f.k - 1)
        throw std::invalid_argument("component: bit tuple must have length k-1");
    return component(f, component_index(c_bits));
}

// All 2^(k-1) components, indexed by the canonical bijection.
inline std::vector<BoolFn> all_components(const GenBoolFn& f) {
    if (f.k < 2) throw std::invalid_argument("all_components: requires k >= 2");
    std::vector<BoolFn> out;
    out.reserve(size_t(1) << (f.k - 1));
    for (uint32_t c = 0; c < (1u << (f.k - 1)); ++c) out.push_back(component(f, c));
    return out;
}

}  // namespace landscape
