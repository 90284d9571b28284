#pragma once

#include <cctype>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "landscape/classify.hpp"
#include "landscape/decompose.hpp"
#include "landscape/moments.hpp"

namespace landscape {

using ordered_json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical function file: {"n": int, "k": int, "values": [int...]}.
inline ordered_json function_to_json(const GenBoolFn& f) {
    ordered_json j;
    j["n"] = f.n;
    j["k"] = f.k;
    j["values"] = f.values;
    return j;
}

// k = 1 convenience form: hex string of the bit table, most significant
// digit covering the highest index block; digit at position p (from the
// right) holds bits 4p..4p+3, bit i of the digit being the value at 4p+i.
inline std::string function_to_hex(const GenBoolFn& f) {
    if (f.k != 1) throw std::invalid_argument("hex format requires k = 1");
    if (f.n < 2) throw std::invalid_argument("hex format requires n >= 2");
    static const char* digits = "0123456789abcdef";
    std::string out(f.size() / 4, '0');
    for (uint64_t p = 0; p < out.size(); ++p) {
        uint32_t d = 0;
        for (uint32_t i = 0; i < 4; ++i) d |= uint32_t(f.values[4 * p + i]) << i;
        out[out.size() - 1 - p] = digits[d];
    }
    return out;
}

namespace detail {

inline int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

inline GenBoolFn parse_hex_table(const std::string& text) {
    size_t len = text.size();
    if (len == 0 || (len & (len - 1)))
        throw ParseError("hex truth table length must be a power of two");
    uint32_t n = 2;
    for (size_t l = len; l > 1; l >>= 1) ++n;
    GenBoolFn f = GenBoolFn::zeros(n, 1);
    for (size_t p = 0; p < len; ++p) {
        int d = hex_digit(text[len - 1 - p]);
        if (d < 0) throw ParseError(std::string("invalid hex digit '") + text[len - 1 - p] + "'");
        for (uint32_t i = 0; i < 4; ++i) f.values[4 * p + i] = (d >> i) & 1;
    }
    return f;
}

}  // namespace detail

inline GenBoolFn function_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("values"))
        throw ParseError("function file must be an object with n, k, values");
    if (!j["n"].is_number_unsigned() || !j["k"].is_number_unsigned() || !j["values"].is_array())
        throw ParseError("function file fields have wrong types");
    uint32_t n = j["n"].get<uint32_t>();
    uint32_t k = j["k"].get<uint32_t>();
    std::vector<uint32_t> values;
    values.reserve(j["values"].size());
    for (const auto& v : j["values"]) {
        if (!v.is_number_unsigned()) throw ParseError("values must be nonnegative integers");
        values.push_back(v.get<uint32_t>());
    }
    try {
        return GenBoolFn(n, k, std::move(values));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

// Accepts either the canonical JSON object or a bare hex string (k = 1).
inline GenBoolFn parse_function_file(const std::string& content) {
    size_t begin = content.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) throw ParseError("empty function file");
    size_t end = content.find_last_not_of(" \t\r\n");
    std::string body = content.substr(begin, end - begin + 1);
    bool hexish = !body.empty();
    for (char c : body)
        if (detail::hex_digit(c) < 0) {
            hexish = false;
            break;
        }
    if (hexish && body[0] != '{') return detail::parse_hex_table(body);
    ordered_json j;
    try {
        j = ordered_json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());  // message carries the byte position
    }
    if (j.is_string()) return detail::parse_hex_table(j.get<std::string>());
    return function_from_json(j);
}

inline ordered_json bigint_to_json(const BigInt& v) {
    if (auto small = v.to_int64()) return *small;
    return v.str();
}

inline ordered_json cycint_to_json(const CycInt& v) {
    ordered_json arr = ordered_json::array();
    for (size_t j = 0; j < v.dim(); ++j) arr.push_back(bigint_to_json(v.coeff(j)));
    return arr;
}

inline ordered_json spectrum_to_json(const CycSpectrum& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : s.values) arr.push_back(cycint_to_json(v));
    return arr;
}

inline ordered_json profile_to_json(const LandscapeProfile& p) {
    ordered_json j;
    ordered_json levels = ordered_json::array();
    for (const auto& lv : p.levels) levels.push_back({lv.m, lv.ell});
    j["levels"] = levels;
    j["has_zero"] = p.has_zero;
    j["length"] = p.length();
    j["support"] = p.support;
    return j;
}

inline ordered_json regularity_to_json(const RegularityReport& rep) {
    ordered_json j;
    j["regular"] = rep.regular;
    j["dual"] = function_to_json(rep.dual);
    ordered_json exc = ordered_json::array();
    for (const auto& pt : rep.exceptional) {
        ordered_json e;
        e["point"] = pt.point;
        e["value"] = {pt.re, pt.im};
        switch (pt.family) {
            case RegularityReport::Family::Pythagorean:
                e["family"] = "pythagorean";
                e["l1"] = pt.l1;
                e["l2"] = pt.l2;
                e["eps"] = {pt.eps1, pt.eps2};
                e["tau"] = pt.tau;
                break;
            case RegularityReport::Family::Diagonal:
                e["family"] = "diagonal";
                e["signs"] = {pt.sig1, pt.sig2};
                break;
            case RegularityReport::Family::Unmatched:
                e["family"] = "unmatched";
                break;
        }
        exc.push_back(e);
    }
    j["exceptional"] = exc;
    j["unmatched"] = rep.unmatched;
    return j;
}

inline ordered_json witness_report_to_json(const WitnessReport& rep) {
    ordered_json j;
    j["pass"] = rep.pass;
    if (rep.counterexample)
        j["counterexample"] = {{"point", rep.counterexample->first},
                               {"component", rep.counterexample->second}};
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    j["closing_moduli_ok"] = rep.closing_moduli_ok;
    ordered_json wits;
    for (const auto& w : rep.witnesses) {
        ordered_json e;
        switch (w.tag) {
            case ComponentWitness::Tag::Zero:
                e["case"] = "zero";
                break;
            case ComponentWitness::Tag::EvenLevel:
                e["case"] = "m-even";
                e["level"] = {w.level->m, w.level->ell};
                e["g"] = w.g;
                e["s"] = w.s;
                break;
            case ComponentWitness::Tag::OddLevel:
                e["case"] = "m-odd";
                e["level"] = {w.level->m, w.level->ell};
                e["g1"] = w.g1;
                e["s1"] = w.s1;
                e["g2"] = w.g2;
                e["s2"] = w.s2;
                break;
            case ComponentWitness::Tag::OddLevelK2:
                e["case"] = "m-odd-k2";
                e["level"] = {w.level->m, w.level->ell};
                if (w.pythagorean) {
                    e["family"] = "pythagorean";
                    e["l1"] = w.l1;
                    e["l2"] = w.l2;
                    e["eps"] = {w.eps1, w.eps2};
                    e["tau"] = w.tau;
                } else {
                    e["family"] = "diagonal";
                    e["signs"] = {w.sig1, w.sig2};
                }
                break;
        }
        wits[std::to_string(w.point)] = e;
    }
    j["witnesses"] = wits;
    return j;
}

inline ordered_json plateau_result_to_json(const PlateauResult& res) {
    ordered_json j;
    switch (res.method) {
        case PlateauResult::Method::Direct: j["method"] = "direct"; break;
        case PlateauResult::Method::Derivative: j["method"] = "derivative"; break;
        case PlateauResult::Method::Moment: j["method"] = "moment"; break;
    }
    if (res.order)
        j["order"] = *res.order;
    else
        j["order"] = nullptr;
    if (res.refutation_point) j["refutation_point"] = *res.refutation_point;
    if (res.off_value) j["off_value"] = cycint_to_json(*res.off_value);
    return j;
}

}  // namespace landscape
