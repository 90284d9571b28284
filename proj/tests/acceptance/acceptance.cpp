// Acceptance suite: ten checks covering transforms, the Gauss sums, the
// component reconstruction and characterization, regularity, the two
// constructions, the moment tests, the correlation identities and the CLI
// contract. One PASS/FAIL line per criterion; exit code is the number of
// failures. Everything is exact integer arithmetic: tolerance is zero.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../common/oracles.hpp"
#include "landscape/landscape.hpp"

using namespace landscape;
namespace fs = std::filesystem;

namespace {

struct CheckContext {
    std::vector<std::string> messages;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (messages.size() < 8) messages.push_back(what);
        }
    }
};

bool run_criterion(int number, const std::string& title, double limit_seconds,
                   const std::function<void(CheckContext&)>& body) {
    CheckContext ctx;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(ctx);
    } catch (const std::exception& e) {
        ctx.ok = false;
        ctx.messages.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (seconds >= limit_seconds) {
        ctx.ok = false;
        ctx.messages.push_back("time limit exceeded");
    }
    std::printf("%s criterion %2d: %s (%.2fs)\n", ctx.ok ? "PASS" : "FAIL", number, title.c_str(),
                seconds);
    for (const auto& m : ctx.messages) std::printf("       - %s\n", m.c_str());
    std::fflush(stdout);
    return ctx.ok;
}

GenBoolFn nth_function(uint64_t c, uint32_t n, uint32_t k) {
    GenBoolFn f = GenBoolFn::zeros(n, k);
    for (uint64_t i = f.size(); i-- > 0;) {
        f.values[i] = static_cast<uint32_t>(c & (f.q() - 1));
        c >>= k;
    }
    return f;
}

template <typename Fn>
void for_all_functions(uint32_t n, uint32_t k, Fn&& fn) {
    uint64_t total = uint64_t(1) << (uint64_t(k) << n);
    for (uint64_t c = 0; c < total; ++c) fn(nth_function(c, n, k));
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(LANDSCAPE_CLI_PATH) + " " + args + " 2>&1";
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// ---- criterion bodies ------------------------------------------------

void criterion_transforms(CheckContext& ctx) {
    for (uint32_t n = 1; n <= 2; ++n)
        for (uint32_t k = 1; k <= 3; ++k)
            for_all_functions(n, k, [&](const GenBoolFn& f) {
                CycSpectrum fast = gwht(f);
                CycSpectrum slow = oracle::naive_gwht(f);
                for (uint64_t u = 0; u < f.size(); ++u)
                    ctx.require(fast.values[u] == slow.values[u], "gwht != naive on small sweep");
                if (k == 1) {
                    BoolFn b(f.n, std::vector<uint8_t>(f.values.begin(), f.values.end()));
                    ctx.require(wht(b).values == oracle::naive_wht(b).values,
                                "wht != naive on small sweep");
                }
            });
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        GenBoolFn f = oracle::random_genfn(rng, 10, 4);
        CycSpectrum fast = gwht(f);
        CycSpectrum slow = oracle::naive_gwht(f);
        for (uint64_t u = 0; u < f.size(); ++u)
            if (fast.values[u] != slow.values[u]) {
                ctx.require(false, "gwht != naive at n=10, k=4");
                return;
            }
    }
}

void criterion_gauss(CheckContext& ctx) {
    for (uint32_t k = 2; k <= 6; ++k) {
        CycInt sum(k);
        uint64_t q = uint64_t(1) << k;
        for (uint64_t i = 0; i < q; ++i)
            sum += CycInt::monomial(static_cast<uint32_t>((i * i) % q), k);
        ctx.require(sum.norm_sq() == CycInt::from_integer(BigInt::pow2(k + 1), k),
                    "Gauss sum norm is not 2^(k+1) at k=" + std::to_string(k));
    }
}

void criterion_reconstruction(CheckContext& ctx) {
    for_all_functions(2, 2, [&](const GenBoolFn& f) {
        CycSpectrum direct = gwht(f);
        CycSpectrum rec = reconstruct_gwht(f);
        for (uint64_t u = 0; u < f.size(); ++u)
            ctx.require(rec.values[u] == direct.values[u], "reconstruction mismatch on sweep");
    });
    std::mt19937_64 rng(2025);
    for (int i = 0; i < 500; ++i) {
        GenBoolFn f = oracle::random_genfn(rng, 5, 4);
        CycSpectrum direct = gwht(f);
        CycSpectrum rec = reconstruct_gwht(f);
        for (uint64_t u = 0; u < f.size(); ++u)
            ctx.require(rec.values[u] == direct.values[u], "reconstruction mismatch at n=5, k=4");
    }
}

void criterion_bidirectional(CheckContext& ctx) {
    int landscape_count = 0;
    for_all_functions(2, 2, [&](const GenBoolFn& f) {
        bool landscape = landscape_profile(f).has_value();
        landscape_count += landscape;
        WitnessReport rep = check_components(f);
        ctx.require(rep.pass == landscape,
                    "checker verdict disagrees with spectral classification");
    });
    ctx.require(landscape_count > 0 && landscape_count < 256,
                "sweep should contain both landscape and non-landscape functions");
}

void criterion_regularity(CheckContext& ctx) {
    struct Case {
        uint32_t n, k;
    };
    for (Case c : {Case{1, 2}, Case{2, 2}, Case{1, 3}}) {
        int found = 0;
        for_all_functions(c.n, c.k, [&](const GenBoolFn& f) {
            if (!is_gbent(f)) return;
            ++found;
            CycSpectrum h = gwht(f);
            auto p = landscape_profile(f);
            if (!p) {
                ctx.require(false, "gbent function without a profile");
                return;
            }
            RegularityReport rep = regularity(f, h, *p);
            ctx.require(rep.unmatched.empty(), "support point matching no predicted form");
            if (rep.regular) {
                for (uint64_t u : p->support) {
                    const auto& lv = *p->point_level[u];
                    CycInt base(f.k);
                    if (lv.m % 2 == 0)
                        base = CycInt::from_integer(
                            BigInt::pow2(lv.m / 2) * BigInt(int64_t(lv.ell)), f.k);
                    else
                        base = CycInt::sqrt2_element(f.k).scaled(BigInt::pow2((lv.m - 1) / 2) *
                                                                 BigInt(int64_t(lv.ell)));
                    ctx.require(base.times_monomial(rep.dual.values[u]) == h.values[u],
                                "dual re-substitution failed");
                }
            } else {
                ctx.require(c.k == 2 && c.n % 2 == 1,
                            "irregular gbent outside the documented family");
                int64_t scale = int64_t(1) << ((c.n - 1) / 2);
                for (const auto& pt : rep.exceptional) {
                    ctx.require(pt.family == RegularityReport::Family::Diagonal,
                                "exceptional point not in the (+-1 +-i) family");
                    ctx.require(std::abs(pt.re) == scale && std::abs(pt.im) == scale,
                                "exceptional point magnitude mismatch");
                }
            }
        });
        ctx.require(found > 0, "no gbent functions found in sweep");
    }
}

void criterion_affine_lift(CheckContext& ctx) {
    std::mt19937_64 rng(2026);
    int used = 0;
    while (used < 100) {
        uint32_t n = 1 + rng() % 4, k = 1 + rng() % 3;
        GenBoolFn f = oracle::random_genfn(rng, n, k);
        auto pf = landscape_profile(f);
        if (!pf) continue;
        ++used;
        GenBoolFn g = affine_lift(f, static_cast<uint8_t>(rng() & 1));
        auto pg = landscape_profile(g);
        if (!pg) {
            ctx.require(false, "lift of a landscape function is not landscape");
            continue;
        }
        // the lift doubles every nonzero modulus: (m, ell) -> (m+2, ell) in
        // unnormalized level exponents, the same shift as s -> s+1 on one
        // more variable
        std::set<SpectrumLevel> expect;
        for (const auto& lv : pf->levels) expect.insert({lv.m + 2, lv.ell});
        ctx.require(pg->levels == expect, "levels did not shift by the doubled modulus");
        auto sf = plateau_order(*pf, f.n);
        if (sf) {
            auto sg = plateau_order(*pg, g.n);
            ctx.require(sg && *sg == *sf + 1, "plateau order did not shift s -> s+1");
        }
    }
}

void criterion_indirect_sum(CheckContext& ctx) {
    // (i) gbent (x) bent at r = 2, s_dim = 2, k = 2
    GenBoolFn f1(2, 2, {0, 0, 0, 2});
    GenBoolFn f2(2, 2, {0, 2, 0, 0});
    BoolFn g1(2, {0, 0, 0, 1});
    BoolFn g2(2, {0, 1, 0, 0});
    GenBoolFn h = indirect_sum_generalized({f1, f2, g1, g2});
    ctx.require(h.n == 4, "indirect sum output dimension");
    ctx.require(is_gbent(h), "gbent x bent output is not gbent");
    CycSpectrum hh = gwht(h);
    for (const auto& v : hh.values)
        ctx.require(*v.norm_sq().as_scalar() == BigInt(16), "|H| != 4 somewhere");

    // (ii) t1 = 0, t2 = 2 at k = 1, n = 6: moduli exactly {0, 8, 16}
    BoolFn fb1 = mm_bent(4);
    BoolFn fb2 = pad_plateaued(BoolFn(2, {0, 0, 0, 1}), 2);
    GenBoolFn h2 =
        indirect_sum_generalized({GenBoolFn::from_bool(fb1), GenBoolFn::from_bool(fb2), g1, g2});
    ctx.require(h2.n == 6, "five-valued example dimension");
    auto p = landscape_profile(h2);
    if (!p) {
        ctx.require(false, "five-valued example is not landscape");
        return;
    }
    ctx.require(p->levels == std::set<SpectrumLevel>{{6, 1}, {8, 1}} && p->has_zero &&
                    p->length() == 3,
                "five-valued example profile mismatch");
    BoolFn hb(h2.n, std::vector<uint8_t>(h2.values.begin(), h2.values.end()));
    IntSpectrum hw = wht(hb);
    std::set<int64_t> spectrum_values(hw.values.begin(), hw.values.end());
    ctx.require(spectrum_values == std::set<int64_t>{-16, -8, 0, 8, 16},
                "spectrum is not the five-valued set {0, +-8, +-16}");
}

void criterion_moments(CheckContext& ctx) {
    auto agree = [&](const GenBoolFn& f, const char* where) {
        auto der = plateau_by_derivatives(f);
        auto mom = plateau_by_moment(f);
        auto dir = plateau_direct(f);
        bool same = der.order == dir.order && mom.order == dir.order;
        if (!same) {
            std::ostringstream os;
            os << "plateau tests disagree (" << where << ") on values [";
            for (uint32_t v : f.values) os << v << " ";
            os << "]";
            ctx.require(false, os.str());
        }
        if (dir.order && *dir.order == 0) {
            ctx.require(second_derivative_sum(f, 0) == CycInt::from_integer(BigInt::pow2(f.n), f.k),
                        "gbent corollary: derivative sum != 2^n");
            ctx.require(fourth_moment(f) == CycInt::from_integer(BigInt::pow2(3 * f.n), f.k),
                        "gbent corollary: fourth moment != 2^(3n)");
        }
    };
    for_all_functions(2, 2, [&](const GenBoolFn& f) { agree(f, "n=2, k=2"); });
    for (uint32_t n = 1; n <= 3; ++n)
        for_all_functions(n, 1, [&](const GenBoolFn& f) { agree(f, "Boolean n<=3"); });
}

void criterion_identities(CheckContext& ctx) {
    std::mt19937_64 rng(2027);
    for (int i = 0; i < 200; ++i) {
        uint32_t n = 1 + rng() % 4, k = 1 + rng() % 3;
        GenBoolFn f = oracle::random_genfn(rng, n, k);
        GenBoolFn g = oracle::random_genfn(rng, n, k);
        CycSpectrum cross = crosscorrelation(f, g);
        CycSpectrum hf = gwht(f), hg = gwht(g);
        for (uint64_t x = 0; x < f.size(); ++x) {
            CycInt lhs(k);
            for (uint64_t u = 0; u < f.size(); ++u)
                lhs += dot_parity(u, x) ? -cross.values[u] : cross.values[u];
            ctx.require(lhs == hf.values[x] * hg.values[x].conj(), "inversion identity violated");
        }
        for (uint64_t u = 0; u < f.size(); ++u) {
            CycInt rhs(k);
            for (uint64_t x = 0; x < f.size(); ++x) {
                CycInt term = hf.values[x] * hg.values[x].conj();
                rhs += dot_parity(u, x) ? -term : term;
            }
            ctx.require(cross.values[u].scaled(BigInt::pow2(n)) == rhs,
                        "crosscorrelation identity violated");
        }
    }
}

void criterion_cli(CheckContext& ctx) {
    fs::path dir = fs::temp_directory_path() /
                   ("landscape-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);

    write_text(dir / "gbent.json", R"({"n":2,"k":2,"values":[0,0,0,2]})");
    CliResult analyze = run_cli("analyze -i " + (dir / "gbent.json").string() + " -o " +
                                (dir / "report.json").string());
    ctx.require(analyze.exit_code == 0, "analyze exit code");
    {
        auto report = ordered_json::parse(read_text(dir / "report.json"));
        ctx.require(report.contains("profile") && report["profile"]["levels"].dump() == "[[2,1]]",
                    "JSON report profile mismatch");
        ctx.require(report.contains("regularity") && report["regularity"]["regular"] == true,
                    "JSON report regularity mismatch");
        ctx.require(report.contains("components") && report["components"]["pass"] == true,
                    "JSON report witness mismatch");
        ctx.require(parse_function_file(report["input"].dump()) == GenBoolFn(2, 2, {0, 0, 0, 2}),
                    "JSON report input does not round-trip");
    }
    ctx.require(analyze.output.find("plateau order: 0 (gbent)") != std::string::npos,
                "analyze did not classify the gbent example");
    ctx.require(analyze.output.find("levels=[[2,1]]") != std::string::npos,
                "analyze profile levels missing");
    ctx.require(analyze.output.find("regularity: regular") != std::string::npos,
                "analyze regularity missing");

    CliResult lift = run_cli("construct lift -i " + (dir / "gbent.json").string() + " --bit 1 -o " +
                             (dir / "lifted.json").string());
    ctx.require(lift.exit_code == 0, "construct lift exit code");
    GenBoolFn lifted = parse_function_file(read_text(dir / "lifted.json"));
    GenBoolFn expected = affine_lift(GenBoolFn(2, 2, {0, 0, 0, 2}), 1);
    ctx.require(lifted == expected, "lifted file does not round-trip bit-exactly");
    CliResult analyze2 = run_cli("analyze -i " + (dir / "lifted.json").string());
    ctx.require(analyze2.exit_code == 0 &&
                    analyze2.output.find("plateau order: 1") != std::string::npos,
                "lifted function is not reported 1-plateaued");

    write_text(dir / "hex.txt", "6\n");
    CliResult hex = run_cli("analyze -i " + (dir / "hex.txt").string());
    ctx.require(hex.exit_code == 0 && hex.output.find("landscape: yes") != std::string::npos,
                "hex input analysis failed");

    write_text(dir / "f2.json", R"({"n":2,"k":2,"values":[0,2,0,0]})");
    write_text(dir / "g1.json", R"({"n":2,"k":1,"values":[0,0,0,1]})");
    write_text(dir / "g2.json", R"({"n":2,"k":1,"values":[0,1,0,0]})");
    CliResult indirect = run_cli("construct indirect --f1 " + (dir / "gbent.json").string() +
                                 " --f2 " + (dir / "f2.json").string() + " --g1 " +
                                 (dir / "g1.json").string() + " --g2 " +
                                 (dir / "g2.json").string() + " -o " +
                                 (dir / "sum.json").string());
    ctx.require(indirect.exit_code == 0, "construct indirect exit code");
    CliResult analyze3 = run_cli("analyze -i " + (dir / "sum.json").string());
    ctx.require(analyze3.exit_code == 0 &&
                    analyze3.output.find("plateau order: 0 (gbent)") != std::string::npos,
                "indirect sum output is not reported gbent");

    CliResult identities =
        run_cli("identities -i " + (dir / "gbent.json").string());
    ctx.require(identities.exit_code == 0 &&
                    identities.output.find("all identities hold") != std::string::npos,
                "identities run failed");

    write_text(dir / "broken.json", R"({"n":2,"k":2,"values":[0,0,)");
    CliResult broken = run_cli("analyze -i " + (dir / "broken.json").string());
    ctx.require(broken.exit_code == 2, "truncated JSON should exit 2");

    CliResult budget = run_cli("search -n 4 -k 2");
    ctx.require(budget.exit_code == 3, "over-budget search should exit 3");

    write_text(dir / "notbent.json", R"({"n":2,"k":1,"values":[0,0,0,0]})");
    CliResult precondition = run_cli("construct indirect --f1 " + (dir / "gbent.json").string() +
                                     " --f2 " + (dir / "gbent.json").string() + " --g1 " +
                                     (dir / "notbent.json").string() + " --g2 " +
                                     (dir / "notbent.json").string());
    ctx.require(precondition.exit_code == 4, "non-bent selector should exit 4");

    CliResult empty_search = run_cli("search -n 1 -k 1 --gbent");
    ctx.require(empty_search.exit_code == 0, "impossible filter should still exit 0");
    ctx.require(empty_search.output.find("\"matched\":0") != std::string::npos,
                "impossible filter should match nothing");

    fs::remove_all(dir);
}

}  // namespace

int main() {
    int failures = 0;
    failures += !run_criterion(1, "fast transforms equal naive summation", 30,
                               criterion_transforms);
    failures += !run_criterion(2, "Gauss sums have squared modulus 2^(k+1)", 1, criterion_gauss);
    failures += !run_criterion(3, "component reconstruction equals the direct transform", 60,
                               criterion_reconstruction);
    failures += !run_criterion(4, "component checker matches spectral classification", 60,
                               criterion_bidirectional);
    failures += !run_criterion(5, "gbent regularity and the exceptional family", 300,
                               criterion_regularity);
    failures += !run_criterion(6, "affine lift shifts levels and plateau order", 60,
                               criterion_affine_lift);
    failures += !run_criterion(7, "indirect sum: gbent output and five-valued spectrum", 30,
                               criterion_indirect_sum);
    failures += !run_criterion(8, "plateau tests agree; gbent corollary values", 300,
                               criterion_moments);
    failures += !run_criterion(9, "crosscorrelation identities", 30, criterion_identities);
    failures += !run_criterion(10, "CLI pipelines, round trips, exit codes", 10, criterion_cli);
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
