// Command-line surface over the landscape analysis library: exact spectra,
// landscape/plateau classification, regularity, component witnesses,
// constructions, moment tests and exhaustive search.
//
// Exit codes are a contract: 0 ok, 2 parse error, 3 budget refusal,
// 4 precondition violation.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "landscape/landscape.hpp"

namespace {

using namespace landscape;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitPrecondition = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

GenBoolFn load_function(const std::string& path) { return parse_function_file(read_file(path)); }

BoolFn load_boolean(const std::string& path) {
    GenBoolFn f = load_function(path);
    if (f.k != 1)
        throw std::invalid_argument("expected a Boolean function (k = 1) in " + path);
    return BoolFn(f.n, std::vector<uint8_t>(f.values.begin(), f.values.end()));
}

void emit_function(const GenBoolFn& f, const std::string& output, const std::string& format) {
    std::string text;
    if (format == "hex")
        text = function_to_hex(f) + "\n";
    else
        text = function_to_json(f).dump() + "\n";
    if (output.empty())
        std::cout << text;
    else
        write_file(output, text);
}

std::string complex_display(const CycInt& v) {
    auto [re, im] = v.approx_complex();
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << re << (im < 0 ? " - " : " + ")
       << std::abs(im) << "i";
    return os.str();
}

struct AnalysisBundle {
    CycSpectrum spectrum;
    LandscapeOutcome outcome;
    std::optional<uint32_t> plateau;
    std::optional<RegularityReport> reg;
    std::optional<WitnessReport> witnesses;
};

AnalysisBundle analyze_function(const GenBoolFn& f) {
    AnalysisBundle b;
    b.spectrum = gwht(f);
    b.outcome = landscape_analyze(b.spectrum);
    if (b.outcome.profile) {
        b.plateau = plateau_order(*b.outcome.profile, f.n);
        b.reg = regularity(f, b.spectrum, *b.outcome.profile);
    }
    if (f.k >= 2) b.witnesses = check_components(f);
    return b;
}

void print_witness_summary(const WitnessReport& rep) {
    std::map<std::string, int> counts;
    for (const auto& w : rep.witnesses) {
        switch (w.tag) {
            case ComponentWitness::Tag::Zero: ++counts["zero"]; break;
            case ComponentWitness::Tag::EvenLevel: ++counts["m-even"]; break;
            case ComponentWitness::Tag::OddLevel: ++counts["m-odd"]; break;
            case ComponentWitness::Tag::OddLevelK2: ++counts["m-odd-k2"]; break;
        }
    }
    std::cout << "components: " << (rep.pass ? "pass" : "FAIL");
    if (!rep.pass && rep.counterexample)
        std::cout << " (counterexample point=" << rep.counterexample->first
                  << " c=" << rep.counterexample->second << ": " << rep.reason << ")";
    if (rep.pass) {
        std::cout << " (";
        bool first = true;
        for (const auto& [tag, cnt] : counts) {
            if (!first) std::cout << ", ";
            std::cout << tag << "=" << cnt;
            first = false;
        }
        std::cout << "; closing moduli " << (rep.closing_moduli_ok ? "ok" : "violated") << ")";
    }
    std::cout << "\n";
}

int cmd_analyze(const std::string& input, const std::string& output) {
    GenBoolFn f = load_function(input);
    AnalysisBundle b = analyze_function(f);

    std::cout << "function: n=" << f.n << " k=" << f.k << " q=" << f.q() << "\n";
    std::cout << "spectrum (coefficient tuples of length " << f.q() / 2
              << " on the power basis; complex values display only):\n";
    for (uint64_t u = 0; u < f.size(); ++u)
        std::cout << "  u=" << u << ": " << cycint_to_json(b.spectrum.values[u]).dump() << "  ~ "
                  << complex_display(b.spectrum.values[u]) << "\n";

    if (!b.outcome.profile) {
        std::cout << "landscape: no (modulus at point " << *b.outcome.failure_point
                  << " is not of the form 2^(m/2)*ell)\n";
    } else {
        const LandscapeProfile& p = *b.outcome.profile;
        std::cout << "landscape: yes\n";
        std::cout << "profile: levels=" << profile_to_json(p)["levels"].dump()
                  << " has_zero=" << (p.has_zero ? "true" : "false") << " length=" << p.length()
                  << " support_size=" << p.support.size() << "\n";
        if (b.plateau)
            std::cout << "plateau order: " << *b.plateau
                      << (*b.plateau == 0 ? " (gbent)"
                                          : (*b.plateau <= 2 ? " (semibent)" : ""))
                      << "\n";
        else
            std::cout << "plateau order: none (landscape of length " << p.length() << ")\n";
        std::cout << "regularity: "
                  << (b.reg->regular ? "regular"
                                     : (b.reg->unmatched.empty() ? "exceptional (k=2, m odd points)"
                                                                 : "unmatched points present"))
                  << "\n";
        if (!b.reg->exceptional.empty()) {
            std::cout << "exceptional points:";
            for (const auto& pt : b.reg->exceptional) std::cout << " " << pt.point;
            std::cout << "\n";
        }
        if (b.reg->regular) {
            std::cout << "dual: " << function_to_json(b.reg->dual)["values"].dump() << "\n";
        }
    }
    if (b.witnesses)
        print_witness_summary(*b.witnesses);
    else
        std::cout << "components: n/a (k = 1)\n";

    if (!output.empty()) {
        ordered_json rep;
        rep["input"] = function_to_json(f);
        rep["spectrum"] = spectrum_to_json(b.spectrum);
        if (b.outcome.profile) {
            rep["profile"] = profile_to_json(*b.outcome.profile);
            rep["plateau_order"] = b.plateau ? ordered_json(*b.plateau) : ordered_json(nullptr);
            rep["regularity"] = regularity_to_json(*b.reg);
        } else {
            rep["profile"] = nullptr;
            rep["landscape_failure_point"] = *b.outcome.failure_point;
        }
        if (b.witnesses) rep["components"] = witness_report_to_json(*b.witnesses);
        write_file(output, rep.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_moments(const std::string& input) {
    GenBoolFn f = load_function(input);
    PlateauResult der = plateau_by_derivatives(f);
    PlateauResult mom = plateau_by_moment(f);
    PlateauResult dir = plateau_direct(f);

    auto show = [](const char* name, const PlateauResult& r) {
        std::cout << name << ": ";
        if (r.order)
            std::cout << "s=" << *r.order;
        else {
            std::cout << "not plateaued";
            if (r.refutation_point) std::cout << " (refuted at x=" << *r.refutation_point << ")";
            if (r.off_value) std::cout << " value " << r.off_value->str();
        }
        std::cout << "\n";
    };
    show("derivative test", der);
    show("moment test", mom);
    show("direct test", dir);

    // 2^n sum_x S2(x) = sum_d |H(d)|^4, unconditionally.
    CycInt lhs(f.k);
    for (uint64_t x = 0; x < f.size(); ++x) lhs += second_derivative_sum(f, x);
    CycInt scaled(f.k);
    scaled = lhs.scaled(BigInt::pow2(f.n));
    CycInt rhs = fourth_moment(f);
    std::cout << "identity 2^n * sum_x S2(x) == sum_d |H(d)|^4: "
              << (scaled == rhs ? "holds" : "VIOLATED") << "\n";
    bool agree = der.order == mom.order && mom.order == dir.order;
    std::cout << "agreement: " << (agree ? "all three tests agree" : "TESTS DISAGREE") << "\n";
    return kExitOk;
}

int cmd_identities(const std::string& input, const std::string& input2) {
    GenBoolFn f = load_function(input);
    GenBoolFn g = input2.empty() ? f : load_function(input2);
    if (f.n != g.n || f.k != g.k)
        throw std::invalid_argument("precondition violated: identity inputs need matching n and k");

    CycSpectrum hf = gwht(f), hg = gwht(g);
    CycSpectrum cross = crosscorrelation(f, g);
    bool ok = true;

    // sum_u C_{f,g}(u) (-1)^(u.x) = H_f(x) conj(H_g(x))
    for (uint64_t x = 0; x < f.size() && ok; ++x) {
        CycInt lhs(f.k);
        for (uint64_t u = 0; u < f.size(); ++u)
            lhs += dot_parity(u, x) ? -cross.values[u] : cross.values[u];
        if (lhs != hf.values[x] * hg.values[x].conj()) ok = false;
    }
    std::cout << "inversion identity: " << (ok ? "ok" : "VIOLATED") << "\n";

    // 2^n C_{f,g}(u) = sum_x H_f(x) conj(H_g(x)) (-1)^(u.x)
    bool ok2 = true;
    for (uint64_t u = 0; u < f.size() && ok2; ++u) {
        CycInt rhs(f.k);
        for (uint64_t x = 0; x < f.size(); ++x) {
            CycInt term = hf.values[x] * hg.values[x].conj();
            rhs += dot_parity(u, x) ? -term : term;
        }
        if (cross.values[u].scaled(BigInt::pow2(f.n)) != rhs) ok2 = false;
    }
    std::cout << "crosscorrelation identity: " << (ok2 ? "ok" : "VIOLATED") << "\n";

    CycSpectrum autoc = autocorrelation(f);
    bool ok3 = true;
    for (const auto& v : autoc.values)
        if (v.conj() != v) ok3 = false;
    std::cout << "autocorrelation conj-fixed: " << (ok3 ? "ok" : "VIOLATED") << "\n";

    CycInt parseval(f.k);
    for (const auto& v : hf.values) parseval += v.norm_sq();
    bool ok4 = parseval == CycInt::from_integer(BigInt::pow2(2 * f.n), f.k);
    std::cout << "Parseval: " << (ok4 ? "ok" : "VIOLATED") << "\n";

    bool ok5 = true;
    if (f.k >= 2) {
        CycSpectrum rec = reconstruct_gwht(f);
        for (uint64_t u = 0; u < f.size(); ++u)
            if (rec.values[u] != hf.values[u]) ok5 = false;
        std::cout << "component reconstruction: " << (ok5 ? "ok" : "VIOLATED") << "\n";
    }

    if (ok && ok2 && ok3 && ok4 && ok5) {
        std::cout << "all identities hold\n";
        return kExitOk;
    }
    return kExitInternal;
}

int cmd_decompose(const std::string& input, const std::string& output) {
    GenBoolFn f = load_function(input);
    if (f.k < 2)
        throw std::invalid_argument("precondition violated: decompose requires k >= 2");
    CycSpectrum direct = gwht(f);
    CycSpectrum rec = reconstruct_gwht(f);
    bool match = true;
    for (uint64_t u = 0; u < f.size(); ++u)
        if (direct.values[u] != rec.values[u]) match = false;
    std::cout << "reconstruction: " << (match ? "exact match with direct transform" : "MISMATCH")
              << "\n";
    WitnessReport rep = check_components(f);
    print_witness_summary(rep);
    if (!output.empty()) {
        ordered_json j;
        j["input"] = function_to_json(f);
        j["reconstruction_exact"] = match;
        j["components"] = witness_report_to_json(rep);
        write_file(output, j.dump(2) + "\n");
    }
    return match ? kExitOk : kExitInternal;
}

std::set<SpectrumLevel> parse_levels_flag(const std::string& text) {
    std::set<SpectrumLevel> levels;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("--levels expects m:ell pairs separated by commas");
        try {
            uint32_t m = static_cast<uint32_t>(std::stoul(item.substr(0, colon)));
            uint64_t ell = std::stoull(item.substr(colon + 1));
            levels.insert(SpectrumLevel{m, ell});
        } catch (const std::exception&) {
            throw ParseError("--levels expects m:ell integer pairs");
        }
    }
    if (levels.empty()) throw ParseError("--levels given but empty");
    return levels;
}

struct SearchArgs {
    uint32_t n = 1, k = 1;
    SearchFilter filter;
    std::string levels_text;
    uint64_t budget = kDefaultSearchBudget;
    unsigned jobs = 1;
    uint64_t sample_count = 0;
    uint64_t seed = 1;
    std::string output;
    bool filter_has_length = false, filter_has_plateau = false;
    uint32_t length_value = 0, plateau_value = 0;
};

int cmd_search(SearchArgs& args) {
    if (args.filter_has_length) args.filter.length = args.length_value;
    if (args.filter_has_plateau) args.filter.plateau = args.plateau_value;
    if (!args.levels_text.empty()) args.filter.levels = parse_levels_flag(args.levels_text);

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!args.output.empty()) {
        file_out.open(args.output, std::ios::binary);
        if (!file_out) throw std::runtime_error("cannot open output file: " + args.output);
        out = &file_out;
    }

    uint64_t matched = 0;
    std::map<std::string, uint64_t> histogram;
    SearchSink sink = [&](const GenBoolFn& f, const std::optional<LandscapeProfile>& p) {
        ++matched;
        ordered_json line = function_to_json(f);
        if (p) {
            line["profile"] = profile_to_json(*p);
            ++histogram[std::to_string(p->length())];
        } else {
            line["profile"] = nullptr;
            ++histogram["none"];
        }
        *out << line.dump() << "\n";
    };

    uint64_t visited;
    if (args.sample_count > 0) {
        sample(args.n, args.k, args.sample_count, args.seed,
               [&](const GenBoolFn& f, const std::optional<LandscapeProfile>& p) {
                   LandscapeOutcome oc;
                   oc.profile = p;
                   if (filter_matches(args.filter, f, oc)) sink(f, p);
               });
        visited = args.sample_count;
    } else {
        visited = enumerate(args.n, args.k, args.filter, sink, args.budget, args.jobs);
    }

    ordered_json summary;
    summary["summary"] = {{"visited", visited},
                          {"matched", matched},
                          {"length_histogram", histogram}};
    *out << summary.dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic analysis of generalized Boolean functions and their spectra"};
    app.require_subcommand(1);

    std::string input, input2, output, format = "json";

    auto* analyze = app.add_subcommand("analyze", "Spectra, landscape profile, regularity, witnesses");
    analyze->add_option("-i,--input", input, "function file (JSON, or hex for k=1)")->required();
    analyze->add_option("-o,--output", output, "write JSON report here");

    auto* construct = app.add_subcommand("construct", "Build landscape functions");
    construct->require_subcommand(1);

    uint8_t lift_bit = 1;
    auto* lift = construct->add_subcommand("lift", "Affine lift onto one extra variable");
    lift->add_option("-i,--input", input, "function file")->required();
    lift->add_option("--bit", lift_bit, "coefficient of the new variable (0 or 1)");
    lift->add_option("-o,--output", output, "output function file");
    lift->add_option("--format", format, "json|hex")->check(CLI::IsMember({"json", "hex"}));

    std::string f1_path, f2_path, g1_path, g2_path;
    auto* indirect = construct->add_subcommand("indirect", "Generalized indirect sum");
    indirect->add_option("--f1", f1_path, "first inner function file")->required();
    indirect->add_option("--f2", f2_path, "second inner function file")->required();
    indirect->add_option("--g1", g1_path, "first bent selector (k=1)")->required();
    indirect->add_option("--g2", g2_path, "second bent selector (k=1)")->required();
    indirect->add_option("-o,--output", output, "output function file");
    indirect->add_option("--format", format, "json|hex")->check(CLI::IsMember({"json", "hex"}));

    uint32_t mm_vars = 2;
    std::string mm_perm, mm_tail;
    auto* mm = construct->add_subcommand("mm", "Maiorana-McFarland bent function");
    mm->add_option("--vars", mm_vars, "number of variables (even)")->required();
    mm->add_option("--perm", mm_perm, "permutation of [0, 2^(vars/2)) as a comma list");
    mm->add_option("--tail", mm_tail, "tail function file on vars/2 variables (k=1)");
    mm->add_option("-o,--output", output, "output function file");
    mm->add_option("--format", format, "json|hex")->check(CLI::IsMember({"json", "hex"}));

    uint32_t pad_extra = 1;
    auto* pad = construct->add_subcommand("pad", "Pad a Boolean function with ignored variables");
    pad->add_option("-i,--input", input, "Boolean function file (k=1)")->required();
    pad->add_option("--extra", pad_extra, "number of ignored variables to add");
    pad->add_option("-o,--output", output, "output function file");
    pad->add_option("--format", format, "json|hex")->check(CLI::IsMember({"json", "hex"}));

    auto* moments = app.add_subcommand("moments", "Plateau tests via derivatives and moments");
    moments->add_option("-i,--input", input, "function file")->required();

    auto* identities = app.add_subcommand("identities", "Check the transform identities");
    identities->add_option("-i,--input", input, "function file")->required();
    identities->add_option("--input2", input2, "second function file (defaults to the first)");

    auto* decompose = app.add_subcommand("decompose", "Component reconstruction and witnesses");
    decompose->add_option("-i,--input", input, "function file (k >= 2)")->required();
    decompose->add_option("-o,--output", output, "write JSON witness report here");

    SearchArgs sargs;
    auto* search = app.add_subcommand("search", "Enumerate or sample functions with filters");
    search->add_option("-n,--vars", sargs.n, "number of variables")->required();
    search->add_option("-k,--level", sargs.k, "level exponent (q = 2^k)")->required();
    auto* len_opt = search->add_option("--length", sargs.length_value, "landscape length filter");
    auto* plat_opt = search->add_option("--plateau", sargs.plateau_value, "plateau order filter");
    search->add_flag("--gbent", sargs.filter.gbent, "keep generalized bent functions");
    search->add_flag("--semibent", sargs.filter.semibent, "keep semibent functions");
    search->add_flag("--regular", sargs.filter.regular, "keep regular landscape functions");
    search->add_flag("--exceptional", sargs.filter.exceptional,
                     "keep functions with k=2 m-odd exceptional points");
    search->add_option("--levels", sargs.levels_text, "exact level set, m:ell pairs joined by commas");
    search->add_option("--budget", sargs.budget, "maximum enumeration size");
    search->add_option("--jobs", sargs.jobs, "worker threads for enumeration");
    search->add_option("--sample", sargs.sample_count, "sample this many functions instead");
    search->add_option("--seed", sargs.seed, "sampling seed");
    search->add_option("-o,--output", sargs.output, "write JSON lines here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(input, output);
        if (construct->parsed()) {
            if (lift->parsed()) {
                GenBoolFn f = load_function(input);
                emit_function(affine_lift(f, lift_bit), output, format);
                return kExitOk;
            }
            if (indirect->parsed()) {
                IndirectSumSpec spec{load_function(f1_path), load_function(f2_path),
                                     load_boolean(g1_path), load_boolean(g2_path)};
                emit_function(indirect_sum_generalized(spec), output, format);
                return kExitOk;
            }
            if (mm->parsed()) {
                BoolFn tail = mm_tail.empty() ? BoolFn::zeros(mm_vars / 2) : load_boolean(mm_tail);
                BoolFn bent;
                if (mm_perm.empty()) {
                    std::vector<uint32_t> identity(uint64_t(1) << (mm_vars / 2));
                    std::iota(identity.begin(), identity.end(), 0u);
                    bent = mm_bent(mm_vars, identity, tail);
                } else {
                    std::vector<uint32_t> perm;
                    std::istringstream is(mm_perm);
                    std::string item;
                    while (std::getline(is, item, ',')) {
                        try {
                            perm.push_back(static_cast<uint32_t>(std::stoul(item)));
                        } catch (const std::exception&) {
                            throw ParseError("--perm expects a comma list of integers");
                        }
                    }
                    bent = mm_bent(mm_vars, perm, tail);
                }
                emit_function(GenBoolFn::from_bool(bent), output, format);
                return kExitOk;
            }
            if (pad->parsed()) {
                BoolFn f = load_boolean(input);
                emit_function(GenBoolFn::from_bool(pad_plateaued(f, pad_extra)), output, format);
                return kExitOk;
            }
        }
        if (moments->parsed()) return cmd_moments(input);
        if (identities->parsed()) return cmd_identities(input, input2);
        if (decompose->parsed()) return cmd_decompose(input, output);
        if (search->parsed()) {
            sargs.filter_has_length = len_opt->count() > 0;
            sargs.filter_has_plateau = plat_opt->count() > 0;
            return cmd_search(sargs);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
