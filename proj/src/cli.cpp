#include "qkernel/cli.hpp"

#include "qkernel/asymptotics.hpp"
#include "qkernel/export.hpp"
#include "qkernel/fast_enum.hpp"
#include "qkernel/kernel_iter.hpp"
#include "qkernel/naive_enum.hpp"
#include "qkernel/singularities.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace qkernel {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<ModelId> select_models(const std::string& text, bool symmetric_only = false) {
    if (text == "all" || text == "ALL") {
        std::vector<ModelId> all(kAllModels.begin(), kAllModels.end());
        if (symmetric_only) std::erase_if(all, [](ModelId m) { return !is_symmetric(m); });
        return all;
    }
    const auto m = parse_model(text);
    if (!m) throw UsageError("unknown model '" + text + "' (expected A, B, C, D, E or all)");
    return {*m};
}

void require_choice(const std::string& value, std::initializer_list<const char*> choices, const char* what) {
    for (const char* c : choices)
        if (value == c) return;
    throw UsageError(std::string("invalid ") + what + " '" + value + "'");
}

// Writes to the file named by path, or to out when path is empty.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    if (!f) throw std::runtime_error("cannot write " + path);
}

std::string join(const std::vector<mpz_class>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s;
}

std::vector<std::string> as_strings(const std::vector<mpz_class>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.get_str());
    return s;
}

struct EnumerateOptions {
    std::string model = "all", method = "fast", format = "text", output;
    int terms = 11;
    bool seed_check = false;
};

int run_enumerate(const EnumerateOptions& o, std::ostream& out, std::ostream& err) {
    require_choice(o.method, {"fast", "iterated", "naive"}, "method");
    require_choice(o.format, {"text", "csv", "json"}, "format");
    const auto models = select_models(o.model);
    if (o.terms < 1) throw UsageError("--terms must be positive");
    int status = 0;
    json doc = {{"schema_version", kJsonSchemaVersion}, {"command", "enumerate"}, {"method", o.method},
                {"terms", o.terms}, {"models", json::array()}};
    std::ostringstream text;
    if (o.format == "csv") text << "model,n,count\n";
    for (ModelId m : models) {
        const auto seq = enumerate_sequence(m, o.terms, o.method);
        json entry = {{"model", std::string(1, model_letter(m))}, {"sequence", as_strings(seq)}};
        if (o.seed_check) {
            const int k = std::min(o.terms, 30);
            const auto oracle = count_all(m, k - 1);
            const bool ok = std::equal(oracle.begin(), oracle.end(), seq.begin());
            entry["seed_check"] = ok;
            if (!ok) {
                err << model_letter(m) << ": seed check failed against direct counting\n";
                status = 1;
            }
        }
        if (o.format == "text") text << model_letter(m) << ": " << join(seq) << '\n';
        if (o.format == "csv")
            for (std::size_t i = 0; i < seq.size(); ++i) text << model_letter(m) << ',' << i << ',' << seq[i] << '\n';
        doc["models"].push_back(std::move(entry));
    }
    emit(o.output, out, o.format == "json" ? doc.dump(2) + "\n" : text.str());
    return status;
}

struct KappaOptions {
    std::string model = "all", format = "text";
    int digits = 10, precision = 0, terms = 500;
};

int run_kappa(const KappaOptions& o, std::ostream& out) {
    require_choice(o.format, {"text", "json"}, "format");
    const auto models = select_models(o.model);
    if (o.digits < 1 || o.digits > 2000) throw UsageError("--digits must lie in 1..2000");
    const int prec = o.precision > 0 ? o.precision : precision_from_environment();
    json doc = {{"schema_version", kJsonSchemaVersion}, {"command", "kappa"}, {"results", json::array()}};
    std::ostringstream text;
    for (ModelId m : models) {
        json r = {{"model", std::string(1, model_letter(m))}};
        const char letter = model_letter(m);
        if (is_symmetric(m)) {
            const KappaResult k = kappa_symmetric_auto(m, o.digits, prec);
            r["estimate"] = k.estimate.to_fixed(o.digits);
            r["tail_bound"] = k.tail_bound.to_string(3);
            r["terms"] = k.terms_used;
            r["precision_bits"] = k.precision_bits;
            r["rigorous"] = k.rigorous;
            text << letter << ": " << k.estimate.to_fixed(o.digits) << "  tail bound " << k.tail_bound.to_string(3)
                 << "  (" << k.terms_used << " terms, " << k.precision_bits << " bits)\n";
        } else if (m == ModelId::E) {
            const KappaResult k = kappa_E(std::max(20, o.digits), std::max(prec, 4 * o.digits + 64));
            r["estimate"] = k.estimate.to_fixed(o.digits);
            r["interval"] = {k.lo->to_string(o.digits + 2), k.hi->to_string(o.digits + 2)};
            r["rigorous"] = k.rigorous;
            text << letter << ": " << k.estimate.to_fixed(o.digits) << "  interval [" << k.lo->to_string(o.digits + 2)
                 << ", " << k.hi->to_string(o.digits + 2) << "]\n";
        } else {
            const KappaDEstimate k = kappa_D_empirical(o.terms, prec);
            const int shown = std::min(o.digits, 6);
            r["estimate"] = k.estimate.to_fixed(shown);
            r["counts_used"] = o.terms;
            r["rigorous"] = false;
            text << letter << ": " << k.estimate.to_fixed(shown) << "  empirical, from " << o.terms
                 << " exact counts\n";
        }
        doc["results"].push_back(std::move(r));
    }
    out << (o.format == "json" ? doc.dump(2) + "\n" : text.str());
    return 0;
}

struct SingularityOptions {
    std::string model = "A", plane = "q", format = "csv", output, family = "all";
    int n = 20, n_min = 0, precision = 256;
    bool poles_only = false;
};

int run_singularities(const SingularityOptions& o, std::ostream& out) {
    require_choice(o.plane, {"q", "t"}, "plane");
    require_choice(o.format, {"csv", "svg", "json"}, "format");
    const auto models = select_models(o.model);
    const int lo = o.n_min > 0 ? o.n_min : o.n;
    if (o.n < 1 || lo < 1 || lo > o.n) throw UsageError("need 1 <= --n-min <= --n");
    std::vector<int> indices{1, 2, 3, 4};
    if (o.family != "all") {
        const int i = o.family.size() == 1 ? o.family[0] - '0' : 0;
        if (i < 1 || i > 4) throw UsageError("--family must be 1..4 or all");
        indices = {i};
    }
    std::vector<RootSet> sets;
    for (ModelId m : models) {
        for (int idx : is_symmetric(m) ? std::vector<int>{0} : indices) {
            for (int n = lo; n <= o.n; ++n) {
                RootSet rs = find_roots(singularity_poly(m, idx, n), o.precision);
                rs.model = m;
                rs.n = n;
                rs.family = std::string(1, model_letter(m)) + ":" + family_label(m, idx);
                if (o.poles_only) {
                    std::vector<Root> kept;
                    for (const Root& r : rs.roots)
                        if (classify_pole(m, idx, n, r.z).verdict == PoleVerdict::pole_of_plus_branch)
                            kept.push_back(r);
                    rs.roots = std::move(kept);
                }
                sets.push_back(o.plane == "t" ? to_t_plane(rs) : std::move(rs));
            }
        }
    }
    std::ostringstream text;
    if (o.format == "csv") {
        write_csv(text, sets);
    } else if (o.format == "svg") {
        write_svg(text, sets);
    } else {
        json doc = {{"schema_version", kJsonSchemaVersion}, {"command", "singularities"}, {"plane", o.plane},
                    {"sets", json::array()}};
        for (const RootSet& s : sets) {
            json roots = json::array();
            for (const Root& r : s.roots)
                roots.push_back({{"re", r.z.real().to_string(17)},
                                 {"im", r.z.imag().to_string(17)},
                                 {"multiplicity", r.multiplicity}});
            doc["sets"].push_back({{"family", s.family}, {"n", s.n}, {"roots", std::move(roots)}});
        }
        text << doc.dump(2) << '\n';
    }
    emit(o.output, out, text.str());
    return 0;
}

struct VerifyOptions {
    std::string model = "all";
    int terms = 50;
};

int run_verify(const VerifyOptions& o, std::ostream& out) {
    const auto models = select_models(o.model);
    if (o.terms < 1) throw UsageError("--terms must be positive");
    int failures = 0;
    for (ModelId m : models) {
        const auto fast = enumerate_sequence(m, o.terms, "fast");
        const auto iter = enumerate_sequence(m, o.terms, "iterated");
        const auto naive = enumerate_sequence(m, o.terms, "naive");
        const auto& ref = reference_sequence(m);
        bool table_ok = true;
        for (std::size_t i = 0; i < ref.size() && i < fast.size(); ++i) table_ok = table_ok && fast[i] == ref[i];
        const bool agree = fast == iter && iter == naive;
        out << model_letter(m) << ": methods " << (agree ? "agree" : "DISAGREE") << " to N = " << o.terms
            << ", reference terms " << (table_ok ? "match" : "MISMATCH") << '\n';
        failures += !(agree && table_ok);
    }
    out << (failures == 0 ? "verify: PASS\n" : "verify: FAIL\n");
    return failures == 0 ? 0 : 1;
}

struct BenchOptions {
    std::string model = "A";
    std::vector<int> sizes{50, 100, 200, 400};
};

int run_bench(const BenchOptions& o, std::ostream& out) {
    const auto models = select_models(o.model);
    for (int s : o.sizes)
        if (s < 4) throw UsageError("bench sizes must be at least 4");
    for (ModelId m : models) {
        const auto rows = benchmark(m, o.sizes);
        out << "model  N      method     seconds     bytes\n";
        for (const BenchRow& r : rows) {
            char line[128];
            std::snprintf(line, sizeof line, "%-6c %-6d %-10s %-11.4f %zu\n", model_letter(m), r.N, r.method.c_str(),
                          r.seconds, r.bytes);
            out << line;
        }
        for (const char* method : {"naive", "iterated", "fast"}) {
            const auto count = std::count_if(rows.begin(), rows.end(), [&](const BenchRow& r) { return r.method == method; });
            if (count >= 2)
                out << model_letter(m) << ' ' << method << " log-log slope " << loglog_slope(rows, method) << '\n';
        }
    }
    return 0;
}

}  // namespace

const std::vector<long>& reference_sequence(ModelId model) {
    static const std::vector<long> rows[5] = {
        {1, 1, 3, 7, 21, 55, 165, 457, 1371, 3909, 11727},
        {1, 2, 6, 20, 70, 254, 942, 3550, 13532, 52030, 201386},
        {1, 3, 13, 59, 279, 1341, 6527, 31995, 157659, 779601, 3864985},
        {1, 1, 2, 4, 10, 23, 61, 153, 418, 1100, 3064},
        {1, 2, 7, 24, 91, 339, 1316, 5064, 19876, 77655, 306653},
    };
    return rows[static_cast<int>(model)];
}

std::vector<mpz_class> enumerate_sequence(ModelId model, int N, const std::string& method) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (method == "naive") return count_all(model, N - 1);
    if (method == "fast") return fast_series(model, N).coeffs();
    if (method == "iterated") {
        const Series s = is_symmetric(model) ? gf_total_symmetric(model, N) : gf_total_asymmetric(model, N);
        return to_integer_series(s).coeffs();
    }
    throw std::invalid_argument("unknown method " + method);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quarter-plane walk enumeration and singularity analysis", "qkernel"};
    app.require_subcommand(1);

    EnumerateOptions eo;
    auto* en = app.add_subcommand("enumerate", "Print the counting sequence S_0..S_{N-1}");
    en->add_option("--model", eo.model, "A, B, C, D, E or all");
    en->add_option("--terms", eo.terms, "Number of terms");
    en->add_option("--method", eo.method, "fast, iterated or naive");
    en->add_flag("--seed-check", eo.seed_check, "Re-check the first min(N, 30) terms by direct counting");
    en->add_option("--format", eo.format, "text, csv or json");
    en->add_option("--output", eo.output, "Output file");

    KappaOptions ko;
    auto* ka = app.add_subcommand("kappa", "Growth constants at the dominant singularity");
    ka->add_option("--model", ko.model, "A, B, C, D, E or all");
    ka->add_option("--digits", ko.digits, "Decimal digits");
    ka->add_option("--precision", ko.precision, "Working precision in bits");
    ka->add_option("--terms", ko.terms, "Exact counts used for the model D estimate");
    ka->add_option("--format", ko.format, "text or json");

    SingularityOptions so;
    auto* si = app.add_subcommand("singularities", "Roots of the singularity polynomials");
    si->add_option("--model", so.model, "A, B, C, D, E or all");
    si->add_option("--n", so.n, "Largest iterate index");
    si->add_option("--n-min", so.n_min, "Smallest iterate index (default: --n)");
    si->add_option("--family", so.family, "omega index 1..4 or all (models D, E)");
    si->add_option("--plane", so.plane, "q or t");
    si->add_flag("--poles-only", so.poles_only, "Keep only roots that are poles of the iterate");
    si->add_option("--precision", so.precision, "Root precision in bits");
    si->add_option("--format", so.format, "csv, svg or json");
    si->add_option("--output", so.output, "Output file");

    VerifyOptions vo;
    auto* ve = app.add_subcommand("verify", "Cross-check the three enumeration methods");
    ve->add_option("--model", vo.model, "A, B, C, D, E or all");
    ve->add_option("--terms", vo.terms, "Number of terms");

    BenchOptions bo;
    auto* be = app.add_subcommand("bench", "Time the enumeration methods");
    be->add_option("--model", bo.model, "A, B, C, D, E or all");
    be->add_option("--sizes", bo.sizes, "Sequence lengths")->delimiter(',');

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        if (*en) return run_enumerate(eo, out, err);
        if (*ka) return run_kappa(ko, out);
        if (*si) return run_singularities(so, out);
        if (*ve) return run_verify(vo, out);
        if (*be) return run_bench(bo, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace qkernel
