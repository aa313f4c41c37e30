#include "lmc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lmc/symfun.hpp"

namespace lmc {

using nlohmann::json;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

json report_json(const CriterionReport& r) {
    json j;
    j["verdict"] = verdict_name(r.verdict);
    j["s"] = r.witness_s ? json(*r.witness_s) : json(nullptr);
    j["class"] = r.witness_class ? json(r.witness_class->to_string()) : json(nullptr);
    j["path"] = path_name(r.path);
    j["searched_s_max"] = r.searched_s_max;
    j["notes"] = r.notes;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ManifoldSpec resolve_manifold(const std::string& text) {
    std::ifstream probe(text);
    if (probe.good()) return parse_manifold_spec(read_file(text));
    return parse_manifold_shorthand(text);
}

ClassKind parse_path(const std::string& path) {
    if (path == "sw") return ClassKind::StiefelWhitney;
    if (path == "chern") return ClassKind::Chern;
    throw ParseError("path must be 'sw' or 'chern', got '" + path + "'");
}

void set_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

// ------------------------------------------------------------------- check

struct CheckOptions {
    std::string source, target, path = "sw", pullback;
    unsigned k = 2;
    bool fastpath = false;
};

int cmd_check(const CheckOptions& opt, std::ostream& out) {
    const ClassKind kind = parse_path(opt.path);
    validate_k(opt.k, kind);
    const ManifoldSpec source = resolve_manifold(opt.source);
    const ManifoldSpec target = resolve_manifold(opt.target);

    CriterionReport report;
    if (opt.fastpath) {
        if (!opt.pullback.empty()) throw SpecError("--fastpath assumes a trivial pullback class; drop --pullback");
        if (kind == ClassKind::StiefelWhitney) {
            report = theorem3_fastpath(source, target.real_dimension, opt.k);
        } else {
            if (!target.complex_dimension) throw SpecError("target '" + target.label + "' has no complex dimension");
            report = theorem4_fastpath(source, *target.complex_dimension, opt.k);
        }
    } else {
        std::optional<TotalClass> pullback;
        if (!opt.pullback.empty()) {
            const TotalClass tangent = tangent_class(source, kind, opt.k);
            pullback = parse_total_class_json(read_file(opt.pullback), tangent.ring(), kind);
        }
        report = check_local_multiplicity(source, target, opt.k, kind, pullback);
    }
    out << report_to_json(report) << "\n";
    return report.holds() ? kExitHolds : kExitInconclusive;
}

// ------------------------------------------------------------------- atlas

struct AtlasOptions {
    std::string corollary, ell, k, a, output;
    int threads = 0;
    bool timings = false;
};

int cmd_atlas(const AtlasOptions& opt, std::ostream& out, std::ostream& err) {
    const Corollary c = parse_corollary(opt.corollary);
    const auto ells = parse_int_list(opt.ell);
    std::vector<unsigned> ks;
    for (long k : parse_int_list(opt.k)) {
        if (k < 2) throw ParseError("k values must be >= 2");
        ks.push_back(static_cast<unsigned>(k));
    }
    const auto as = opt.a.empty() ? std::vector<long>{} : parse_int_list(opt.a);

    const Atlas atlas = run_atlas(c, as, ells, ks, opt.threads);
    const std::string doc = atlas_to_json(atlas);

    std::ostream& table = opt.output.empty() ? err : out;
    if (!opt.output.empty()) {
        std::ofstream file(opt.output);
        if (!file) throw SpecError("cannot write '" + opt.output + "'");
        file << doc;
    } else {
        out << doc;
    }

    if (atlas.entries.empty()) err << "warning: no admissible parameters for corollary " << opt.corollary << "\n";
    bool all_hold = true;
    table << std::left << std::setw(5) << "a" << std::setw(5) << "ell" << std::setw(5) << "k" << std::setw(34)
          << "map" << std::setw(17) << "verdict" << "s";
    if (opt.timings) table << "\tms";
    table << "\n";
    for (const auto& e : atlas.entries) {
        all_hold = all_hold && e.report.holds();
        table << std::left << std::setw(5) << e.a << std::setw(5) << e.ell << std::setw(5) << e.k << std::setw(34)
              << (e.source + " -> " + e.target) << std::setw(17) << verdict_name(e.report.verdict)
              << (e.report.witness_s ? std::to_string(*e.report.witness_s) : "-");
        if (opt.timings) table << "\t" << std::fixed << std::setprecision(3) << e.wall_ms;
        table << "\n";
    }
    for (const auto& e : atlas.inadmissible)
        table << std::left << std::setw(5) << e.a << std::setw(5) << e.ell << std::setw(5) << e.k
              << "inadmissible: " << e.violated << "\n";
    table << atlas.entries.size() << " admissible, " << atlas.inadmissible.size() << " inadmissible\n";
    return all_hold ? kExitHolds : kExitInconclusive;
}

// ------------------------------------------------------------------ verify

struct VerifyOptions {
    std::string identity;
    int max_a = 4, max_b = 3, max_m = 8;
    std::vector<unsigned> primes, ks;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    int failures = 0, total = 0;
    auto record = [&](bool ok, const std::string& label) {
        ++total;
        if (!ok) ++failures;
        out << (ok ? "pass " : "FAIL ") << label << "\n";
    };
    const std::vector<unsigned> primes = opt.primes.empty() ? std::vector<unsigned>{2, 3, 5} : opt.primes;
    for (unsigned p : primes)
        if (!is_prime(p)) throw InvalidModulus(std::to_string(p) + " is not prime");

    if (opt.identity == "dual-cauchy") {
        if (opt.max_a < 1 || opt.max_a > 4 || opt.max_b < 1 || opt.max_b > 3)
            throw DomainError("dual-cauchy bounds must satisfy 1 <= A <= 4, 1 <= B <= 3");
        for (unsigned p : primes)
            for (int A = 1; A <= opt.max_a; ++A)
                for (int B = 1; B <= opt.max_b; ++B)
                    record(dual_cauchy_check(A, B, p),
                           "dual-cauchy A=" + std::to_string(A) + " B=" + std::to_string(B) + " p=" + std::to_string(p));
    } else if (opt.identity == "nk-schur") {
        if (opt.max_a < 1 || opt.max_a > 4 || opt.max_b < 1 || opt.max_b > 3)
            throw DomainError("nk-schur bounds must satisfy 1 <= A <= 4, 1 <= B <= 3");
        for (unsigned p : primes)
            for (int n = 1; n <= opt.max_a; ++n)
                for (const Partition& lambda : partitions_in_box(n, opt.max_b)) {
                    const bool ok = expand_in_roots(schur_via_nk(lambda, n, p)) == schur_monomial_oracle(lambda, n, p);
                    record(ok, "nk-schur " + lambda.to_string() + " vars=" + std::to_string(n) + " p=" + std::to_string(p));
                }
    } else if (opt.identity == "euler-crosscheck") {
        if (opt.max_m < 1 || opt.max_m > 8) throw DomainError("euler-crosscheck bound must satisfy 1 <= m <= 8");
        const std::vector<unsigned> ks = opt.ks.empty() ? std::vector<unsigned>{3, 5} : opt.ks;
        for (unsigned k : ks) {
            if (k == 2 || !is_prime(k)) throw InvalidK("k must be an odd prime, got " + std::to_string(k));
            for (int m = 1; m <= opt.max_m; ++m) {
                const ManifoldSpec cp = make_complex_projective(m);
                const int top = dual_total_class(tangent_class(cp, ClassKind::Chern, k)).top_nonzero_index();
                for (int mp = top; mp <= m; ++mp)
                    for (int n = 0; n <= m + 1; ++n)
                        record(chern_euler_crosscheck(cp, n, k, mp),
                               "euler-crosscheck cp:" + std::to_string(m) + " n=" + std::to_string(n) +
                                   " k=" + std::to_string(k) + " m'=" + std::to_string(mp));
            }
        }
    } else {
        throw ParseError("unknown identity '" + opt.identity + "' (dual-cauchy, nk-schur, euler-crosscheck)");
    }
    out << (total - failures) << "/" << total << " passed\n";
    return failures == 0 ? 0 : kExitError;
}

// ------------------------------------------------------------ atlas driver

struct GridPoint {
    long a, ell;
    unsigned k;
};

std::vector<long> default_a_values(Corollary c, long ell, unsigned k) {
    // admissible a form an interval; stop one past its upper end
    std::vector<long> out;
    bool seen_admissible = false;
    for (long a = 1; a <= (1L << 20); ++a) {
        const bool ok = !corollary_violation(c, a, ell, k);
        out.push_back(a);
        if (ok) seen_admissible = true;
        else if (seen_admissible || a > 3) break;
    }
    return out;
}

void split_grid(Corollary c, const std::vector<long>& a_values, const std::vector<long>& ell_values,
                const std::vector<unsigned>& k_values, std::vector<GridPoint>& admissible,
                std::vector<InadmissibleEntry>& inadmissible) {
    std::set<std::tuple<long, long, unsigned>> keys;
    for (long ell : ell_values)
        for (unsigned k : k_values) {
            const auto as = a_values.empty() ? default_a_values(c, ell, k) : a_values;
            for (long a : as) keys.emplace(a, ell, k);
        }
    for (const auto& [a, ell, k] : keys) {
        if (auto v = corollary_violation(c, a, ell, k)) inadmissible.push_back({a, ell, k, *v});
        else admissible.push_back({a, ell, k});
    }
}

AtlasEntry evaluate_point(Corollary c, const GridPoint& pt) {
    const auto start = std::chrono::steady_clock::now();
    const CorollaryInstance inst = corollary_instance(c, pt.a, pt.ell, pt.k);
    AtlasEntry entry{pt.a, pt.ell, pt.k, inst.source.label, inst.target.label,
                     check_local_multiplicity(inst.source, inst.target, inst.k, inst.kind), 0.0};
    entry.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return entry;
}

} // namespace

std::string report_to_json(const CriterionReport& report) { return report_json(report).dump(); }

std::vector<long> parse_int_list(const std::string& text) {
    std::set<long> values;
    std::stringstream ss(text);
    std::string item;
    auto to_long = [&](const std::string& s) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + s + "' in '" + text + "'");
        }
        if (used != s.size()) throw ParseError("bad integer '" + s + "' in '" + text + "'");
        return v;
    };
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (auto dots = item.find(".."); dots != std::string::npos) {
            const long lo = to_long(item.substr(0, dots));
            const long hi = to_long(item.substr(dots + 2));
            if (hi - lo > 100000) throw ParseError("range '" + item + "' is too large");
            for (long v = lo; v <= hi; ++v) values.insert(v);
        } else {
            values.insert(to_long(item));
        }
    }
    return {values.begin(), values.end()};
}

Atlas run_atlas_serial(Corollary corollary, const std::vector<long>& a_values, const std::vector<long>& ell_values,
                       const std::vector<unsigned>& k_values) {
    Atlas atlas;
    atlas.corollary = corollary;
    std::vector<GridPoint> points;
    split_grid(corollary, a_values, ell_values, k_values, points, atlas.inadmissible);
    for (const auto& pt : points) atlas.entries.push_back(evaluate_point(corollary, pt));
    return atlas;
}

Atlas run_atlas(Corollary corollary, const std::vector<long>& a_values, const std::vector<long>& ell_values,
                const std::vector<unsigned>& k_values, int threads) {
    set_threads(threads);
    Atlas atlas;
    atlas.corollary = corollary;
    std::vector<GridPoint> points;
    split_grid(corollary, a_values, ell_values, k_values, points, atlas.inadmissible);

    std::vector<std::optional<AtlasEntry>> slots(points.size());
    const auto count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
        slots[static_cast<std::size_t>(i)] = evaluate_point(corollary, points[static_cast<std::size_t>(i)]);
    for (auto& slot : slots) atlas.entries.push_back(std::move(*slot));
    std::sort(atlas.entries.begin(), atlas.entries.end(), [](const AtlasEntry& x, const AtlasEntry& y) {
        return std::tie(x.a, x.ell, x.k) < std::tie(y.a, y.ell, y.k);
    });
    return atlas;
}

std::string atlas_to_json(const Atlas& atlas) {
    json doc;
    doc["corollary"] = corollary_id(atlas.corollary);
    doc["entries"] = json::array();
    for (const auto& e : atlas.entries)
        doc["entries"].push_back(
            {{"a", e.a}, {"ell", e.ell}, {"k", e.k}, {"source", e.source}, {"target", e.target}, {"report", report_json(e.report)}});
    doc["inadmissible"] = json::array();
    for (const auto& e : atlas.inadmissible)
        doc["inadmissible"].push_back({{"a", e.a}, {"ell", e.ell}, {"k", e.k}, {"violated", e.violated}});
    return doc.dump(2) + "\n";
}

void apply_thread_env() {
    if (const char* env = std::getenv("LMC_THREADS")) {
        try {
            set_threads(std::stoi(env));
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring LMC_THREADS='" << env << "'\n";
        }
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cohomological criteria for local k-multiplicity of maps between manifolds", "lmc"};
    app.require_subcommand(1);

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Evaluate the determinant criterion for one map");
    check_cmd->add_option("--source", check.source, "Source manifold: shorthand (rp:13) or spec file")->required();
    check_cmd->add_option("--target", check.target, "Target manifold: shorthand or spec file")->required();
    check_cmd->add_option("--k", check.k, "Multiplicity k")->required();
    check_cmd->add_option("--path", check.path, "sw (Stiefel-Whitney, k a power of 2) or chern (k an odd prime)");
    check_cmd->add_option("--pullback", check.pullback, "JSON file with the total class of f*TN");
    check_cmd->add_flag("--fastpath", check.fastpath, "Use the top dual class criterion (parallelizable target)");

    AtlasOptions atlas;
    auto* atlas_cmd = app.add_subcommand("atlas", "Sweep a corollary's parameter grid");
    atlas_cmd->add_option("--corollary", atlas.corollary, "1.5, 1.6, 1.7 or 1.8")->required();
    atlas_cmd->add_option("--ell", atlas.ell, "ell values, e.g. 2..4 or 2,3")->required();
    atlas_cmd->add_option("--k", atlas.k, "k values, e.g. 2,4,8")->required();
    atlas_cmd->add_option("--a", atlas.a, "a values (default: through the admissible range)");
    atlas_cmd->add_option("--output", atlas.output, "Write the atlas JSON here (summary goes to stdout)");
    atlas_cmd->add_option("--threads", atlas.threads, "Worker threads (overrides LMC_THREADS)");
    atlas_cmd->add_flag("--timings", atlas.timings, "Append per-entry wall time to the summary table");

    VerifyOptions verify;
    std::string p_list, k_list;
    auto* verify_cmd = app.add_subcommand("verify", "Run an identity verification suite");
    verify_cmd->add_option("identity", verify.identity, "dual-cauchy | nk-schur | euler-crosscheck")->required();
    verify_cmd->add_option("--max-a", verify.max_a, "Largest A (rows / a-variables), at most 4");
    verify_cmd->add_option("--max-b", verify.max_b, "Largest B (columns / b-variables), at most 3");
    verify_cmd->add_option("--p", p_list, "Primes, e.g. 2,3,5 (default all three)");
    verify_cmd->add_option("--m", verify.max_m, "Largest m for cp:m, at most 8");
    verify_cmd->add_option("--k", k_list, "Odd primes k (default 3,5)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitError;
    }

    try {
        if (*check_cmd) return cmd_check(check, out);
        if (*atlas_cmd) return cmd_atlas(atlas, out, err);
        if (*verify_cmd) {
            for (long p : p_list.empty() ? std::vector<long>{} : parse_int_list(p_list))
                verify.primes.push_back(static_cast<unsigned>(p));
            for (long k : k_list.empty() ? std::vector<long>{} : parse_int_list(k_list))
                verify.ks.push_back(static_cast<unsigned>(k));
            return cmd_verify(verify, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

} // namespace lmc
