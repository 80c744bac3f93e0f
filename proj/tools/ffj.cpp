// Command-line front end: prints generating sets, builds and exports the
// group graphs, emits quotient matrices and spectra, and runs the
// verification suites with JSON or CSV reporting.
//
// Exit codes: 0 all requested checks pass, 1 a verification suite failed,
// 2 usage or runtime error.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "ffj/ffj.hpp"

namespace {

struct Options {
    std::optional<int> n;
    std::optional<int> n_min;
    std::optional<int> n_max;
    std::string set_name;  // empty = both where a suite has variants
    std::uint64_t seed = 42;
    std::optional<double> tol;
    std::string format = "json";
    std::string out_path;  // empty = stdout
    bool no_timestamp = false;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--n", opt.n, "single order n");
    cmd->add_option("--n-min", opt.n_min, "sweep start (clips the suite default)");
    cmd->add_option("--n-max", opt.n_max, "sweep end (clips the suite default)");
    cmd->add_option("--set", opt.set_name, "generating set: plain or prime")
        ->check(CLI::IsMember({"plain", "prime"}));
    cmd->add_option("--seed", opt.seed, "seed for randomised solvers (default 42)");
    cmd->add_option("--tol", opt.tol,
                    "override the eigenvalue agreement / spectrum matching tolerance");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out_path, "output file (default stdout)");
    cmd->add_flag("--no-timestamp", opt.no_timestamp,
                  "omit the timestamp and zero runtimes for reproducible output");
}

std::pair<int, int> resolve_range(const Options& opt, int def_lo, int def_hi) {
    if (opt.n) return {*opt.n, *opt.n};
    return {opt.n_min.value_or(def_lo), opt.n_max.value_or(def_hi)};
}

std::vector<ffj::Variant> resolve_variants(const Options& opt) {
    if (opt.set_name.empty()) return {ffj::Variant::plain, ffj::Variant::prime};
    return {ffj::parse_variant(opt.set_name)};
}

int required_n(const Options& opt, const char* cmd) {
    if (!opt.n) throw std::invalid_argument(std::string(cmd) + ": requires --n");
    return *opt.n;
}

// Streams either to --out or stdout.
class OutputStream {
public:
    explicit OutputStream(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

nlohmann::ordered_json base_config(const char* command, const Options& opt) {
    nlohmann::ordered_json cfg;
    cfg["command"] = command;
    if (opt.n) cfg["n"] = *opt.n;
    if (opt.n_min) cfg["n_min"] = *opt.n_min;
    if (opt.n_max) cfg["n_max"] = *opt.n_max;
    cfg["set"] = opt.set_name.empty() ? "both" : opt.set_name;
    cfg["seed"] = opt.seed;
    if (opt.tol) cfg["tol"] = *opt.tol;
    cfg["format"] = opt.format;
    if (!opt.out_path.empty()) cfg["out"] = opt.out_path;
    if (!opt.no_timestamp) cfg["timestamp"] = ffj::iso_timestamp_utc();
    return cfg;
}

std::string canonical_suite(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "theorem2") return "gap-recursion";
    if (s == "lemma7") return "fiedler-form";
    if (s == "corollary1") return "fiedler-shape";
    if (s == "psd") return "psd-shift";
    if (s == "quadratic") return "quadratic-form";
    if (s == "flags") return "flag-correspondence";
    return s;
}

void append(std::vector<ffj::VerificationReport>& into,
            std::vector<ffj::VerificationReport> from) {
    for (auto& rep : from) into.push_back(std::move(rep));
}

std::vector<ffj::VerificationReport> run_suite(const std::string& canonical,
                                               const Options& opt) {
    std::vector<ffj::VerificationReport> reports;
    const double tol = opt.tol.value_or(-1.0);
    const double match_tol = opt.tol.value_or(1e-7);

    if (canonical == "quotient-forms") {
        const auto [lo, hi] = resolve_range(opt, 4, 8);
        for (int n = lo; n <= hi; ++n) reports.push_back(ffj::verify_quotient_forms(n));
    } else if (canonical == "aldous") {
        const auto [lo, hi] = resolve_range(opt, 4, 7);
        for (int n = lo; n <= hi; ++n)
            for (const ffj::Variant v : resolve_variants(opt))
                reports.push_back(ffj::verify_aldous(n, v, opt.seed, tol));
    } else if (canonical == "gap-recursion") {
        const auto [lo, hi] = resolve_range(opt, 5, 300);
        append(reports, ffj::verify_theorem2(lo, hi));
    } else if (canonical == "monotone") {
        const auto [lo, hi] = resolve_range(opt, 4, 300);
        for (const ffj::Variant v : resolve_variants(opt))
            append(reports, ffj::verify_prop_monotone(lo, hi, v));
    } else if (canonical == "fiedler-form") {
        const auto [lo, hi] = resolve_range(opt, 9, 300);
        for (int n = lo; n <= hi; ++n) reports.push_back(ffj::verify_lemma7(n));
    } else if (canonical == "fiedler-shape") {
        const auto [lo, hi] = resolve_range(opt, 4, 300);
        append(reports, ffj::verify_corollary1(lo, hi));
    } else if (canonical == "covering") {
        const auto [lo, hi] = resolve_range(opt, 5, 6);
        for (int n = lo; n <= hi; ++n)
            reports.push_back(ffj::verify_covering_bound(n, match_tol));
    } else if (canonical == "matching") {
        const auto [lo, hi] = resolve_range(opt, 4, 7);
        for (int n = lo; n <= hi; ++n) reports.push_back(ffj::verify_matching_split(n));
    } else if (canonical == "prime-bound") {
        const auto [lo, hi] = resolve_range(opt, 6, 300);
        append(reports, ffj::verify_prime_bound(lo, hi));
    } else if (canonical == "plain-bound") {
        const auto [lo, hi] = resolve_range(opt, 4, 300);
        append(reports, ffj::verify_plain_bound(lo, hi));
    } else if (canonical == "psd-shift") {
        const auto [lo, hi] = resolve_range(opt, 4, 300);
        append(reports, ffj::verify_psd_shift(lo, hi));
    } else if (canonical == "decomposition") {
        const auto [lo, hi] = resolve_range(opt, 4, 100);
        append(reports, ffj::verify_decomposition(lo, hi));
    } else if (canonical == "quadratic-form") {
        const auto [lo, hi] = resolve_range(opt, 4, 50);
        append(reports, ffj::verify_quadratic_form(lo, hi, opt.seed));
    } else if (canonical == "lift") {
        const auto [lo, hi] = resolve_range(opt, 4, 6);
        for (int n = lo; n <= hi; ++n)
            reports.push_back(ffj::verify_lift_containment(n, match_tol));
    } else if (canonical == "flag-correspondence") {
        const auto [lo, hi] = resolve_range(opt, 4, 6);
        for (int n = lo; n <= hi; ++n)
            reports.push_back(ffj::verify_flag_correspondence(n));
    } else if (canonical == "all") {
        for (const char* s :
             {"quotient-forms", "aldous", "gap-recursion", "monotone", "fiedler-form",
              "fiedler-shape", "covering", "matching", "prime-bound", "plain-bound",
              "psd-shift", "decomposition", "quadratic-form", "lift",
              "flag-correspondence"})
            append(reports, run_suite(s, opt));
    } else {
        throw std::invalid_argument("unknown suite: " + canonical);
    }
    return reports;
}

int cmd_verify(const std::string& suite_token, const Options& opt) {
    const std::string canonical = canonical_suite(suite_token);
    const std::vector<ffj::VerificationReport> reports = run_suite(canonical, opt);

    nlohmann::ordered_json cfg = base_config("verify", opt);
    cfg["suite"] = canonical;

    OutputStream out(opt.out_path);
    if (opt.format == "csv") {
        ffj::write_margins_csv(out.get(), reports);
    } else {
        out.get() << ffj::reports_document(cfg, reports, opt.no_timestamp).dump(2)
                  << '\n';
    }
    for (const ffj::VerificationReport& rep : reports)
        if (!rep.passed()) return 1;
    return 0;
}

int cmd_gen(const Options& opt) {
    const int n = required_n(opt, "gen");
    const ffj::Variant v =
        opt.set_name.empty() ? ffj::Variant::plain : ffj::parse_variant(opt.set_name);
    const std::vector<ffj::Permutation> gens =
        v == ffj::Variant::prime ? ffj::gen_prime_set(n) : ffj::gen_reducible_set(n, 2);
    OutputStream out(opt.out_path);
    for (const ffj::Permutation& g : gens) out.get() << ffj::to_cycle_string(g) << '\n';
    return 0;
}

int cmd_graph(const Options& opt) {
    const int n = required_n(opt, "graph");
    const ffj::Variant v =
        opt.set_name.empty() ? ffj::Variant::plain : ffj::parse_variant(opt.set_name);
    const std::vector<ffj::Permutation> gens =
        v == ffj::Variant::prime ? ffj::gen_prime_set(n) : ffj::gen_reducible_set(n, 2);
    const ffj::SparseGraph g = ffj::cayley_graph(gens);
    std::cout << "vertices " << g.num_vertices() << '\n'
              << "edges " << g.num_edges() << '\n'
              << "degree " << g.regular_degree() << '\n'
              << "connected " << (g.is_connected() ? "true" : "false") << '\n';
    if (!opt.out_path.empty()) {
        std::ofstream ef(opt.out_path);
        if (!ef) throw std::runtime_error("cannot open output file: " + opt.out_path);
        ffj::write_edge_list(ef, g);
        std::ofstream lf(opt.out_path + ".labels");
        if (!lf)
            throw std::runtime_error("cannot open output file: " + opt.out_path
                                     + ".labels");
        ffj::write_labels(lf, ffj::rank_labels(n));
        std::cout << "written " << opt.out_path << " and " << opt.out_path
                  << ".labels\n";
    }
    return 0;
}

int cmd_quotient(const Options& opt) {
    const int n = required_n(opt, "quotient");
    if (n < 4 || n > 300)
        throw std::invalid_argument("quotient: --n must lie in 4..300");
    const ffj::Variant v =
        opt.set_name.empty() ? ffj::Variant::plain : ffj::parse_variant(opt.set_name);
    const ffj::IntMatrix q = ffj::closed_form_quotient(n, v);

    std::string agreement = "closed-form";
    if (n <= 8) {
        const std::vector<ffj::Permutation> gens =
            v == ffj::Variant::prime ? ffj::gen_prime_set(n) : ffj::gen_reducible_set(n, 2);
        const ffj::IntMatrix counted = ffj::schreier_matrix(gens);
        const ffj::QuotientResult qr = ffj::quotient_if_equitable(
            ffj::cayley_graph(gens), ffj::coset_partition(n));
        if (!(counted == q) || !qr.equitable || !(qr.quotient == q))
            throw std::runtime_error("quotient: cross-check against brute force failed");
        agreement = "cross-checked";
    }

    OutputStream out(opt.out_path);
    if (opt.format == "csv") {
        ffj::write_matrix_csv(out.get(), q);
    } else {
        nlohmann::ordered_json doc;
        doc["version"] = ffj::kVersion;
        doc["config"] = base_config("quotient", opt);
        doc["agreement"] = agreement;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int i = 0; i < q.rows(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int j = 0; j < q.cols(); ++j) row.push_back(q(i, j));
            rows.push_back(std::move(row));
        }
        doc["quotient"] = std::move(rows);
        out.get() << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_spectrum(const std::string& target, const Options& opt) {
    const int n = required_n(opt, "spectrum");
    const ffj::Variant v =
        opt.set_name.empty() ? ffj::Variant::plain : ffj::parse_variant(opt.set_name);

    ffj::Spectrum spectrum({}, {}, {});
    if (target == "quotient" || target == "laplacian") {
        if (n < 4 || n > 300)
            throw std::invalid_argument("spectrum: --n must lie in 4..300 for " + target);
        const ffj::IntMatrix q = ffj::closed_form_quotient(n, v);
        spectrum = ffj::symmetric_eigen(
            target == "quotient" ? q : ffj::laplacian(q), true);
    } else if (target == "cayley") {
        if (n < 4 || n > 6)
            throw std::invalid_argument(
                "spectrum: --n must lie in 4..6 for the full graph spectrum");
        const std::vector<ffj::Permutation> gens =
            v == ffj::Variant::prime ? ffj::gen_prime_set(n) : ffj::gen_reducible_set(n, 2);
        spectrum = ffj::symmetric_eigen(
            ffj::adjacency_matrix(ffj::cayley_graph(gens)), true);
    } else {
        throw std::invalid_argument("spectrum: target must be quotient, laplacian, or cayley");
    }

    OutputStream out(opt.out_path);
    if (opt.format == "csv") {
        ffj::write_spectrum_csv(out.get(), spectrum);
    } else {
        nlohmann::ordered_json doc;
        doc["version"] = ffj::kVersion;
        doc["config"] = base_config("spectrum", opt);
        doc["target"] = target;
        nlohmann::ordered_json values = nlohmann::ordered_json::array();
        nlohmann::ordered_json residuals = nlohmann::ordered_json::array();
        for (int k = 0; k < spectrum.size(); ++k) {
            values.push_back(ffj::round_sig(spectrum.values()[static_cast<std::size_t>(k)]));
            residuals.push_back(
                ffj::round_sig(spectrum.residuals()[static_cast<std::size_t>(k)]));
        }
        doc["values"] = std::move(values);
        doc["residuals"] = std::move(residuals);
        out.get() << doc.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"full-flag chain graphs, quotient matrices, and spectral verification"};
    app.require_subcommand(1);

    Options gen_opt, graph_opt, quot_opt, spec_opt, verify_opt, all_opt;
    std::string suite_token, spectrum_target;

    CLI::App* gen = app.add_subcommand("gen", "print a generating set, one cycle form per line");
    add_common_flags(gen, gen_opt);

    CLI::App* graph = app.add_subcommand("graph", "build the group graph, print stats, export edges");
    add_common_flags(graph, graph_opt);

    CLI::App* quotient = app.add_subcommand("quotient", "closed-form quotient matrix, cross-checked for n <= 8");
    add_common_flags(quotient, quot_opt);

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of a named matrix or graph");
    spectrum->add_option("target", spectrum_target, "quotient | laplacian | cayley")
        ->required();
    add_common_flags(spectrum, spec_opt);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite_token, "suite id, or 'all'")->required();
    add_common_flags(verify, verify_opt);

    CLI::App* all = app.add_subcommand("all", "run the complete verification matrix");
    add_common_flags(all, all_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_opt);
        if (graph->parsed()) return cmd_graph(graph_opt);
        if (quotient->parsed()) return cmd_quotient(quot_opt);
        if (spectrum->parsed()) return cmd_spectrum(spectrum_target, spec_opt);
        if (verify->parsed()) return cmd_verify(suite_token, verify_opt);
        if (all->parsed()) return cmd_verify("all", all_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

int main(int argc, char** argv) { return run(argc, argv); }
