// Acceptance gate: runs the twelve pinned checks and prints one pass/fail
// line per criterion.  Ranges, tolerances, and the seed are fixed here on
// purpose; the configurable path is the ffj CLI, not this binary.
//
// Usage: ffj_acceptance [--criterion N] [--margins PATH]
//   --criterion N   run only criterion N (1..12); default runs all
//   --margins PATH  where criterion 3 writes its full margin table
//                   (default gap_margins.csv in the working directory)
//
// Exit 0 when every selected criterion passes, 1 otherwise.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ffj/ffj.hpp"

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
    bool pass = true;
    std::string detail;
};

void note_failure(Outcome& out, const ffj::VerificationReport& rep) {
    out.pass = false;
    if (!out.detail.empty()) return;
    std::ostringstream os;
    os << rep.suite << " n=" << rep.n;
    if (!rep.detail.empty()) os << ": " << rep.detail;
    out.detail = os.str();
}

void absorb(Outcome& out, const std::vector<ffj::VerificationReport>& reports) {
    for (const ffj::VerificationReport& rep : reports)
        if (!rep.passed()) note_failure(out, rep);
}

void absorb(Outcome& out, const ffj::VerificationReport& rep) {
    if (!rep.passed()) note_failure(out, rep);
}

void require(Outcome& out, bool ok, const std::string& why) {
    if (ok) return;
    out.pass = false;
    if (out.detail.empty()) out.detail = why;
}

double margin_value(const ffj::VerificationReport& rep, const std::string& name) {
    for (const auto& [key, value] : rep.margins)
        if (key == name) return value;
    throw std::logic_error("missing margin " + name + " in suite " + rep.suite);
}

// 1. Counting, partition quotient, and closed-form builders agree exactly.
Outcome criterion1() {
    Outcome out;
    for (int n = 4; n <= 8; ++n) absorb(out, ffj::verify_quotient_forms(n));
    if (out.pass) out.detail = "three quotient constructions agree exactly, n=4..8, both sets";
    return out;
}

// 2. Second-largest adjacency eigenvalue of the full graph matches the
//    quotient within 1e-8 * degree.
Outcome criterion2() {
    Outcome out;
    for (int n = 4; n <= 7; ++n)
        for (const ffj::Variant v : {ffj::Variant::plain, ffj::Variant::prime})
            absorb(out, ffj::verify_aldous(n, v, kSeed));
    if (out.pass) out.detail = "graph and quotient top eigenvalues agree, n=4..7, both sets";
    return out;
}

// 3. Both recursion inequalities strict with slack > 1e-9; margin table
//    written as CSV.
Outcome criterion3(const std::string& margins_path) {
    Outcome out;
    const std::vector<ffj::VerificationReport> reports = ffj::verify_theorem2(5, 300);
    absorb(out, reports);
    double min_prime = 1e300, min_plain = 1e300;
    for (const ffj::VerificationReport& rep : reports) {
        min_prime = std::min(min_prime, margin_value(rep, "prime_slack"));
        min_plain = std::min(min_plain, margin_value(rep, "plain_slack"));
    }
    if (!margins_path.empty()) {
        std::ofstream mf(margins_path);
        require(out, static_cast<bool>(mf), "cannot write margin table " + margins_path);
        if (mf) ffj::write_margins_csv(mf, reports);
    }
    if (out.pass) {
        std::ostringstream os;
        os << "strict slack for n=5..300 (min prime " << ffj::format_sig(min_prime)
           << ", min plain " << ffj::format_sig(min_plain) << "); table in "
           << margins_path;
        out.detail = os.str();
    }
    return out;
}

// 4. The quotient-Laplacian gap strictly shrinks at every step, both sets.
Outcome criterion4() {
    Outcome out;
    absorb(out, ffj::verify_prop_monotone(4, 300, ffj::Variant::prime));
    absorb(out, ffj::verify_prop_monotone(4, 300, ffj::Variant::plain));
    if (out.pass) out.detail = "mu2 strictly decreasing for n=4..300, both sets";
    return out;
}

// 5. Prime-set mu2 bound via the path submatrix, exact submatrix identity,
//    and the <= 1 cap from n = 9 on.
Outcome criterion5() {
    Outcome out;
    absorb(out, ffj::verify_prime_bound(6, 300));
    if (out.pass) out.detail = "prime-set mu2 bound and path submatrix identity, n=6..300";
    return out;
}

// 6. Plain-set mu2 bound via the linear test vector, Rayleigh value exact to
//    1e-10 relative, and the <= 4 cap from n = 5 on.
Outcome criterion6() {
    Outcome out;
    absorb(out, ffj::verify_plain_bound(4, 300));
    if (out.pass) out.detail = "plain-set mu2 bound and linear Rayleigh identity, n=4..300";
    return out;
}

// 7. Interior recurrence, boundary condition, closed-form entry identity, and
//    the first-difference bound of the second eigenvector, all within 1e-8.
Outcome criterion7() {
    Outcome out;
    for (int n = 9; n <= 50; ++n) absorb(out, ffj::verify_lemma7(n));
    if (out.pass) out.detail = "second-eigenvector structure within 1e-8, n=9..50";
    return out;
}

// 8. mu2 simple, Fiedler vector monotone and exchange-skew.
Outcome criterion8() {
    Outcome out;
    absorb(out, ffj::verify_corollary1(4, 300));
    if (out.pass) out.detail = "simple mu2 with monotone, exchange-skew eigenvector, n=4..300";
    return out;
}

// 9. degree*I - Q positive semidefinite with rank exactly n-1, both sets.
Outcome criterion9() {
    Outcome out;
    absorb(out, ffj::verify_psd_shift(4, 300));
    if (out.pass) out.detail = "shifted quotients psd with rank n-1, n=4..300, both sets";
    return out;
}

// 10. Exact Laplacian decompositions plus the quadratic-form identity on
//     1000 seeded random vectors per order.
Outcome criterion10() {
    Outcome out;
    absorb(out, ffj::verify_decomposition(4, 50));
    absorb(out, ffj::verify_quadratic_form(4, 50, kSeed, 1000));
    if (out.pass)
        out.detail = "decompositions exact and quadratic form on 1000 seeded vectors, n=4..50";
    return out;
}

// 11. Lift identity exact, quotient spectrum contained in the graph spectrum
//     at 1e-7, and the covering split bounds at n = 5, 6.
Outcome criterion11() {
    Outcome out;
    for (int n = 4; n <= 6; ++n) absorb(out, ffj::verify_lift_containment(n));
    for (int n = 5; n <= 6; ++n) absorb(out, ffj::verify_covering_bound(n));
    if (out.pass)
        out.detail = "lift identity, spectrum containment (n=4..6), covering bounds (n=5,6)";
    return out;
}

// 12. Flag-graph / Cayley-graph correspondence, edge by edge, every level.
Outcome criterion12() {
    Outcome out;
    for (int n = 4; n <= 6; ++n) absorb(out, ffj::verify_flag_correspondence(n));
    if (out.pass) out.detail = "flag graphs match relabelled Cayley graphs, n=4..6, all levels";
    return out;
}

struct Criterion {
    int id;
    double time_cap_seconds;  // 0 = no pinned cap
    Outcome (*run)(const std::string&);
};

// Wrappers give every criterion the same signature.
Outcome run1(const std::string&) { return criterion1(); }
Outcome run2(const std::string&) { return criterion2(); }
Outcome run3(const std::string& margins) { return criterion3(margins); }
Outcome run4(const std::string&) { return criterion4(); }
Outcome run5(const std::string&) { return criterion5(); }
Outcome run6(const std::string&) { return criterion6(); }
Outcome run7(const std::string&) { return criterion7(); }
Outcome run8(const std::string&) { return criterion8(); }
Outcome run9(const std::string&) { return criterion9(); }
Outcome run10(const std::string&) { return criterion10(); }
Outcome run11(const std::string&) { return criterion11(); }
Outcome run12(const std::string&) { return criterion12(); }

const Criterion kCriteria[] = {
    {1, 120.0, run1}, {2, 300.0, run2}, {3, 60.0, run3}, {4, 0.0, run4},
    {5, 0.0, run5},   {6, 0.0, run6},   {7, 0.0, run7},  {8, 0.0, run8},
    {9, 0.0, run9},   {10, 0.0, run10}, {11, 0.0, run11}, {12, 0.0, run12},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    std::string margins_path = "gap_margins.csv";
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
            if (only < 1 || only > 12) {
                std::cerr << "error: --criterion must lie in 1..12\n";
                return 1;
            }
        } else if (arg == "--margins" && i + 1 < argc) {
            margins_path = argv[++i];
        } else {
            std::cerr << "usage: ffj_acceptance [--criterion N] [--margins PATH]\n";
            return 1;
        }
    }

    bool all_pass = true;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run(margins_path);
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (out.pass && c.time_cap_seconds > 0.0 && seconds > c.time_cap_seconds) {
            out.pass = false;
            out.detail = "runtime " + ffj::format_sig(seconds) + " s exceeds the "
                         + ffj::format_sig(c.time_cap_seconds) + " s cap";
        }
        std::ostringstream line;
        line << "criterion " << c.id << ": " << (out.pass ? "PASS" : "FAIL") << "  "
             << out.detail << "  [" << ffj::format_sig(seconds) << " s]";
        std::cout << line.str() << std::endl;
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
