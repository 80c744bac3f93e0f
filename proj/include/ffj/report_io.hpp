#pragma once

// Machine-readable output: one JSON document for a run's report collection,
// plus CSV writers for quotient matrices (integers, row-major), spectra
// (index, eigenvalue, residual), and per-suite margins.  All real numbers
// are rounded to 12 significant digits before serialisation so identical
// runs produce byte-identical files.

#include <cstdint>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "eig.hpp"
#include "matrix.hpp"
#include "verify.hpp"

namespace ffj {

inline constexpr const char* kVersion = "1.0.0";

// 12 significant digits, shortest representation.
inline std::string format_sig(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

// Rounds through the 12-digit text form, so JSON numbers carry exactly the
// printed precision.
inline double round_sig(double x) {
    return std::stod(format_sig(x));
}

inline std::string iso_timestamp_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

// One report row.  With zero_runtime set, runtime_ms serialises as 0 so
// repeated runs compare byte-for-byte.
inline nlohmann::ordered_json report_to_json(const VerificationReport& rep,
                                             bool zero_runtime) {
    nlohmann::ordered_json j;
    j["suite"] = rep.suite;
    j["n"] = rep.n;
    j["status"] = rep.status;
    nlohmann::ordered_json margins = nlohmann::ordered_json::object();
    for (const auto& [name, value] : rep.margins) margins[name] = round_sig(value);
    j["margins"] = std::move(margins);
    j["runtime_ms"] = zero_runtime ? 0.0 : round_sig(rep.runtime_ms);
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j;
}

// The full run document: {version, config, reports}.
inline nlohmann::ordered_json reports_document(
    const nlohmann::ordered_json& config,
    const std::vector<VerificationReport>& reports, bool zero_runtime) {
    nlohmann::ordered_json doc;
    doc["version"] = kVersion;
    doc["config"] = config;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const VerificationReport& rep : reports)
        rows.push_back(report_to_json(rep, zero_runtime));
    doc["reports"] = std::move(rows);
    return doc;
}

// Integer matrix, row-major, one row per line.
inline void write_matrix_csv(std::ostream& os, const IntMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j);
        }
        os << '\n';
    }
}

// index, eigenvalue, residual rows; residual 0 when vectors were not
// computed.
inline void write_spectrum_csv(std::ostream& os, const Spectrum& s) {
    os << "index,eigenvalue,residual\n";
    for (int k = 0; k < s.size(); ++k) {
        const double res =
            s.has_vectors() ? s.residuals()[static_cast<std::size_t>(k)] : 0.0;
        os << k << ',' << format_sig(s.values()[static_cast<std::size_t>(k)]) << ','
           << format_sig(res) << '\n';
    }
}

// suite, n, status, margin name, value; one row per named margin.
inline void write_margins_csv(std::ostream& os,
                              const std::vector<VerificationReport>& reports) {
    os << "suite,n,status,margin,value\n";
    for (const VerificationReport& rep : reports)
        for (const auto& [name, value] : rep.margins)
            os << rep.suite << ',' << rep.n << ',' << rep.status << ',' << name
               << ',' << format_sig(value) << '\n';
}

}  // namespace ffj
