#include "sfent/output.hpp"

#include "sfent/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sfent {

namespace {

// Ordered the same way as report_columns() after the system column.
std::vector<std::optional<double>> row_values(const EntropyReport& r)
{
    const auto& m = r.model_params;
    return {m.Z,     m.omega, m.Z1,      m.Z2,   m.C_N, r.S_F, r.S_B, r.S_F2, r.S_B2,      r.S_rho,
            r.S_pi,  r.S_Gamma, r.S_Pi,  r.I_F,  r.I_B, r.I_r, r.I_p, r.delta_S_F, r.delta_S_B};
}

} // namespace

const std::vector<std::string>& report_columns()
{
    static const std::vector<std::string> cols = {
        "system", "Z",     "omega", "Z1",      "Z2",   "C_N", "S_F", "S_B", "S_F2",      "S_B2",      "S_rho",
        "S_pi",   "S_Gamma", "S_Pi", "I_F",    "I_B",  "I_r", "I_p", "delta_S_F", "delta_S_B", "status"};
    return cols;
}

std::string format_number(double v)
{
    // The library never calls setlocale, so snprintf keeps the period.
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string format_optional(const std::optional<double>& v)
{
    return v ? format_number(*v) : "NA";
}

std::string csv_header()
{
    std::string out;
    for (const auto& c : report_columns())
        out += (out.empty() ? "" : ",") + c;
    return out;
}

std::string csv_row(const ReportRow& row)
{
    std::string out = row.system;
    const bool failed = row.status != "ok";
    const auto values = row_values(row.report);
    for (std::size_t i = 0; i < values.size(); ++i) {
        // Model parameters survive a failure, derived quantities do not.
        const bool param = i < 5;
        out += ',';
        out += (failed && !param) ? "NA" : format_optional(values[i]);
    }
    out += ',' + row.status;
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::error_code ec;
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::ConfigError, "cannot write " + path.string());
    out << text;
    out.flush();
    if (!out)
        throw Error(ErrorKind::ConfigError, "write failed for " + path.string());
}

void write_report_csv(const std::filesystem::path& path, const std::vector<ReportRow>& rows)
{
    std::string text = csv_header() + "\n";
    for (const auto& r : rows)
        text += csv_row(r) + "\n";
    write_text_file(path, text);
}

std::string format_table(const ReportRow& row)
{
    std::ostringstream os;
    const auto& cols = report_columns();
    const auto values = row_values(row.report);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-10s %s\n", "system", row.system.c_str());
    os << buf;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i])
            continue;
        std::snprintf(buf, sizeof buf, "%-10s %s\n", cols[i + 1].c_str(), format_number(*values[i]).c_str());
        os << buf;
    }
    std::snprintf(buf, sizeof buf, "%-10s %s\n", "status", row.status.c_str());
    os << buf;
    return os.str();
}

void CurveSet::validate() const
{
    if (columns.empty())
        throw Error(ErrorKind::ConfigError, figure_id + ": no columns");
    for (const auto& r : rows) {
        if (r.size() != columns.size())
            throw Error(ErrorKind::ConfigError, figure_id + ": row width does not match header");
        for (double v : r)
            if (!std::isfinite(v))
                throw Error(ErrorKind::NonFinite, figure_id + ": non-finite value in curve data");
    }
}

void write_curve_csv(const std::filesystem::path& path, const CurveSet& curves)
{
    curves.validate();
    std::string text;
    for (std::size_t i = 0; i < curves.columns.size(); ++i)
        text += (i ? "," : "") + curves.columns[i];
    text += '\n';
    for (const auto& r : curves.rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            text += (i ? "," : "") + format_number(r[i]);
        text += '\n';
    }
    write_text_file(path, text);
}

} // namespace sfent
