#pragma once

// CSV and plain-text emission. Numbers are written with 12 significant
// digits and a period decimal separator regardless of locale; quantities
// that do not apply to a model are written as NA.

#include "sfent/entropy.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sfent {

struct ReportRow {
    std::string system;
    EntropyReport report;
    // "ok" or "error:<ErrorKind>"
    std::string status = "ok";
};

// system,Z,omega,Z1,Z2,C_N,S_F,S_B,S_F2,S_B2,S_rho,S_pi,S_Gamma,S_Pi,
// I_F,I_B,I_r,I_p,delta_S_F,delta_S_B,status
const std::vector<std::string>& report_columns();

std::string format_number(double v);
std::string format_optional(const std::optional<double>& v);

std::string csv_header();
std::string csv_row(const ReportRow& row);

// Header plus one line per row. Creates parent directories; throws
// Error(ConfigError) when the file cannot be written.
void write_report_csv(const std::filesystem::path& path, const std::vector<ReportRow>& rows);

// Two-column name/value listing for terminals.
std::string format_table(const ReportRow& row);

struct CurveSet {
    std::string figure_id;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    // Throws Error(NonFinite) if any entry is not finite, Error(ConfigError)
    // if a row's width differs from the header.
    void validate() const;
};

void write_curve_csv(const std::filesystem::path& path, const CurveSet& curves);

// Writes text to path, creating parent directories.
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace sfent
