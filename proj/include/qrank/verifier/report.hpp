#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "check.hpp"

namespace qrank::verifier {

enum class ReportFormat { text, json };

/// Aligned table: name, anchor, status, order, time.
void write_text_report(const std::vector<CheckResult>& results, std::ostream& out);

/// One object per check; mismatch coefficients are exact strings.
void write_json_report(const std::vector<CheckResult>& results, std::ostream& out);

/// Writes to `path`, or to stdout when path is empty or "-". Throws
/// std::runtime_error when the file cannot be written.
void emit_report(const std::vector<CheckResult>& results, ReportFormat format, const std::string& path);

/// A named building block that `qrank series` can print.
struct CatalogEntry {
    std::string name;
    std::string description;
    /// Coefficients through q^N as (exponent, rendered coefficient).
    std::function<std::vector<std::pair<int, std::string>>(int)> coefficients;
};

const std::vector<CatalogEntry>& series_catalog();
const CatalogEntry* find_series(const std::string& name);

} // namespace qrank::verifier
