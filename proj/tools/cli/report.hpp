#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charsum::cli {

/// One row of a verification scan. For count suites the totals are point
/// counts; other suites store integers scaled the same way (see scan.hpp).
struct VerificationRecord {
    std::int64_t p = 0;
    std::string model_params;
    std::int64_t brute_total = 0;
    std::int64_t formula_total = 0;
    bool match = false;
    /// Exact "num/den", absent when the suite has no hypergeometric value.
    std::optional<std::string> hyper_value = std::nullopt;

    friend bool operator==(const VerificationRecord &, const VerificationRecord &) = default;
};

enum class Format { table, json, csv };

std::optional<Format> parse_format(std::string_view name);

/// Left-aligned columns, two spaces apart.
std::string render_table(const std::vector<std::string> &header,
                         const std::vector<std::vector<std::string>> &rows);
/// Quotes a field only if it holds a comma, quote or newline.
std::string csv_field(const std::string &field);
std::string render_csv(const std::vector<std::string> &header,
                       const std::vector<std::vector<std::string>> &rows);

std::string emit_report(const std::vector<VerificationRecord> &records, Format format);

/// Inverse of emit_report(..., Format::json). Throws std::runtime_error on
/// malformed input.
std::vector<VerificationRecord> parse_json_records(const std::string &text);

} // namespace charsum::cli
