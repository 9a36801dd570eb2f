#include "report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace charsum::cli {

namespace {

const std::vector<std::string> kRecordHeader = {"p",     "model_params", "brute_total", "formula_total",
                                                "match", "hyper_value"};

std::vector<std::string> record_row(const VerificationRecord &r, const char *missing)
{
    return {std::to_string(r.p),
            r.model_params,
            std::to_string(r.brute_total),
            std::to_string(r.formula_total),
            r.match ? "true" : "false",
            r.hyper_value.value_or(missing)};
}

// UTF-8 code points, which is the column count for everything printed here.
std::size_t display_width(const std::string &s)
{
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

} // namespace

std::optional<Format> parse_format(std::string_view name)
{
    if (name == "table")
        return Format::table;
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    return std::nullopt;
}

std::string render_table(const std::vector<std::string> &header,
                         const std::vector<std::vector<std::string>> &rows)
{
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i)
        width[i] = display_width(header[i]);
    for (const auto &row : rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], display_width(row[i]));

    std::ostringstream out;
    auto line = [&](const std::vector<std::string> &cells) {
        std::string text;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            text += cells[i];
            if (i + 1 < cells.size())
                text += std::string(width[i] - display_width(cells[i]) + 2, ' ');
        }
        out << text << '\n';
    };
    line(header);
    for (const auto &row : rows)
        line(row);
    return out.str();
}

std::string csv_field(const std::string &field)
{
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

std::string render_csv(const std::vector<std::string> &header,
                       const std::vector<std::vector<std::string>> &rows)
{
    std::ostringstream out;
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << (i ? "," : "") << csv_field(cells[i]);
        out << '\n';
    };
    line(header);
    for (const auto &row : rows)
        line(row);
    return out.str();
}

std::string emit_report(const std::vector<VerificationRecord> &records, Format format)
{
    if (format == Format::json) {
        auto arr = nlohmann::json::array();
        for (const auto &r : records) {
            arr.push_back({{"p", r.p},
                           {"model_params", r.model_params},
                           {"brute_total", r.brute_total},
                           {"formula_total", r.formula_total},
                           {"match", r.match},
                           {"hyper_value", r.hyper_value ? nlohmann::json(*r.hyper_value) : nlohmann::json()}});
        }
        return arr.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const auto &r : records)
        rows.push_back(record_row(r, format == Format::csv ? "" : "-"));
    return format == Format::csv ? render_csv(kRecordHeader, rows) : render_table(kRecordHeader, rows);
}

std::vector<VerificationRecord> parse_json_records(const std::string &text)
{
    std::vector<VerificationRecord> records;
    try {
        const auto arr = nlohmann::json::parse(text);
        if (!arr.is_array())
            throw std::runtime_error("expected a JSON array of records");
        for (const auto &obj : arr) {
            VerificationRecord r;
            r.p = obj.at("p").get<std::int64_t>();
            r.model_params = obj.at("model_params").get<std::string>();
            r.brute_total = obj.at("brute_total").get<std::int64_t>();
            r.formula_total = obj.at("formula_total").get<std::int64_t>();
            r.match = obj.at("match").get<bool>();
            if (const auto &h = obj.at("hyper_value"); !h.is_null())
                r.hyper_value = h.get<std::string>();
            records.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::runtime_error(e.what());
    }
    return records;
}

} // namespace charsum::cli
