#pragma once

// Result records and their text, JSON and CSV renderings. Decimals are
// always produced from the stored rational at print time.

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "iacpoly/errors.hpp"
#include "iacpoly/rational.hpp"

namespace iacpoly {

struct OutputRecord {
    std::string label;
    Rational value;
    bool exact = true;  // false when `value` is only a rational approximation
    std::string spec;

    [[nodiscard]] std::string exact_string() const { return exact ? value.to_string() : "n/a"; }
    [[nodiscard]] std::string decimal() const { return value.to_decimal(5); }
};

enum class Format { text, json, csv };

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw ParseError("unknown output format '" + s + "'");
}

inline nlohmann::json to_json(const OutputRecord& r) {
    nlohmann::json j;
    j["label"] = r.label;
    j["exact"] = r.exact ? nlohmann::json(r.value.to_string()) : nlohmann::json(nullptr);
    j["decimal"] = nlohmann::json::parse(r.decimal());
    j["spec"] = r.spec;
    return j;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace detail

inline void write_records(std::ostream& os, const std::vector<OutputRecord>& rows, Format f,
                          const std::string& title = {}) {
    switch (f) {
        case Format::json: {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& r : rows) a.push_back(to_json(r));
            os << a.dump(2) << '\n';
            return;
        }
        case Format::csv:
            os << "label,exact,decimal,spec\n";
            for (const auto& r : rows)
                os << detail::csv_field(r.label) << ',' << r.exact_string() << ',' << r.decimal() << ','
                   << detail::csv_field(r.spec) << '\n';
            return;
        case Format::text: {
            if (!title.empty()) os << title << '\n';
            std::size_t wl = 0, we = 0;
            for (const auto& r : rows) {
                wl = std::max(wl, r.label.size());
                we = std::max(we, r.exact_string().size());
            }
            for (const auto& r : rows) {
                os << r.label << std::string(wl - r.label.size() + 2, ' ') << r.exact_string()
                   << std::string(we - r.exact_string().size() + 2, ' ') << r.decimal();
                if (!r.spec.empty()) os << "  " << r.spec;
                os << '\n';
            }
            return;
        }
    }
}

inline void write_record(std::ostream& os, const OutputRecord& r, Format f) {
    if (f == Format::json)
        os << to_json(r).dump(2) << '\n';
    else
        write_records(os, {r}, f);
}

}  // namespace iacpoly
