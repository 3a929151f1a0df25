#pragma once

#include "hspin/spectra.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hspin {

using Json = nlohmann::ordered_json;

// rationals travel as ["num", "den"] string pairs
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json weight_json(const WeightVector& w);
WeightVector weight_from_json(const Json& j);

Json spectrum_line_json(const SpectrumLine& line);

struct OutputDocument {
    std::string command;
    Json params = Json::object();
    std::vector<Json> lines;
    std::vector<std::string> violations;
    std::optional<std::int64_t> checks;

    bool ok() const { return violations.empty(); }
};

enum class Format { Json, Csv, Table };

Format parse_format(const std::string& name);

std::string render(const OutputDocument& doc, Format format);
std::string render_json(const OutputDocument& doc);
std::string render_csv(const OutputDocument& doc);
std::string render_table(const OutputDocument& doc);

// parsed back from csv: column name -> cell text, one map per row
std::vector<std::vector<std::pair<std::string, std::string>>> parse_csv(const std::string& text);

}  // namespace hspin
