#include "hspin/output.hpp"

#include <algorithm>
#include <sstream>

namespace hspin {

namespace {

bool is_rational_pair(const Json& v) {
    return v.is_array() && v.size() == 2 && v[0].is_string() && v[1].is_string();
}

bool is_weight(const Json& v) {
    return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), is_rational_pair);
}

std::string rational_text(const Json& v) { return to_string(rational_from_json(v)); }

std::string weight_text(const Json& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += rational_text(v[i]);
    }
    return out;
}

std::string scalar_text(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// flattened (column, cell) pairs; split_pairs turns x into x_num, x_den
std::vector<std::pair<std::string, std::string>> flatten(const Json& line, bool split_pairs) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [key, v] : line.items()) {
        if (is_rational_pair(v)) {
            if (split_pairs) {
                out.emplace_back(key + "_num", v[0].get<std::string>());
                out.emplace_back(key + "_den", v[1].get<std::string>());
            } else {
                out.emplace_back(key, rational_text(v));
            }
        } else if (is_weight(v)) {
            out.emplace_back(key, weight_text(v));
        } else {
            out.emplace_back(key, scalar_text(v));
        }
    }
    return out;
}

}  // namespace

Json rational_json(const Rational& q) { return Json::array({numer(q).str(), denom(q).str()}); }

Rational rational_from_json(const Json& j) {
    if (!is_rational_pair(j)) throw Error(ErrorKind::ParseError, "expected [\"num\",\"den\"], got " + j.dump());
    return parse_rational(j[0].get<std::string>() + "/" + j[1].get<std::string>());
}

Json weight_json(const WeightVector& w) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < w.size(); ++i) out.push_back(rational_json(w(i)));
    return out;
}

WeightVector weight_from_json(const Json& j) {
    WeightVector w(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) w(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
    return w;
}

Json spectrum_line_json(const SpectrumLine& line) {
    const auto& m = line.member;
    Json j = Json::object();
    j["family"] = family_name(m.family);
    j["n"] = m.n;
    j["j"] = m.j;
    j["k"] = m.k;
    j["s"] = has_s(m.family) ? Json(m.s) : Json(nullptr);
    j["weight"] = weight_json(m.parent_weight);
    j["dim"] = line.dim;
    j["mult"] = line.multiplicity;
    j["op"] = op_name(line.op);
    j["eig"] = rational_json(line.eigenvalue);
    return j;
}

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "table") return Format::Table;
    throw Error(ErrorKind::ParseError, "unknown format '" + name + "'");
}

std::string render(const OutputDocument& doc, Format format) {
    switch (format) {
        case Format::Json: return render_json(doc);
        case Format::Csv: return render_csv(doc);
        case Format::Table: return render_table(doc);
    }
    return {};
}

std::string render_json(const OutputDocument& doc) {
    Json j = Json::object();
    j["command"] = doc.command;
    j["params"] = doc.params;
    j["lines"] = Json::array();
    for (const auto& l : doc.lines) j["lines"].push_back(l);
    if (doc.checks) j["checks"] = *doc.checks;
    j["status"] = doc.ok() ? "ok" : "violated";
    j["violations"] = doc.violations;
    return j.dump(2) + "\n";
}

std::string render_csv(const OutputDocument& doc) {
    std::ostringstream out;
    bool header = false;
    for (const auto& l : doc.lines) {
        const auto cells = flatten(l, true);
        if (!header) {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i].first;
            out << "\n";
            header = true;
        }
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i].second;
        out << "\n";
    }
    return out.str();
}

std::string render_table(const OutputDocument& doc) {
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    for (const auto& l : doc.lines) rows.push_back(flatten(l, false));
    std::ostringstream out;
    out << doc.command << "\n";
    if (!rows.empty()) {
        std::vector<std::size_t> width(rows.front().size());
        for (std::size_t c = 0; c < width.size(); ++c) width[c] = rows.front()[c].first.size();
        for (const auto& r : rows)
            for (std::size_t c = 0; c < r.size() && c < width.size(); ++c)
                width[c] = std::max(width[c], r[c].second.size());
        auto emit = [&](auto cell) {
            for (std::size_t c = 0; c < width.size(); ++c) {
                const std::string s = cell(c);
                out << (c ? "  " : "") << s << std::string(width[c] - std::min(width[c], s.size()), ' ');
            }
            out << "\n";
        };
        emit([&](std::size_t c) { return rows.front()[c].first; });
        for (const auto& r : rows) emit([&](std::size_t c) { return c < r.size() ? r[c].second : std::string(); });
    }
    if (doc.checks) out << "checks: " << *doc.checks << "\n";
    out << "status: " << (doc.ok() ? "ok" : "violated") << "\n";
    for (const auto& v : doc.violations) out << "  " << v << "\n";
    return out.str();
}

std::vector<std::vector<std::pair<std::string, std::string>>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> header;
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
        return parts;
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header.empty()) {
            header = split(line);
            continue;
        }
        const auto cells = split(line);
        if (cells.size() != header.size()) throw Error(ErrorKind::ParseError, "ragged csv row: " + line);
        std::vector<std::pair<std::string, std::string>> row;
        for (std::size_t i = 0; i < cells.size(); ++i) row.emplace_back(header[i], cells[i]);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hspin
