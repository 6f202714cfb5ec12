// Copyright 2026 The Holder Arcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holder/arc_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "holder/error.hpp"

namespace holder::io {

namespace {

using nlohmann::json;

std::vector<double> number_array(const json& doc, const std::string& key)
{
    if (!doc.contains(key)) {
        throw ParseError("arc JSON: missing field \"" + key + "\"");
    }
    const auto& arr = doc.at(key);
    if (!arr.is_array()) {
        throw ParseError("arc JSON: field \"" + key + "\" is not an array");
    }
    std::vector<double> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number()) {
            throw ParseError("arc JSON: field \"" + key + "\" element " + std::to_string(i)
                             + " is not a number");
        }
        out.push_back(arr[i].get<double>());
    }
    return out;
}

double parse_cell(const std::string& cell, const std::string& field, std::size_t line)
{
    double v = 0.0;
    const char* first = cell.data();
    const char* last = first + cell.size();
    if (!cell.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (cell.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError("arc CSV line " + std::to_string(line) + ": field \"" + field
                         + "\": cannot parse '" + cell + "'");
    }
    return v;
}

std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

SampledArc build(std::vector<double> t, const std::vector<double>& x, const std::vector<double>& y,
                 SampledArc::Meta meta)
{
    if (t.size() != x.size() || t.size() != y.size()) {
        throw ParseError("arc: columns have different lengths (" + std::to_string(t.size()) + ", "
                         + std::to_string(x.size()) + ", " + std::to_string(y.size()) + ")");
    }
    std::vector<Point> pts(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        pts[i] = {x[i], y[i]};
    }
    try {
        return SampledArc(std::move(t), std::move(pts), std::move(meta));
    } catch (const ArcError& e) {
        throw ParseError(std::string("arc: ") + e.what());
    }
}

} // namespace

std::string format_number(double value)
{
    if (value == 0.0 && std::signbit(value)) {
        return "-0.0"; // JSON readers take "-0" for the integer 0
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

ArcFormat format_for_path(const std::string& path)
{
    constexpr std::string_view ext = ".csv";
    if (path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
        return ArcFormat::csv;
    }
    return ArcFormat::json;
}

SampledArc read_arc_json(std::istream& in)
{
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("arc JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("arc JSON: top level is not an object");
    }
    const std::string key = doc.contains("t") ? "t" : (doc.contains("u") ? "u" : "t");
    auto t = number_array(doc, key);
    const auto x = number_array(doc, "x");
    const auto y = number_array(doc, "y");
    SampledArc::Meta meta;
    if (doc.contains("meta")) {
        const auto& m = doc.at("meta");
        if (!m.is_object()) {
            throw ParseError("arc JSON: field \"meta\" is not an object");
        }
        for (const auto& [k, v] : m.items()) {
            meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
    }
    return build(std::move(t), x, y, std::move(meta));
}

SampledArc read_arc_csv(std::istream& in)
{
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) {
        throw ParseError("arc CSV line 1: missing header");
    }
    ++lineno;
    const auto header = trim(line);
    if (header != "t,x,y" && header != "u,x,y") {
        throw ParseError("arc CSV line 1: expected header \"t,x,y\", got \"" + header + "\"");
    }
    const std::string fields[3] = {header.substr(0, 1), "x", "y"};
    std::vector<double> cols[3];
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        std::stringstream row(line);
        std::string cell;
        int c = 0;
        while (std::getline(row, cell, ',')) {
            if (c >= 3) {
                throw ParseError("arc CSV line " + std::to_string(lineno) + ": too many fields");
            }
            cols[c].push_back(parse_cell(trim(cell), fields[c], lineno));
            ++c;
        }
        if (c != 3) {
            throw ParseError("arc CSV line " + std::to_string(lineno) + ": field \"" + fields[c]
                             + "\" missing");
        }
    }
    return build(std::move(cols[0]), cols[1], cols[2], {});
}

SampledArc read_arc(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open arc file '" + path + "'");
    }
    return format_for_path(path) == ArcFormat::csv ? read_arc_csv(in) : read_arc_json(in);
}

void write_arc_json(std::ostream& out, const SampledArc& arc, const std::string& param_key)
{
    // Written by hand so the numbers use the same 17-digit format as CSV.
    auto write_column = [&](const char* key, auto&& get) {
        out << "  \"" << key << "\": [";
        for (std::size_t i = 0; i < arc.size(); ++i) {
            out << (i ? ", " : "") << format_number(get(i));
        }
        out << "]";
    };
    out << "{\n";
    if (!arc.meta().empty()) {
        out << "  \"meta\": " << json(arc.meta()).dump() << ",\n";
    }
    write_column(param_key.c_str(), [&](std::size_t i) { return arc.param(i); });
    out << ",\n";
    write_column("x", [&](std::size_t i) { return arc.point(i).x; });
    out << ",\n";
    write_column("y", [&](std::size_t i) { return arc.point(i).y; });
    out << "\n}\n";
}

void write_arc_csv(std::ostream& out, const SampledArc& arc, const std::string& param_key)
{
    out << param_key << ",x,y\n";
    for (std::size_t i = 0; i < arc.size(); ++i) {
        out << format_number(arc.param(i)) << ',' << format_number(arc.point(i).x) << ','
            << format_number(arc.point(i).y) << '\n';
    }
}

void write_arc(const std::string& path, const SampledArc& arc, const std::string& param_key)
{
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write arc file '" + path + "'");
    }
    if (format_for_path(path) == ArcFormat::csv) {
        write_arc_csv(out, arc, param_key);
    } else {
        write_arc_json(out, arc, param_key);
    }
}

} // namespace holder::io
