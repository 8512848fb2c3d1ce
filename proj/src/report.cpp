#include "picard/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace picard {

using nlohmann::json;

std::string cell_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

void Report::add_row(std::vector<json> row) {
    if (row.size() != columns.size()) throw std::logic_error("report row width differs from the columns");
    rows.push_back(std::move(row));
}

void Report::check(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
}

bool Report::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

json Report::to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    json rs = json::array();
    for (const auto& r : rows) {
        json o = json::object();
        for (std::size_t k = 0; k < columns.size(); ++k) o[columns[k]] = r[k];
        rs.push_back(o);
    }
    j["columns"] = columns;
    j["rows"] = rs;
    j["results"] = results;
    json cs = json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = cs;
    j["pass"] = pass();
    j["seconds"] = seconds;
    return j;
}

std::string Report::to_table() const {
    std::ostringstream os;
    os << "# " << command;
    if (!inputs.empty()) os << "  " << inputs.dump();
    os << "\n";
    if (!columns.empty()) {
        std::vector<std::size_t> w(columns.size());
        for (std::size_t k = 0; k < columns.size(); ++k) {
            w[k] = columns[k].size();
            for (const auto& r : rows) w[k] = std::max(w[k], cell_text(r[k]).size());
        }
        auto line = [&](auto cell) {
            for (std::size_t k = 0; k < columns.size(); ++k) {
                if (k) os << "  ";
                if (k + 1 == columns.size()) os << cell(k);
                else os << std::left << std::setw(int(w[k])) << cell(k);
            }
            os << "\n";
        };
        line([&](std::size_t k) { return columns[k]; });
        line([&](std::size_t k) { return std::string(w[k], '-'); });
        for (const auto& r : rows) line([&](std::size_t k) { return cell_text(r[k]); });
    }
    for (const auto& [k, v] : results.items()) os << k << ": " << cell_text(v) << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << "  " << c.detail;
        os << "\n";
    }
    if (!checks.empty()) os << (pass() ? "all checks pass" : "some checks FAIL") << "\n";
    os << std::fixed << std::setprecision(3) << "time: " << seconds << " s\n";
    return os.str();
}

std::string Report::to_csv() const {
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    };
    std::ostringstream os;
    for (std::size_t k = 0; k < columns.size(); ++k) os << (k ? "," : "") << quote(columns[k]);
    os << "\n";
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << quote(cell_text(r[k]));
        os << "\n";
    }
    return os.str();
}

}  // namespace picard
